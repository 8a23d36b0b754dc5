// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <complex>
#include <optional>
#include <variant>
#include <vector>

#include "pronyvar/poly.hpp"

namespace pronyvar {

/// Ambient space the measure lives on. Affine space pairs with ordinary
/// polynomials and the trivial involution; the unit torus pairs with Laurent
/// polynomials and the conjugation involution.
struct Space {
  enum class Kind { Affine, Torus };
  Kind kind = Kind::Affine;
  int n = 0;

  InvolutionKind involution() const {
    return kind == Kind::Torus ? InvolutionKind::Laurent : InvolutionKind::Trivial;
  }
  /// Ring whose monomials are unbounded test functions on this space.
  RingKind row_ring() const { return kind == Kind::Torus ? RingKind::LaurentL : RingKind::PolynomialR; }
  FiltrationKind natural_filtration() const {
    return kind == Kind::Torus ? FiltrationKind::MaxDegree : FiltrationKind::TotalDegree;
  }
  bool operator==(const Space& o) const { return kind == o.kind && n == o.n; }
};

/// Dirac mass at one point, stored in ambient coordinates. Torus points must
/// have unit modulus in every coordinate.
struct AtomicBody {
  Eigen::VectorXcd point;
};

/// Weighted exponential line on the torus: t -> (e^{2 pi i v_1 t}, ...,
/// e^{2 pi i v_n t}) for t in [0, 1). Its closure is the binomial variety cut
/// out by x^a - x^b over the pairs with <a - b, v> = 0.
struct TrigCurveBody {
  std::vector<int> direction;
};

/// One coordinate of a parametrized affine curve:
///   f(t) = sum_k poly[k] t^k + sum_k cos_coeffs[k-1] cos(2 pi k t)
///        + sum_k sin_coeffs[k-1] sin(2 pi k t).
/// Trigonometric terms may only be combined with a constant algebraic part,
/// so a curve is either algebraic in t or 1-periodic.
struct CoordinateFunction {
  std::vector<double> poly;
  std::vector<double> cos_coeffs;
  std::vector<double> sin_coeffs;

  double operator()(double t) const;
  int algebraic_degree() const;
  int trig_degree() const;
  bool has_trig() const { return trig_degree() > 0; }
};

/// Curve in affine space given by explicit coordinate functions on [a, b].
/// The carried measure is the pushforward of dt on [a, b], not normalized.
struct AffineCurveBody {
  std::vector<CoordinateFunction> coords;
  double a = 0.0;
  double b = 1.0;

  bool periodic() const;
  /// Largest coordinate degree, algebraic or trigonometric.
  int param_degree() const;
};

using Body = std::variant<AtomicBody, TrigCurveBody, AffineCurveBody>;

/// One weighted summand: weight * (density d(body measure)). The density is
/// a polynomial (Laurent on the torus) evaluated along the body.
struct WeightedComponent {
  std::complex<double> weight{1.0, 0.0};
  Body body;
  std::optional<Poly> density;
};

/// Finite signed/complex combination of weighted bodies on one space.
struct MeasureSpec {
  Space space;
  std::vector<WeightedComponent> terms;

  /// Checks dimensions, space/body compatibility, torus moduli, density
  /// rings, and coordinate-function shape. Throws validation_error.
  void validate() const;
};

/// Ambient dimension a body claims.
int body_dimension(const Body& body);
bool body_is_curve(const Body& body);

/// Point reached by a curve body at parameter t.
Eigen::VectorXcd curve_point(const Space& space, const Body& body, double t);

/// Parameter values of `count` evenly spread samples of a curve body,
/// midpoint-offset so that endpoints of a non-periodic domain are avoided.
std::vector<double> curve_sample_parameters(const Body& body, int count);

}  // namespace pronyvar
