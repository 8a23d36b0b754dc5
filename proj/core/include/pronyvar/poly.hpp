// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <complex>
#include <string>

#include "pronyvar/basis.hpp"

namespace pronyvar {

/// Conjugation rule attached to an ambient space. Trivial: identity (affine
/// space, bilinear pairing). Laurent: coefficients are conjugated and
/// exponents negated, matching conjugation of functions on the unit torus.
enum class InvolutionKind { Trivial, Laurent };

std::string to_string(InvolutionKind k);

/// Element of one filtration step, stored densely over its FiltrationBasis.
class Poly {
 public:
  Poly() = default;
  /// coeffs.size() must equal basis.size().
  Poly(FiltrationBasis basis, Eigen::VectorXcd coeffs);

  static Poly zero(FiltrationBasis basis);
  static Poly constant(FiltrationBasis basis, std::complex<double> c);
  static Poly monomial(FiltrationBasis basis, const MultiIndex& a, std::complex<double> c = 1.0);

  const FiltrationBasis& basis() const { return basis_; }
  const Eigen::VectorXcd& coeffs() const { return c_; }
  /// Coefficient of x^a; zero when a lies outside the basis.
  std::complex<double> coeff(const MultiIndex& a) const;

  int ambient_dimension() const { return basis_.ambient_dimension(); }
  /// Largest filtration degree among non-zero terms; 0 for the zero element.
  int support_degree() const;
  bool is_zero(double tol = 0.0) const;
  double norm() const { return c_.norm(); }

  Poly& operator*=(std::complex<double> s);
  std::string to_string() const;

 private:
  FiltrationBasis basis_;
  Eigen::VectorXcd c_;
};

Poly operator*(std::complex<double> s, const Poly& p);
Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
/// Product re-embedded into the smallest basis containing its support.
Poly operator*(const Poly& a, const Poly& b);

/// Copies p into a larger basis. Every non-zero term must be admissible in
/// `target`.
Poly embed(const Poly& p, const FiltrationBasis& target);

/// Re-expresses p over the Laurent max-degree basis of its support degree.
Poly to_laurent(const Poly& p);

/// Applies the involution. The Laurent rule requires a Laurent basis so that
/// exponent negation stays inside; use to_laurent() first for a polynomial
/// with non-negative exponents.
Poly involve(const Poly& p, InvolutionKind kind);

/// Evaluates at a point, coordinate k substituted for x_k. Negative exponents
/// reject zero coordinates.
std::complex<double> evaluate(const Poly& p, const Eigen::VectorXcd& point);

/// x^a at a point; same domain rule as evaluate().
std::complex<double> evaluate_monomial(const MultiIndex& a, const Eigen::VectorXcd& point);

}  // namespace pronyvar
