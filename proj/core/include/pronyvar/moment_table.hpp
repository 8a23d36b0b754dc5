// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <complex>
#include <string>

#include "pronyvar/measure.hpp"
#include "pronyvar/quadrature.hpp"

namespace pronyvar {

/// Whether table values came from closed forms or from numeric integration.
enum class Provenance { Exact, Quadrature };

std::string to_string(Provenance p);

/// Values of the moment functional sigma(x^a) over one filtration basis.
/// All downstream recovery consumes measures only through this table.
class MomentTable {
 public:
  MomentTable() = default;
  MomentTable(Space space, FiltrationBasis basis, Eigen::VectorXcd values, Provenance provenance,
              int quadrature_nodes);

  const Space& space() const { return space_; }
  const FiltrationBasis& basis() const { return basis_; }
  int max_degree() const { return basis_.degree(); }
  const Eigen::VectorXcd& values() const { return values_; }
  Provenance provenance() const { return provenance_; }
  /// Largest node count used; 0 when every entry is exact.
  int quadrature_nodes() const { return quadrature_nodes_; }

  bool covers(const MultiIndex& a) const { return basis_.contains(a); }
  /// sigma(x^a); missing coverage raises validation_error naming the index.
  std::complex<double> value(const MultiIndex& a) const;
  /// sigma(p) by linearity over the support of p.
  std::complex<double> apply(const Poly& p) const;

 private:
  Space space_;
  FiltrationBasis basis_;
  Eigen::VectorXcd values_;
  Provenance provenance_ = Provenance::Exact;
  int quadrature_nodes_ = 0;
};

/// Moments of a measure over `basis`. Atomic bodies and exponential curves
/// on the torus evaluate in closed form; affine curves integrate with
/// Gauss-Legendre (algebraic coordinates) or the periodic trapezoid rule
/// (trigonometric coordinates), with a refined-rule consistency check.
MomentTable moments(const MeasureSpec& measure, const FiltrationBasis& basis,
                    const QuadratureConfig& config = {});

/// Moments of the unweighted arc-parameter measure of a single curve body,
/// used as the reference measure when splitting a curve-supported measure
/// into density times support.
MomentTable uniform_curve_moments(const Space& space, const Body& body, const FiltrationBasis& basis,
                                  const QuadratureConfig& config = {});

}  // namespace pronyvar
