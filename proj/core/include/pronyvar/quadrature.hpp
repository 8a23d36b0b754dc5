// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <optional>

namespace pronyvar {

/// Nodes and weights of a one-dimensional rule on [a, b]. sum(weights) equals
/// b - a; integrals are taken against plain dt, without normalizing by the
/// domain length.
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;

  template <class F>
  auto integrate(F&& f) const -> decltype(f(0.0)) {
    decltype(f(0.0)) acc{};
    for (Eigen::Index i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

/// Gauss-Legendre rule, exact for polynomials of degree <= 2*count - 1.
/// Computed from the symmetric tridiagonal Jacobi matrix of the Legendre
/// recurrence (Golub-Welsch), then mapped affinely onto [a, b].
QuadratureRule gauss_legendre(int count, double a, double b);

/// Left-endpoint composite rule with equal weights on [a, b); for 1-periodic
/// integrands this is the trapezoid rule, exact for trigonometric polynomials
/// of frequency below count.
QuadratureRule periodic_trapezoid(int count, double a, double b);

/// Controls numeric moment integration.
struct QuadratureConfig {
  /// Override the node count; otherwise default_node_count() decides.
  std::optional<int> nodes;
  /// Re-integrate on a refined rule and compare; disagreement beyond
  /// validation_tol raises numeric_error.
  bool validate = true;
  double validation_tol = 1e-10;
  /// Integrate numerically even where closed forms exist (testing hook).
  bool force_quadrature = false;
  int threads = 1;
};

/// Default node count when integrating monomial moments up to
/// `moment_degree` along a curve whose coordinates have degree (algebraic or
/// trigonometric) at most `param_degree`.
int default_node_count(int moment_degree, int param_degree);

}  // namespace pronyvar
