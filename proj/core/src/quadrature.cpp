// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "pronyvar/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "pronyvar/errors.hpp"

namespace pronyvar {

QuadratureRule gauss_legendre(int count, double a, double b) {
  if (count < 1) throw validation_error("gauss_legendre: need at least one node");
  if (!(a < b)) throw validation_error("gauss_legendre: empty or reversed domain");

  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(count, count);
  for (int k = 1; k < count; ++k) {
    double beta = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  if (es.info() != Eigen::Success) throw numeric_error("gauss_legendre: Jacobi eigensolve failed");

  QuadratureRule rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  double half = 0.5 * (b - a);
  for (int i = 0; i < count; ++i) {
    rule.nodes[i] = a + half * (es.eigenvalues()[i] + 1.0);
    double first = es.eigenvectors()(0, i);
    rule.weights[i] = 2.0 * first * first * half;
  }
  return rule;
}

QuadratureRule periodic_trapezoid(int count, double a, double b) {
  if (count < 1) throw validation_error("periodic_trapezoid: need at least one node");
  if (!(a < b)) throw validation_error("periodic_trapezoid: empty or reversed domain");
  QuadratureRule rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  double h = (b - a) / count;
  for (int i = 0; i < count; ++i) {
    rule.nodes[i] = a + i * h;
    rule.weights[i] = h;
  }
  return rule;
}

int default_node_count(int moment_degree, int param_degree) {
  int d = std::max(1, moment_degree);
  int p = std::max(1, param_degree);
  return 4 * d * p + 1;
}

}  // namespace pronyvar
