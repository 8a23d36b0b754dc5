// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <vector>

#include "pronyvar/moment_table.hpp"

namespace pronyvar {

/// Generalized moment matrix of a functional: entry (i, j) is
/// sigma(involve(w_i) * v_j) for row monomial w_i and column monomial v_j.
/// With the trivial involution and equal total-degree bases this is the
/// classical Hankel pattern sigma(x^{a+b}); with the Laurent involution it is
/// the Toeplitz pattern sigma(x^{b-a}).
struct MomentMatrix {
  FiltrationBasis rows;
  FiltrationBasis cols;
  InvolutionKind involution = InvolutionKind::Trivial;
  Eigen::MatrixXcd values;
};

/// Fills the matrix from table lookups. The involution is the one native to
/// the table's space. Missing coverage raises validation_error naming the
/// first uncovered index and the table degree that would be required.
MomentMatrix assemble(const MomentTable& table, const FiltrationBasis& rows, const FiltrationBasis& cols,
                      int threads = 1);

/// Factor pair of a moment matrix of a finitely-atomic functional:
/// H = row_factor * diag(weights) * col_factor.
struct VandermondeFactors {
  /// |rows| x r; column j evaluates the involved row monomials at point j.
  Eigen::MatrixXcd row_factor;
  Eigen::VectorXcd weights;
  /// r x |cols|; row j evaluates the column monomials at point j.
  Eigen::MatrixXcd col_factor;

  Eigen::MatrixXcd product() const { return row_factor * weights.asDiagonal() * col_factor; }
};

/// Evaluation factors of sigma = sum_j weights_j * ev_{points_j} over the
/// given bases. assemble() of that functional's table equals product().
VandermondeFactors vandermonde(const std::vector<Eigen::VectorXcd>& points, const Eigen::VectorXcd& weights,
                               const FiltrationBasis& rows, const FiltrationBasis& cols,
                               InvolutionKind involution);

/// Hermitian pairing table of quotient representatives: entry (i, j) is
/// sigma(involve(b_i) * b_j). For a non-negative reference measure this is
/// positive semidefinite, and positive definite exactly when the
/// representatives stay independent in the quotient by the kernel ideal.
struct QuotientGram {
  std::vector<Poly> representatives;
  InvolutionKind involution = InvolutionKind::Trivial;
  Eigen::MatrixXcd values;
};

QuotientGram quotient_gram(const MomentTable& table, const std::vector<Poly>& representatives);

}  // namespace pronyvar
