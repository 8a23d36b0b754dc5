// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pronyvar/errors.hpp"
#include "pronyvar/kernel.hpp"
#include "pronyvar/moment_matrix.hpp"

namespace pronyvar {

/// Reduced echelon description of one filtration step of the recovered
/// annihilator ideal. Generators have unit coefficient on their pivot
/// monomial (the grlex-largest usable one), zeros at every other pivot, and
/// strictly increasing pivots; coefficients below the echelon threshold are
/// cleared. Generators whose pivot degree is <= delta span the degree-delta
/// truncation of the kernel.
struct IdealBasis {
  FiltrationBasis row_basis;
  FiltrationBasis column_basis;
  std::vector<Poly> generators;
  /// Pivot position in column_basis per generator, strictly increasing.
  std::vector<std::size_t> pivots;
  /// Orthonormal kernel frame (column_basis.size() x nullity), kept for
  /// subspace comparisons.
  Eigen::MatrixXcd orthonormal_kernel;
  KernelReport report;
  /// Row degree at which a stabilization sweep first saw the settled kernel;
  /// -1 for fixed row policies.
  int stabilized_at = -1;

  int nullity() const { return static_cast<int>(generators.size()); }
  bool is_pivot(std::size_t column) const;
  /// Generators with pivot degree <= delta; their span is the degree-delta
  /// truncation of the recovered ideal.
  std::vector<Poly> truncated_generators(int delta) const;
  /// Column indices of non-pivot (standard) monomials of degree <= delta.
  std::vector<std::size_t> standard_monomial_indices(int delta) const;
};

/// SVD kernel of a moment matrix in reduced echelon form.
IdealBasis numerical_kernel(const MomentMatrix& matrix, const RankOptions& options = {});

/// Row policies for recover_truncated_ideal. FixedRows pins the row degree;
/// DeltaBound uses rows of degree cols + delta, the right slack when the
/// measure is a degree-delta density against a non-negative measure;
/// Stabilize raises the row degree until the kernel stops shrinking.
struct FixedRows {
  int row_degree;
};
struct DeltaBound {
  int delta;
};
struct Stabilize {
  /// First row degree to try; defaults to the column degree.
  std::optional<int> start;
  int step = 1;
  int max_degree;
};
using RowPolicy = std::variant<FixedRows, DeltaBound, Stabilize>;

struct RecoveryOptions {
  RowPolicy policy = FixedRows{-1};  // -1: square, rows at the column degree
  /// Rows default to the space's unbounded test functions (Laurent on the
  /// torus); restricting torus rows to ordinary polynomials loses moments
  /// and can leave constants in the kernel.
  std::optional<RingKind> row_ring;
  std::optional<RingKind> col_ring;  // default: ordinary polynomials
  RankOptions rank;
  int threads = 1;
};

/// Carries the last two kernels of an unsettled stabilization sweep.
class stabilization_error : public numeric_error {
 public:
  stabilization_error(const std::string& what, IdealBasis previous, IdealBasis last)
      : numeric_error(what), previous_(std::move(previous)), last_(std::move(last)) {}
  const IdealBasis& previous() const { return previous_; }
  const IdealBasis& last() const { return last_; }

 private:
  IdealBasis previous_, last_;
};

/// Assembles moment matrices per the row policy and returns the kernel as a
/// truncated ideal basis. Stabilization accepts when two consecutive kernels
/// have equal dimension and largest principal angle <= 1e-8, and records the
/// first row degree of the settled pair.
IdealBasis recover_truncated_ideal(const MomentTable& table, int col_degree,
                                   const RecoveryOptions& options = {});

/// Residual evidence that span(generators) lies in ker(matrix.values):
/// per-generator ||H g|| / (sv_max(H) ||g||) and their maximum.
struct ContainmentReport {
  std::vector<double> residuals;
  double max_residual = 0.0;
  double matrix_norm = 0.0;
};

ContainmentReport verify_containment(const std::vector<Poly>& generators, const MomentMatrix& matrix);

}  // namespace pronyvar
