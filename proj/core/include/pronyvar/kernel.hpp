// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <optional>

namespace pronyvar {

/// How a numerical rank decision was reached.
struct KernelReport {
  int rows = 0;
  int cols = 0;
  Eigen::VectorXd singular_values;
  int rank = 0;
  /// Absolute singular-value threshold that was applied.
  double tolerance = 0.0;
  bool auto_tolerance = true;
  /// True when the largest consecutive singular-value gap decided the rank
  /// instead of the threshold.
  bool gap_rule_applied = false;
  /// sv[rank-1] / sv[rank] when both sides of the cut exist.
  std::optional<double> gap_ratio;

  int nullity() const { return cols - rank; }
};

/// Options for numerical rank decisions. `tolerance` is relative to the
/// largest singular value; unset means max(rows, cols) * eps * 1000. A fixed
/// rank bypasses both the threshold and the gap rule.
struct RankOptions {
  std::optional<double> tolerance;
  std::optional<int> fixed_rank;
};

/// Decides the rank from a descending singular-value list: the largest
/// consecutive gap wins when it exceeds 1000, otherwise values above
/// tolerance * sv_max count. A zero matrix has rank 0.
KernelReport decide_rank(const Eigen::VectorXd& singular_values, int rows, int cols,
                         const RankOptions& options = {});

/// Orthonormal basis of the column span, keeping directions with singular
/// value above rel_tol * sv_max.
Eigen::MatrixXcd orthonormal_columns(const Eigen::MatrixXcd& a, double rel_tol = 1e-12);

/// Principal angles (ascending, radians) between the column spans; inputs
/// need not be orthonormal. Computed from the cosine SVD, accurate away
/// from 0.
Eigen::VectorXd principal_angles(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Largest angle by which span(inner) sticks out of span(outer), via the
/// sine formulation, accurate near 0. Returns 0 for an empty inner span.
double containment_angle(const Eigen::MatrixXcd& inner, const Eigen::MatrixXcd& outer);

/// Equal dimension and containment_angle within angle_tol.
bool same_subspace(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double angle_tol);

}  // namespace pronyvar
