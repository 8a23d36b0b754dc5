// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pronyvar/ideal.hpp"

namespace pronyvar {

struct PronyOptions {
  /// Seeds the random combination of multiplication operators.
  std::uint64_t seed = 42;
  /// Relative eigenvalue separation below which a draw is rejected.
  double cluster_tol = 1e-7;
  /// Redraws before giving up on separation (a warning is recorded).
  int max_retries = 5;
  /// Imaginary parts below this are snapped to zero for affine points.
  double imag_snap = 1e-9;
};

/// Finitely-atomic reconstruction: points (one row per atom, deterministic
/// order), weights, and the residuals certifying them.
struct AtomicRecovery {
  Eigen::MatrixXcd points;
  Eigen::VectorXcd weights;
  /// max |g(point)| over recovered ideal generators and points.
  double point_residual = 0.0;
  /// Euclidean misfit of the weighted evaluations against the whole table.
  double weight_residual = 0.0;
  std::vector<std::string> warnings;

  int count() const { return static_cast<int>(points.rows()); }
};

/// Common support of the ideal's zero set via multiplication operators on
/// the standard monomials: a random combination is diagonalized once and
/// each coordinate is read off as a Rayleigh quotient of its own operator.
/// Requires every standard monomial shifted by one variable to stay inside
/// the column basis; otherwise raises validation_error advising a larger
/// degree. warnings collects separation problems that retries never fixed.
std::vector<Eigen::VectorXcd> solve_points(const IdealBasis& ideal, Space::Kind space,
                                           const PronyOptions& options, std::vector<std::string>* warnings);

/// Least-squares weights against every covered moment; returns the fit
/// residual alongside. Coincident points make the system rank-deficient and
/// raise numeric_error.
std::pair<Eigen::VectorXcd, double> solve_weights(const std::vector<Eigen::VectorXcd>& points,
                                                  const MomentTable& table);

/// Square and almost-square rank agreement at one degree: when the matrix
/// with one shell fewer rows already has the same rank, the atom count has
/// saturated and equals that rank.
struct RankCertificate {
  int rank = 0;
  bool stabilized = false;
  KernelReport square;
  KernelReport rectangular;
};

RankCertificate rank_certificate(const MomentTable& table, int degree, const RankOptions& options = {});

/// One-call pipeline: kernel at rows = cols = degree, then points, then
/// weights. `rank` overrides the numerical rank decision.
AtomicRecovery recover_atoms(const MomentTable& table, int degree, std::optional<int> rank = {},
                             const PronyOptions& options = {}, const RankOptions& rank_options = {},
                             int threads = 1);

}  // namespace pronyvar
