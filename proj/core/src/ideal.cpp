// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "pronyvar/ideal.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <numeric>
#include <sstream>

#include "pronyvar/errors.hpp"

namespace pronyvar {

namespace {

constexpr double kEchelonRelTol = 1e-10;
constexpr double kStabilizeAngleTol = 1e-8;

struct Echelon {
  Eigen::MatrixXcd rows;
  std::vector<std::size_t> pivots;  // pivots[i] is the pivot column of row i, ascending
};

// Reduced echelon form of the row span, pivoting from the last (grlex
// largest) column downward with partial pivoting inside each column.
Echelon reduced_echelon(Eigen::MatrixXcd g, double rel_tol) {
  Eigen::Index k = g.rows(), cols = g.cols();
  double scale = k > 0 ? g.cwiseAbs().maxCoeff() : 0.0;
  if (scale == 0.0) {
    if (k > 0) throw numeric_error("reduced_echelon: zero kernel frame");
    return Echelon{std::move(g), {}};
  }
  double threshold = rel_tol * scale;

  std::vector<bool> used(static_cast<std::size_t>(k), false);
  std::vector<std::pair<std::size_t, Eigen::Index>> assignments;  // (pivot column, row)
  for (Eigen::Index col = cols - 1; col >= 0 && assignments.size() < static_cast<std::size_t>(k); --col) {
    Eigen::Index best = -1;
    double best_abs = threshold;
    for (Eigen::Index r = 0; r < k; ++r)
      if (!used[static_cast<std::size_t>(r)] && std::abs(g(r, col)) > best_abs) {
        best_abs = std::abs(g(r, col));
        best = r;
      }
    if (best < 0) continue;
    used[static_cast<std::size_t>(best)] = true;
    g.row(best) /= g(best, col);
    for (Eigen::Index r = 0; r < k; ++r) {
      if (r == best || g(r, col) == 0.0) continue;
      g.row(r) -= g(r, col) * g.row(best);
      g(r, col) = 0.0;
    }
    assignments.emplace_back(static_cast<std::size_t>(col), best);
  }
  if (assignments.size() < static_cast<std::size_t>(k))
    throw numeric_error("reduced_echelon: kernel frame lost rank at the pivot threshold");

  std::sort(assignments.begin(), assignments.end());
  Echelon e;
  e.rows.resize(k, cols);
  for (Eigen::Index i = 0; i < k; ++i) {
    e.rows.row(i) = g.row(assignments[static_cast<std::size_t>(i)].second);
    e.pivots.push_back(assignments[static_cast<std::size_t>(i)].first);
  }
  // Clear sub-threshold residue so truncations embed exactly.
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      if (std::abs(e.rows(i, j)) <= threshold) e.rows(i, j) = 0.0;
  return e;
}

IdealBasis kernel_from_svd(const MomentMatrix& matrix, const RankOptions& options) {
  const Eigen::MatrixXcd& h = matrix.values;
  if (h.rows() == 0 || h.cols() == 0) throw validation_error("numerical_kernel: empty matrix");

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(h, Eigen::ComputeFullV);
  KernelReport report =
      decide_rank(svd.singularValues(), static_cast<int>(h.rows()), static_cast<int>(h.cols()), options);

  IdealBasis ideal;
  ideal.row_basis = matrix.rows;
  ideal.column_basis = matrix.cols;
  ideal.report = report;
  ideal.orthonormal_kernel = svd.matrixV().rightCols(report.nullity());

  Echelon echelon = reduced_echelon(ideal.orthonormal_kernel.transpose(), kEchelonRelTol);
  ideal.pivots = echelon.pivots;
  ideal.generators.reserve(static_cast<std::size_t>(echelon.rows.rows()));
  for (Eigen::Index i = 0; i < echelon.rows.rows(); ++i)
    ideal.generators.emplace_back(matrix.cols, echelon.rows.row(i).transpose());
  return ideal;
}

}  // namespace

bool IdealBasis::is_pivot(std::size_t column) const {
  return std::binary_search(pivots.begin(), pivots.end(), column);
}

std::vector<Poly> IdealBasis::truncated_generators(int delta) const {
  std::size_t prefix = column_basis.prefix_size(delta);
  std::vector<Poly> out;
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (pivots[i] < prefix) out.push_back(generators[i]);
  return out;
}

std::vector<std::size_t> IdealBasis::standard_monomial_indices(int delta) const {
  std::size_t prefix = column_basis.prefix_size(delta);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < prefix; ++j)
    if (!is_pivot(j)) out.push_back(j);
  return out;
}

IdealBasis numerical_kernel(const MomentMatrix& matrix, const RankOptions& options) {
  return kernel_from_svd(matrix, options);
}

namespace {

FiltrationBasis row_basis_for(const MomentTable& table, int row_degree, const RecoveryOptions& options) {
  const Space& space = table.space();
  RingKind ring = options.row_ring.value_or(space.row_ring());
  if (space.kind == Space::Kind::Affine && ring == RingKind::LaurentL)
    throw validation_error("recover_truncated_ideal: Laurent rows need the torus");
  FiltrationKind filtration =
      space.kind == Space::Kind::Torus ? FiltrationKind::MaxDegree : FiltrationKind::TotalDegree;
  return build_basis(space.n, row_degree, ring, filtration);
}

FiltrationBasis col_basis_for(const MomentTable& table, int col_degree, const RecoveryOptions& options) {
  const Space& space = table.space();
  RingKind ring = options.col_ring.value_or(RingKind::PolynomialR);
  if (space.kind == Space::Kind::Affine && ring == RingKind::LaurentL)
    throw validation_error("recover_truncated_ideal: Laurent columns need the torus");
  FiltrationKind filtration = space.kind == Space::Kind::Torus || ring == RingKind::LaurentL
                                  ? FiltrationKind::MaxDegree
                                  : FiltrationKind::TotalDegree;
  return build_basis(space.n, col_degree, ring, filtration);
}

}  // namespace

IdealBasis recover_truncated_ideal(const MomentTable& table, int col_degree, const RecoveryOptions& options) {
  if (col_degree < 0) throw validation_error("recover_truncated_ideal: negative column degree");
  FiltrationBasis cols = col_basis_for(table, col_degree, options);

  auto kernel_at = [&](int row_degree) {
    FiltrationBasis rows = row_basis_for(table, row_degree, options);
    MomentMatrix h = assemble(table, rows, cols, options.threads);
    return numerical_kernel(h, options.rank);
  };

  if (const auto* fixed = std::get_if<FixedRows>(&options.policy)) {
    int row_degree = fixed->row_degree < 0 ? col_degree : fixed->row_degree;
    return kernel_at(row_degree);
  }
  if (const auto* bound = std::get_if<DeltaBound>(&options.policy)) {
    if (bound->delta < 0) throw validation_error("recover_truncated_ideal: negative delta");
    return kernel_at(col_degree + bound->delta);
  }

  const auto& sweep = std::get<Stabilize>(options.policy);
  int start = sweep.start.value_or(col_degree);
  if (sweep.step < 1) throw validation_error("recover_truncated_ideal: stabilization step must be >= 1");
  if (sweep.max_degree < start)
    throw validation_error("recover_truncated_ideal: stabilization range is empty");

  IdealBasis before = kernel_at(start);
  IdealBasis last = before;
  for (int d = start + sweep.step; d <= sweep.max_degree; d += sweep.step) {
    IdealBasis current = kernel_at(d);
    if (same_subspace(last.orthonormal_kernel, current.orthonormal_kernel, kStabilizeAngleTol)) {
      current.stabilized_at = d - sweep.step;
      return current;
    }
    before = std::move(last);
    last = std::move(current);
  }
  std::ostringstream os;
  os << "recover_truncated_ideal: kernel did not stabilize by row degree " << sweep.max_degree
     << " (last nullities " << before.nullity() << " -> " << last.nullity()
     << "); raise the sweep limit or the moment degree";
  throw stabilization_error(os.str(), std::move(before), std::move(last));
}

ContainmentReport verify_containment(const std::vector<Poly>& generators, const MomentMatrix& matrix) {
  ContainmentReport report;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix.values);
  report.matrix_norm = svd.singularValues().size() > 0 ? svd.singularValues()[0] : 0.0;
  for (const auto& g : generators) {
    Poly embedded = embed(g, matrix.cols);
    double gnorm = embedded.coeffs().norm();
    double r = 0.0;
    if (gnorm > 0.0 && report.matrix_norm > 0.0)
      r = (matrix.values * embedded.coeffs()).norm() / (report.matrix_norm * gnorm);
    report.residuals.push_back(r);
    report.max_residual = std::max(report.max_residual, r);
  }
  return report;
}

}  // namespace pronyvar
