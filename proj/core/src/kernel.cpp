// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "pronyvar/kernel.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

#include "pronyvar/errors.hpp"

namespace pronyvar {

KernelReport decide_rank(const Eigen::VectorXd& sv, int rows, int cols, const RankOptions& options) {
  KernelReport report;
  report.rows = rows;
  report.cols = cols;
  report.singular_values = sv;

  double rel_tol = options.tolerance.value_or(
      std::max(rows, cols) * std::numeric_limits<double>::epsilon() * 1000.0);
  report.auto_tolerance = !options.tolerance.has_value();
  double sv_max = sv.size() > 0 ? sv[0] : 0.0;
  report.tolerance = rel_tol * sv_max;

  if (options.fixed_rank) {
    if (*options.fixed_rank < 0 || *options.fixed_rank > static_cast<int>(sv.size()))
      throw validation_error("decide_rank: fixed rank outside [0, min(rows, cols)]");
    report.rank = *options.fixed_rank;
    if (report.rank > 0 && report.rank < sv.size() && sv[report.rank] > 0.0)
      report.gap_ratio = sv[report.rank - 1] / sv[report.rank];
    return report;
  }

  if (sv_max == 0.0) {
    report.rank = 0;
    return report;
  }

  // Largest consecutive gap, treating a zero successor as an infinite gap.
  // Only gaps whose left side clears the threshold are candidates: a
  // rounding-noise value followed by an exact zero must not outrank the
  // signal/noise gap above it.
  constexpr double kGapWins = 1e3;
  int best_cut = -1;
  double best_ratio = 0.0;
  for (int k = 0; k + 1 < sv.size(); ++k) {
    if (sv[k] <= report.tolerance) break;
    double ratio = sv[k + 1] > 0.0 ? sv[k] / sv[k + 1] : std::numeric_limits<double>::infinity();
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best_cut = k;
    }
  }
  if (best_cut >= 0 && best_ratio > kGapWins) {
    report.rank = best_cut + 1;
    report.gap_rule_applied = true;
    report.gap_ratio = best_ratio;
  } else {
    int r = 0;
    while (r < sv.size() && sv[r] > report.tolerance) ++r;
    report.rank = r;
    if (r > 0 && r < sv.size() && sv[r] > 0.0) report.gap_ratio = sv[r - 1] / sv[r];
  }
  return report;
}

Eigen::MatrixXcd orthonormal_columns(const Eigen::MatrixXcd& a, double rel_tol) {
  if (a.cols() == 0 || a.rows() == 0) return Eigen::MatrixXcd(a.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU);
  double sv_max = svd.singularValues()[0];
  if (sv_max == 0.0) return Eigen::MatrixXcd(a.rows(), 0);
  Eigen::Index r = 0;
  while (r < svd.singularValues().size() && svd.singularValues()[r] > rel_tol * sv_max) ++r;
  return svd.matrixU().leftCols(r);
}

Eigen::VectorXd principal_angles(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd qa = orthonormal_columns(a);
  Eigen::MatrixXcd qb = orthonormal_columns(b);
  if (qa.cols() == 0 || qb.cols() == 0) return Eigen::VectorXd(0);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(qa.adjoint() * qb);
  Eigen::VectorXd angles(svd.singularValues().size());
  // Descending cosines give ascending angles.
  for (Eigen::Index i = 0; i < angles.size(); ++i)
    angles[i] = std::acos(std::clamp(svd.singularValues()[i], 0.0, 1.0));
  return angles;
}

double containment_angle(const Eigen::MatrixXcd& inner, const Eigen::MatrixXcd& outer) {
  Eigen::MatrixXcd qi = orthonormal_columns(inner);
  if (qi.cols() == 0) return 0.0;
  Eigen::MatrixXcd qo = orthonormal_columns(outer);
  if (qo.cols() == 0) return std::asin(1.0);
  // (I - P_outer) applied to the inner frame; its largest singular value is
  // sin of the largest principal angle, stable for small angles.
  Eigen::MatrixXcd residual = qi - qo * (qo.adjoint() * qi);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(residual);
  return std::asin(std::clamp(svd.singularValues()[0], 0.0, 1.0));
}

bool same_subspace(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double angle_tol) {
  Eigen::MatrixXcd qa = orthonormal_columns(a);
  Eigen::MatrixXcd qb = orthonormal_columns(b);
  if (qa.cols() != qb.cols()) return false;
  if (qa.cols() == 0) return true;
  Eigen::MatrixXcd residual = qa - qb * (qb.adjoint() * qa);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(residual);
  return std::asin(std::clamp(svd.singularValues()[0], 0.0, 1.0)) <= angle_tol;
}

}  // namespace pronyvar
