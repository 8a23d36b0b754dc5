// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "pronyvar/moment_matrix.hpp"

#include <cassert>
#include <random>
#include <sstream>

#include "pronyvar/errors.hpp"
#include "pronyvar/parallel.hpp"

namespace pronyvar {

namespace {

MultiIndex pairing_index(const MultiIndex& row, const MultiIndex& col, InvolutionKind involution) {
  return involution == InvolutionKind::Laurent ? col - row : col + row;
}

void check_bases(const MomentTable& table, const FiltrationBasis& rows, const FiltrationBasis& cols) {
  if (rows.empty() || cols.empty()) throw validation_error("assemble: empty row or column basis");
  int n = table.space().n;
  if (rows.ambient_dimension() != n || cols.ambient_dimension() != n)
    throw validation_error("assemble: basis dimension does not match the table's space");
  if (table.space().kind == Space::Kind::Affine && rows.ring() == RingKind::LaurentL)
    throw validation_error("assemble: Laurent rows are only meaningful on the torus");
  if (table.space().kind == Space::Kind::Affine && cols.ring() == RingKind::LaurentL)
    throw validation_error("assemble: Laurent columns are only meaningful on the torus");
}

}  // namespace

MomentMatrix assemble(const MomentTable& table, const FiltrationBasis& rows, const FiltrationBasis& cols,
                      int threads) {
  check_bases(table, rows, cols);
  InvolutionKind involution = table.space().involution();

  MomentMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.involution = involution;
  m.values.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  try {
    parallel_for(rows.size(), threads, [&](std::size_t i) {
      for (std::size_t j = 0; j < cols.size(); ++j)
        m.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            table.value(pairing_index(rows[i], cols[j], involution));
    });
  } catch (const validation_error& e) {
    std::ostringstream os;
    os << "assemble: rows " << rows.describe() << " against cols " << cols.describe()
       << " exceed the table: " << e.what();
    throw validation_error(os.str());
  }

#ifndef NDEBUG
  // Cross-check the index arithmetic against the polynomial pairing on a few
  // deterministic samples.
  {
    std::mt19937 rng(0x9e3779b9u);
    std::uniform_int_distribution<std::size_t> ri(0, rows.size() - 1), ci(0, cols.size() - 1);
    for (int s = 0; s < 10; ++s) {
      std::size_t i = ri(rng), j = ci(rng);
      Poly w = Poly::monomial(rows, rows[i]);
      Poly v = Poly::monomial(cols, cols[j]);
      if (involution == InvolutionKind::Laurent) w = involve(to_laurent(w), involution);
      std::complex<double> direct = m.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      std::complex<double> via_poly = table.apply(w * v);
      assert(std::abs(direct - via_poly) <= 1e-12 * (1.0 + std::abs(direct)));
    }
  }
#endif
  return m;
}

VandermondeFactors vandermonde(const std::vector<Eigen::VectorXcd>& points, const Eigen::VectorXcd& weights,
                               const FiltrationBasis& rows, const FiltrationBasis& cols,
                               InvolutionKind involution) {
  if (points.size() != static_cast<std::size_t>(weights.size()))
    throw validation_error("vandermonde: point and weight counts differ");
  if (rows.empty() || cols.empty()) throw validation_error("vandermonde: empty basis");
  Eigen::Index r = weights.size();
  int n = rows.ambient_dimension();
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != n) throw validation_error("vandermonde: point dimension mismatch");

  VandermondeFactors f;
  f.weights = weights;
  f.row_factor.resize(static_cast<Eigen::Index>(rows.size()), r);
  f.col_factor.resize(r, static_cast<Eigen::Index>(cols.size()));
  for (Eigen::Index j = 0; j < r; ++j) {
    const auto& xi = points[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      MultiIndex a = involution == InvolutionKind::Laurent ? -rows[i] : rows[i];
      f.row_factor(static_cast<Eigen::Index>(i), j) = evaluate_monomial(a, xi);
    }
    for (std::size_t i = 0; i < cols.size(); ++i)
      f.col_factor(j, static_cast<Eigen::Index>(i)) = evaluate_monomial(cols[i], xi);
  }
  return f;
}

QuotientGram quotient_gram(const MomentTable& table, const std::vector<Poly>& representatives) {
  if (representatives.empty()) throw validation_error("quotient_gram: no representatives");
  InvolutionKind involution = table.space().involution();
  Eigen::Index m = static_cast<Eigen::Index>(representatives.size());

  QuotientGram g;
  g.representatives = representatives;
  g.involution = involution;
  g.values.resize(m, m);
  std::vector<Poly> involved;
  involved.reserve(representatives.size());
  for (const auto& b : representatives)
    involved.push_back(involution == InvolutionKind::Laurent ? involve(to_laurent(b), involution) : b);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      g.values(i, j) =
          table.apply(involved[static_cast<std::size_t>(i)] * representatives[static_cast<std::size_t>(j)]);
  return g;
}

}  // namespace pronyvar
