// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "pronyvar/prony.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "pronyvar/errors.hpp"

namespace pronyvar {

namespace {

// Portable standard normals: Box-Muller over 53-bit uniforms, so draws do
// not depend on the standard library's distribution internals.
class NormalDraw {
 public:
  explicit NormalDraw(std::uint64_t seed) : rng_(seed) {}

  double operator()() {
    double u1 = next_uniform();
    double u2 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  double next_uniform() {
    // (0, 1]: never zero, so the logarithm is safe.
    return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
  }
  std::mt19937_64 rng_;
};

// Coefficients of a generator over the standard monomials. Echelon form
// guarantees zeros at every other pivot, so this is the full tail of
// x^pivot = pivot_monomial - generator.
Eigen::VectorXcd standard_restriction(const Poly& generator, const std::vector<std::size_t>& standard) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(standard.size()));
  for (std::size_t s = 0; s < standard.size(); ++s)
    v[static_cast<Eigen::Index>(s)] = generator.coeffs()[static_cast<Eigen::Index>(standard[s])];
  return v;
}

}  // namespace

std::vector<Eigen::VectorXcd> solve_points(const IdealBasis& ideal, Space::Kind space,
                                           const PronyOptions& options, std::vector<std::string>* warnings) {
  const FiltrationBasis& cols = ideal.column_basis;
  int n = cols.ambient_dimension();
  std::vector<std::size_t> standard = ideal.standard_monomial_indices(cols.degree());
  Eigen::Index r = static_cast<Eigen::Index>(standard.size());
  if (r == 0) return {};

  std::vector<Eigen::Index> position(cols.size(), -1);
  for (std::size_t s = 0; s < standard.size(); ++s) position[standard[s]] = static_cast<Eigen::Index>(s);
  std::vector<std::size_t> generator_of(cols.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < ideal.pivots.size(); ++i) generator_of[ideal.pivots[i]] = i;

  // Multiplication by x_k on the span of the standard monomials, reducing
  // pivot hits through their generator.
  std::vector<Eigen::MatrixXcd> mult(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(r, r);
    MultiIndex ek = MultiIndex::unit(n, k);
    for (Eigen::Index j = 0; j < r; ++j) {
      MultiIndex target = cols[standard[static_cast<std::size_t>(j)]] + ek;
      auto idx = cols.index_of(target);
      if (!idx) {
        std::ostringstream os;
        os << "solve_points: multiplying " << cols[standard[static_cast<std::size_t>(j)]].to_string()
           << " by x_" << (k + 1) << " leaves " << cols.describe()
           << "; increase the column degree so the standard monomials close up";
        throw validation_error(os.str());
      }
      if (position[*idx] >= 0) {
        m(position[*idx], j) = 1.0;
      } else {
        const Poly& g = ideal.generators[generator_of[*idx]];
        m.col(j) = -standard_restriction(g, standard);
      }
    }
    mult[static_cast<std::size_t>(k)] = std::move(m);
  }

  NormalDraw draw(options.seed);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es;
  bool separated = false;
  double best_separation = 0.0;
  for (int attempt = 0; attempt <= options.max_retries && !separated; ++attempt) {
    Eigen::VectorXd c(n);
    for (int k = 0; k < n; ++k) c[k] = draw();
    c.normalize();
    Eigen::MatrixXcd mc = Eigen::MatrixXcd::Zero(r, r);
    for (int k = 0; k < n; ++k) mc += c[k] * mult[static_cast<std::size_t>(k)];
    // A generic combination gives one eigenvalue per point, even when the
    // points share single coordinates; its left eigenvectors then diagonalize
    // every commuting coordinate operator at once.
    es.compute(mc.transpose());
    if (es.info() != Eigen::Success) throw numeric_error("solve_points: eigensolver failed");
    double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    double min_sep = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = i + 1; j < r; ++j)
        min_sep = std::min(min_sep, std::abs(es.eigenvalues()[i] - es.eigenvalues()[j]));
    best_separation = std::max(best_separation, r > 1 ? min_sep / scale : 1.0);
    separated = r <= 1 || min_sep > options.cluster_tol * scale;
  }
  if (!separated && warnings) {
    std::ostringstream os;
    os << "eigenvalues of the combined multiplication operator stayed clustered after "
       << options.max_retries + 1 << " draws (best relative separation " << best_separation
       << "); points may be merged or averaged";
    warnings->push_back(os.str());
  }

  std::vector<Eigen::VectorXcd> points;
  points.reserve(static_cast<std::size_t>(r));
  for (Eigen::Index j = 0; j < r; ++j) {
    Eigen::VectorXcd u = es.eigenvectors().col(j);
    std::complex<double> denom = u.squaredNorm();
    Eigen::VectorXcd xi(n);
    for (int k = 0; k < n; ++k)
      xi[k] = u.dot(mult[static_cast<std::size_t>(k)].transpose() * u) / denom;
    if (space == Space::Kind::Affine)
      for (int k = 0; k < n; ++k)
        if (std::abs(xi[k].imag()) < options.imag_snap) xi[k] = std::complex<double>(xi[k].real(), 0.0);
    points.push_back(std::move(xi));
  }

  // Deterministic report order: lexicographic by coordinates, rounded so
  // last-bit noise cannot flip the order.
  auto key = [](const Eigen::VectorXcd& p) {
    std::vector<long long> k;
    k.reserve(static_cast<std::size_t>(p.size()) * 2);
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      k.push_back(std::llround(p[i].real() * 1e9));
      k.push_back(std::llround(p[i].imag() * 1e9));
    }
    return k;
  };
  std::sort(points.begin(), points.end(),
            [&](const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) { return key(a) < key(b); });
  return points;
}

std::pair<Eigen::VectorXcd, double> solve_weights(const std::vector<Eigen::VectorXcd>& points,
                                                  const MomentTable& table) {
  Eigen::Index r = static_cast<Eigen::Index>(points.size());
  const FiltrationBasis& basis = table.basis();
  if (r == 0) return {Eigen::VectorXcd(0), table.values().norm()};

  Eigen::MatrixXcd a(static_cast<Eigen::Index>(basis.size()), r);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (Eigen::Index j = 0; j < r; ++j)
      a(static_cast<Eigen::Index>(i), j) = evaluate_monomial(basis[i], points[static_cast<std::size_t>(j)]);

  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(a);
  if (qr.rank() < r)
    throw numeric_error(
        "solve_weights: evaluation columns are rank-deficient (coincident or spurious points); lower the "
        "rank or raise the degree");
  Eigen::VectorXcd w = qr.solve(table.values());
  double residual = (a * w - table.values()).norm();
  return {std::move(w), residual};
}

RankCertificate rank_certificate(const MomentTable& table, int degree, const RankOptions& options) {
  if (degree < 1) throw validation_error("rank_certificate: needs degree >= 1 to drop a row shell");
  const Space& space = table.space();
  FiltrationKind filtration = space.natural_filtration();
  RingKind row_ring = space.row_ring();
  FiltrationBasis cols = build_basis(space.n, degree, RingKind::PolynomialR,
                                     space.kind == Space::Kind::Torus ? FiltrationKind::MaxDegree : filtration);
  FiltrationBasis rows_full = build_basis(space.n, degree, row_ring, filtration);
  FiltrationBasis rows_short = build_basis(space.n, degree - 1, row_ring, filtration);

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd_full(assemble(table, rows_full, cols).values);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd_short(assemble(table, rows_short, cols).values);

  RankCertificate cert;
  cert.square = decide_rank(svd_full.singularValues(), static_cast<int>(rows_full.size()),
                            static_cast<int>(cols.size()), options);
  cert.rectangular = decide_rank(svd_short.singularValues(), static_cast<int>(rows_short.size()),
                                 static_cast<int>(cols.size()), options);
  cert.rank = cert.square.rank;
  cert.stabilized = cert.square.rank == cert.rectangular.rank;
  return cert;
}

AtomicRecovery recover_atoms(const MomentTable& table, int degree, std::optional<int> rank,
                             const PronyOptions& options, const RankOptions& rank_options, int threads) {
  if (degree < 0) throw validation_error("recover_atoms: negative degree");
  const Space& space = table.space();
  FiltrationBasis cols = build_basis(space.n, degree, RingKind::PolynomialR,
                                     space.kind == Space::Kind::Torus ? FiltrationKind::MaxDegree
                                                                      : FiltrationKind::TotalDegree);
  FiltrationBasis rows = build_basis(space.n, degree, space.row_ring(), space.natural_filtration());

  RankOptions effective = rank_options;
  if (rank) {
    if (*rank < 0 || *rank > static_cast<int>(std::min(rows.size(), cols.size())))
      throw validation_error("recover_atoms: rank override outside [0, min(rows, cols)]");
    effective.fixed_rank = rank;
  }

  MomentMatrix h = assemble(table, rows, cols, threads);
  IdealBasis ideal = numerical_kernel(h, effective);

  AtomicRecovery rec;
  std::vector<Eigen::VectorXcd> points = solve_points(ideal, space.kind, options, &rec.warnings);
  auto [weights, residual] = solve_weights(points, table);

  rec.points.resize(static_cast<Eigen::Index>(points.size()), space.n);
  for (std::size_t j = 0; j < points.size(); ++j) rec.points.row(static_cast<Eigen::Index>(j)) = points[j];
  rec.weights = std::move(weights);
  rec.weight_residual = residual;
  for (const auto& g : ideal.generators)
    for (const auto& p : points) rec.point_residual = std::max(rec.point_residual, std::abs(evaluate(g, p)));
  return rec;
}

}  // namespace pronyvar
