#include <complex>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pronyvar/errors.hpp"
#include "pronyvar/json_io.hpp"
#include "pronyvar/moment_matrix.hpp"

using namespace pronyvar;
using Complex = std::complex<double>;

namespace {

MomentTable atomic_table(Space space, const std::vector<Eigen::VectorXcd>& points,
                         const Eigen::VectorXcd& weights, const FiltrationBasis& basis) {
  MeasureSpec m;
  m.space = space;
  for (std::size_t j = 0; j < points.size(); ++j)
    m.terms.push_back({weights[static_cast<Eigen::Index>(j)], AtomicBody{points[j]}, std::nullopt});
  return moments(m, basis);
}

}  // namespace

TEST_CASE("hankel pattern on a symmetric two-atom line measure") {
  Space line{Space::Kind::Affine, 1};
  Eigen::VectorXcd p1(1), p2(1);
  p1 << Complex(1.0);
  p2 << Complex(-1.0);
  Eigen::VectorXcd w(2);
  w << Complex(1.0), Complex(1.0);
  FiltrationBasis b1 = build_basis(1, 1, RingKind::PolynomialR, FiltrationKind::TotalDegree);
  MomentTable t = atomic_table(line, {p1, p2}, w, build_basis(1, 2, RingKind::PolynomialR, FiltrationKind::TotalDegree));
  MomentMatrix h = assemble(t, b1, b1);
  CHECK(h.involution == InvolutionKind::Trivial);
  Eigen::MatrixXcd expected(2, 2);
  expected << Complex(2.0), Complex(0.0), Complex(0.0), Complex(2.0);
  CHECK((h.values - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("single-atom matrix matches its rank-one factorization") {
  Space line{Space::Kind::Affine, 1};
  Eigen::VectorXcd p(1);
  p << Complex(2.0);
  Eigen::VectorXcd w(1);
  w << Complex(3.0);
  FiltrationBasis b1 = build_basis(1, 1, RingKind::PolynomialR, FiltrationKind::TotalDegree);
  MomentTable t = atomic_table(line, {p}, w, build_basis(1, 2, RingKind::PolynomialR, FiltrationKind::TotalDegree));
  MomentMatrix h = assemble(t, b1, b1);
  Eigen::MatrixXcd expected(2, 2);
  expected << Complex(3.0), Complex(6.0), Complex(6.0), Complex(12.0);
  CHECK((h.values - expected).cwiseAbs().maxCoeff() < 1e-13);

  VandermondeFactors f = vandermonde({p}, w, b1, b1, InvolutionKind::Trivial);
  CHECK((f.product() - h.values).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("vandermonde factorization reproduces toeplitz matrices on the torus") {
  Space torus{Space::Kind::Torus, 2};
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> angle(0.0, 1.0);
  std::vector<Eigen::VectorXcd> points;
  Eigen::VectorXcd w(3);
  for (int j = 0; j < 3; ++j) {
    Eigen::VectorXcd p(2);
    for (int k = 0; k < 2; ++k) {
      double th = 2 * M_PI * angle(rng);
      p[k] = Complex(std::cos(th), std::sin(th));
    }
    points.push_back(p);
    w[j] = Complex(angle(rng) + 0.2, angle(rng) - 0.5);
  }
  FiltrationBasis rows = build_basis(2, 1, RingKind::LaurentL, FiltrationKind::MaxDegree);
  FiltrationBasis cols = build_basis(2, 2, RingKind::LaurentL, FiltrationKind::MaxDegree);
  MomentTable t = atomic_table(torus, points, w, build_basis(2, 3, RingKind::LaurentL, FiltrationKind::MaxDegree));
  MomentMatrix h = assemble(t, rows, cols);
  CHECK(h.involution == InvolutionKind::Laurent);

  // Entry law: sigma(x^{b-a}) for row index a, column index b.
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      Complex want = oracle::atomic_moment(points, w, cols[j] - rows[i]);
      CHECK(std::abs(h.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) - want) < 1e-13);
    }

  VandermondeFactors f = vandermonde(points, w, rows, cols, InvolutionKind::Laurent);
  CHECK((f.product() - h.values).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(f.row_factor.rows() == static_cast<Eigen::Index>(rows.size()));
  CHECK(f.col_factor.cols() == static_cast<Eigen::Index>(cols.size()));
}

TEST_CASE("assembly refuses rows or columns the table cannot pair") {
  Space line{Space::Kind::Affine, 1};
  Eigen::VectorXcd p = Eigen::VectorXcd::Ones(1);
  Eigen::VectorXcd w = Eigen::VectorXcd::Ones(1);
  MomentTable t = atomic_table(line, {p}, w, build_basis(1, 2, RingKind::PolynomialR, FiltrationKind::TotalDegree));
  FiltrationBasis b2 = build_basis(1, 2, RingKind::PolynomialR, FiltrationKind::TotalDegree);
  CHECK_THROWS_AS(assemble(t, b2, b2), validation_error);
  FiltrationBasis l1 = build_basis(1, 1, RingKind::LaurentL, FiltrationKind::MaxDegree);
  CHECK_THROWS_AS(assemble(t, l1, build_basis(1, 1, RingKind::PolynomialR, FiltrationKind::TotalDegree)),
                  validation_error);
}

TEST_CASE("quotient gram pairs involved representatives") {
  Space torus{Space::Kind::Torus, 1};
  MeasureSpec m;
  m.space = torus;
  m.terms.push_back({Complex(1.0), TrigCurveBody{{1}}, std::nullopt});
  FiltrationBasis l = build_basis(1, 2, RingKind::LaurentL, FiltrationKind::MaxDegree);
  MomentTable t = moments(m, l);
  std::vector<Poly> reps = {Poly::constant(l, 1.0), Poly::monomial(l, MultiIndex({1}))};
  QuotientGram g = quotient_gram(t, reps);
  // Uniform circle in exponential coordinates: distinct frequencies are
  // orthonormal, so the gram is the identity.
  CHECK((g.values - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(g.involution == InvolutionKind::Laurent);
}

TEST_CASE("csv export writes complex entries in re+imj form") {
  Space line{Space::Kind::Affine, 1};
  Eigen::VectorXcd p(1);
  p << Complex(0.5);
  Eigen::VectorXcd w(1);
  w << Complex(1.0, 2.0);
  FiltrationBasis b1 = build_basis(1, 1, RingKind::PolynomialR, FiltrationKind::TotalDegree);
  MomentTable t = atomic_table(line, {p}, w, build_basis(1, 2, RingKind::PolynomialR, FiltrationKind::TotalDegree));
  MomentMatrix h = assemble(t, b1, b1);
  std::string csv = matrix_to_csv(h);
  CHECK(csv.find('j') != std::string::npos);
  CHECK(csv.find("1+2j") != std::string::npos);
  // One line per row, comma-separated columns.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
  CHECK(std::count(csv.begin(), csv.end(), ',') == 2);
}
