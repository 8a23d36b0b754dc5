#include <complex>
#include <random>

#include "doctest.h"
#include "pronyvar/errors.hpp"
#include "pronyvar/poly.hpp"

using namespace pronyvar;
using Complex = std::complex<double>;

TEST_CASE("product expands supports and cancels cross terms") {
  FiltrationBasis b2 = build_basis(2, 2, RingKind::PolynomialR, FiltrationKind::TotalDegree);
  Poly p = Poly::monomial(b2, MultiIndex({1, 0})) - Poly::monomial(b2, MultiIndex({0, 2}));
  Poly q = Poly::monomial(b2, MultiIndex({1, 0})) + Poly::monomial(b2, MultiIndex({0, 2}));
  Poly prod = p * q;
  CHECK(prod.coeff(MultiIndex({2, 0})) == Complex(1.0));
  CHECK(prod.coeff(MultiIndex({0, 4})) == Complex(-1.0));
  CHECK(std::abs(prod.coeff(MultiIndex({1, 2}))) == 0.0);
  CHECK(prod.support_degree() == 4);
}

TEST_CASE("mixed-basis sums land in the smallest enclosing family") {
  FiltrationBasis total = build_basis(2, 1, RingKind::PolynomialR, FiltrationKind::TotalDegree);
  FiltrationBasis laurent = build_basis(2, 1, RingKind::LaurentL, FiltrationKind::MaxDegree);
  Poly p = Poly::monomial(total, MultiIndex({1, 0}));
  Poly q = Poly::monomial(laurent, MultiIndex({0, -1}));
  Poly s = p + q;
  CHECK(s.basis().ring() == RingKind::LaurentL);
  CHECK(s.coeff(MultiIndex({1, 0})) == Complex(1.0));
  CHECK(s.coeff(MultiIndex({0, -1})) == Complex(1.0));
}

TEST_CASE("laurent involution conjugates coefficients and negates exponents") {
  FiltrationBasis l = build_basis(2, 2, RingKind::LaurentL, FiltrationKind::MaxDegree);
  Poly p = Complex(1.0, 1.0) * Poly::monomial(l, MultiIndex({1, -2}));
  Poly q = involve(p, InvolutionKind::Laurent);
  CHECK(q.coeff(MultiIndex({-1, 2})) == Complex(1.0, -1.0));
  CHECK(std::abs(q.coeff(MultiIndex({1, -2}))) == 0.0);

  // On unit-modulus points the involution agrees with complex conjugation of values.
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> angle(0.0, 1.0);
  Poly mix = Complex(0.3, -0.7) * Poly::monomial(l, MultiIndex({2, 1})) +
             Complex(1.1, 0.2) * Poly::monomial(l, MultiIndex({-1, 0})) + Poly::constant(l, 0.5);
  for (int trial = 0; trial < 25; ++trial) {
    Eigen::VectorXcd xi(2);
    for (int k = 0; k < 2; ++k) {
      double t = angle(rng);
      xi[k] = Complex(std::cos(2 * M_PI * t), std::sin(2 * M_PI * t));
    }
    Complex lhs = evaluate(involve(mix, InvolutionKind::Laurent), xi);
    Complex rhs = std::conj(evaluate(mix, xi));
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("trivial involution is the identity") {
  FiltrationBasis b = build_basis(1, 3, RingKind::PolynomialR, FiltrationKind::TotalDegree);
  Poly p = Complex(2.0, -1.0) * Poly::monomial(b, MultiIndex({3})) + Poly::constant(b, Complex(0.0, 4.0));
  Poly q = involve(p, InvolutionKind::Trivial);
  CHECK((q - p).is_zero(0.0));
}

TEST_CASE("laurent involution demands a laurent basis") {
  FiltrationBasis r = build_basis(2, 2, RingKind::PolynomialR, FiltrationKind::TotalDegree);
  Poly p = Poly::monomial(r, MultiIndex({1, 1}));
  CHECK_THROWS_AS(involve(p, InvolutionKind::Laurent), validation_error);
  CHECK_NOTHROW(involve(to_laurent(p), InvolutionKind::Laurent));
}

TEST_CASE("monomial evaluation handles negative exponents away from zero") {
  Eigen::VectorXcd xi(2);
  xi << Complex(2.0, 0.0), Complex(0.0, 1.0);
  CHECK(std::abs(evaluate_monomial(MultiIndex({-1, 2}), xi) - Complex(-0.5, 0.0)) < 1e-15);
  Eigen::VectorXcd zero(2);
  zero << Complex(0.0, 0.0), Complex(1.0, 0.0);
  CHECK_THROWS_AS(evaluate_monomial(MultiIndex({-1, 0}), zero), validation_error);
  CHECK(std::abs(evaluate_monomial(MultiIndex({0, 3}), zero) - Complex(1.0)) < 1e-15);
}

TEST_CASE("embedding widens and refuses inadmissible targets") {
  FiltrationBasis small = build_basis(2, 1, RingKind::PolynomialR, FiltrationKind::TotalDegree);
  FiltrationBasis big = build_basis(2, 3, RingKind::LaurentL, FiltrationKind::MaxDegree);
  Poly p = Poly::monomial(small, MultiIndex({1, 0})) + Poly::constant(small, 2.0);
  Poly e = embed(p, big);
  CHECK(e.basis() == big);
  CHECK(e.coeff(MultiIndex({1, 0})) == Complex(1.0));
  CHECK(e.coeff(MultiIndex({0, 0})) == Complex(2.0));

  Poly l = Poly::monomial(big, MultiIndex({-1, 0}));
  CHECK_THROWS_AS(embed(l, small), validation_error);
}

TEST_CASE("string rendering lists highest shell first") {
  FiltrationBasis b = build_basis(2, 2, RingKind::PolynomialR, FiltrationKind::TotalDegree);
  Poly p = Poly::monomial(b, MultiIndex({2, 0})) - Poly::constant(b, 1.0);
  std::string s = p.to_string();
  CHECK(s.find("x^(2,0)") != std::string::npos);
  CHECK(s.find("x^(2,0)") < s.find("x^(0,0)"));
}
