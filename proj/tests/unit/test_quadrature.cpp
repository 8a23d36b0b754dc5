#include <cmath>
#include <complex>

#include "doctest.h"
#include "oracles.hpp"
#include "pronyvar/quadrature.hpp"

using namespace pronyvar;
using Complex = std::complex<double>;

TEST_CASE("gauss rule with m nodes integrates monomials up to degree 2m-1") {
  for (int m = 1; m <= 8; ++m) {
    QuadratureRule rule = gauss_legendre(m, -1.0, 1.0);
    CHECK(std::abs(rule.weights.sum() - 2.0) < 1e-14);
    for (int k = 0; k <= 2 * m - 1; ++k) {
      Complex got = rule.integrate([&](double t) { return Complex(std::pow(t, k), 0.0); });
      CHECK(std::abs(got - Complex(oracle::segment_monomial_integral(k))) < 1e-13);
    }
  }
}

TEST_CASE("gauss rule maps affinely onto general intervals") {
  QuadratureRule rule = gauss_legendre(6, 0.0, 3.0);
  Complex got = rule.integrate([](double t) { return Complex(t * t, 0.0); });
  CHECK(std::abs(got - Complex(9.0)) < 1e-12);
  CHECK(std::abs(rule.weights.sum() - 3.0) < 1e-13);
}

TEST_CASE("periodic trapezoid reproduces fourier orthogonality below aliasing") {
  int m = 16;
  QuadratureRule rule = periodic_trapezoid(m, 0.0, 1.0);
  CHECK(std::abs(rule.weights.sum() - 1.0) < 1e-15);
  for (int k = -m + 1; k < m; ++k) {
    Complex got = rule.integrate([&](double t) {
      return std::exp(Complex(0.0, 2.0 * M_PI * k * t));
    });
    Complex want = (k == 0) ? Complex(1.0) : Complex(0.0);
    CHECK(std::abs(got - want) < 1e-12);
  }
}

TEST_CASE("default node budget scales with both degree inputs") {
  CHECK(default_node_count(0, 0) == 5);
  CHECK(default_node_count(3, 1) == 13);
  CHECK(default_node_count(3, 2) == 25);
  CHECK(default_node_count(5, 3) > default_node_count(5, 2));
}
