// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "pronyvar/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "pronyvar/errors.hpp"

namespace pronyvar {

std::string to_string(InvolutionKind k) { return k == InvolutionKind::Trivial ? "trivial" : "laurent"; }

Poly::Poly(FiltrationBasis basis, Eigen::VectorXcd coeffs) : basis_(std::move(basis)), c_(std::move(coeffs)) {
  if (basis_.empty()) throw validation_error("Poly: empty basis");
  if (static_cast<std::size_t>(c_.size()) != basis_.size())
    throw validation_error("Poly: coefficient count does not match basis size");
}

Poly Poly::zero(FiltrationBasis basis) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
  return Poly(std::move(basis), std::move(c));
}

Poly Poly::constant(FiltrationBasis basis, std::complex<double> c) {
  return monomial(std::move(basis), MultiIndex::zero(basis.ambient_dimension()), c);
}

Poly Poly::monomial(FiltrationBasis basis, const MultiIndex& a, std::complex<double> c) {
  auto idx = basis.index_of(a);
  if (!idx) throw validation_error("Poly::monomial: " + a.to_string() + " not in " + basis.describe());
  Poly p = zero(std::move(basis));
  p.c_[static_cast<Eigen::Index>(*idx)] = c;
  return p;
}

std::complex<double> Poly::coeff(const MultiIndex& a) const {
  auto idx = basis_.index_of(a);
  return idx ? c_[static_cast<Eigen::Index>(*idx)] : std::complex<double>(0.0);
}

int Poly::support_degree() const {
  int d = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (c_[static_cast<Eigen::Index>(i)] != 0.0)
      d = std::max(d, filtration_degree(basis_[i], basis_.filtration()));
  return d;
}

bool Poly::is_zero(double tol) const {
  if (basis_.empty()) return true;
  return c_.lpNorm<Eigen::Infinity>() <= tol;
}

Poly& Poly::operator*=(std::complex<double> s) {
  c_ *= s;
  return *this;
}

std::string Poly::to_string() const {
  std::ostringstream os;
  bool first = true;
  // Leading (grlex-largest) term first.
  for (std::size_t j = basis_.size(); j-- > 0;) {
    std::complex<double> c = c_[static_cast<Eigen::Index>(j)];
    if (c == 0.0) continue;
    if (!first) os << " + ";
    first = false;
    if (c.imag() == 0.0)
      os << c.real();
    else
      os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
    if (basis_[j].max_degree() > 0) os << "*" << basis_[j].to_string();
  }
  if (first) os << "0";
  return os.str();
}

Poly operator*(std::complex<double> s, const Poly& p) {
  Poly q = p;
  q *= s;
  return q;
}

namespace {

using TermMap = std::unordered_map<MultiIndex, std::complex<double>, MultiIndexHash>;

void accumulate(TermMap& acc, const Poly& p, std::complex<double> scale) {
  const auto& b = p.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::complex<double> c = p.coeffs()[static_cast<Eigen::Index>(i)];
    if (c != 0.0) acc[b[i]] += scale * c;
  }
}

// Smallest basis holding all keys of acc; ring/filtration widen only as the
// support requires relative to the operands' kinds.
Poly from_terms(const TermMap& acc, int n, RingKind ring_hint, FiltrationKind filt_hint) {
  RingKind ring = ring_hint;
  for (const auto& [a, c] : acc)
    if (c != 0.0 && !a.is_nonnegative()) ring = RingKind::LaurentL;
  FiltrationKind filt = ring == RingKind::LaurentL ? FiltrationKind::MaxDegree : filt_hint;
  int degree = 0;
  for (const auto& [a, c] : acc)
    if (c != 0.0) degree = std::max(degree, filtration_degree(a, filt));
  Poly p = Poly::zero(build_basis(n, degree, ring, filt));
  Eigen::VectorXcd coeffs = p.coeffs();
  for (const auto& [a, c] : acc)
    if (c != 0.0) coeffs[static_cast<Eigen::Index>(*p.basis().index_of(a))] = c;
  return Poly(p.basis(), std::move(coeffs));
}

RingKind join(RingKind a, RingKind b) {
  return (a == RingKind::LaurentL || b == RingKind::LaurentL) ? RingKind::LaurentL : RingKind::PolynomialR;
}

FiltrationKind join(FiltrationKind a, FiltrationKind b) {
  return (a == FiltrationKind::MaxDegree || b == FiltrationKind::MaxDegree) ? FiltrationKind::MaxDegree
                                                                            : FiltrationKind::TotalDegree;
}

void check_same_dimension(const Poly& a, const Poly& b, const char* op) {
  if (a.ambient_dimension() != b.ambient_dimension())
    throw validation_error(std::string(op) + ": ambient dimension mismatch");
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  check_same_dimension(a, b, "poly addition");
  if (a.basis() == b.basis()) return Poly(a.basis(), a.coeffs() + b.coeffs());
  TermMap acc;
  accumulate(acc, a, 1.0);
  accumulate(acc, b, 1.0);
  return from_terms(acc, a.ambient_dimension(), join(a.basis().ring(), b.basis().ring()),
                    join(a.basis().filtration(), b.basis().filtration()));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-1.0) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  check_same_dimension(a, b, "poly product");
  TermMap acc;
  const auto& ba = a.basis();
  const auto& bb = b.basis();
  for (std::size_t i = 0; i < ba.size(); ++i) {
    std::complex<double> ca = a.coeffs()[static_cast<Eigen::Index>(i)];
    if (ca == 0.0) continue;
    for (std::size_t j = 0; j < bb.size(); ++j) {
      std::complex<double> cb = b.coeffs()[static_cast<Eigen::Index>(j)];
      if (cb == 0.0) continue;
      acc[ba[i] + bb[j]] += ca * cb;
    }
  }
  return from_terms(acc, a.ambient_dimension(), join(ba.ring(), bb.ring()),
                    join(ba.filtration(), bb.filtration()));
}

Poly embed(const Poly& p, const FiltrationBasis& target) {
  if (target.empty()) throw validation_error("embed: empty target basis");
  if (p.ambient_dimension() != target.ambient_dimension())
    throw validation_error("embed: ambient dimension mismatch");
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(target.size()));
  const auto& b = p.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::complex<double> v = p.coeffs()[static_cast<Eigen::Index>(i)];
    if (v == 0.0) continue;
    auto idx = target.index_of(b[i]);
    if (!idx)
      throw validation_error("embed: term " + b[i].to_string() + " not admissible in " + target.describe());
    c[static_cast<Eigen::Index>(*idx)] = v;
  }
  return Poly(target, std::move(c));
}

Poly to_laurent(const Poly& p) {
  if (p.basis().ring() == RingKind::LaurentL) return p;
  return embed(p, build_basis(p.ambient_dimension(), p.support_degree(), RingKind::LaurentL,
                              FiltrationKind::MaxDegree));
}

Poly involve(const Poly& p, InvolutionKind kind) {
  if (kind == InvolutionKind::Trivial) return p;
  const auto& b = p.basis();
  if (b.ring() != RingKind::LaurentL)
    throw validation_error(
        "involve: the Laurent involution needs a Laurent basis (negated exponents must stay "
        "admissible); convert with to_laurent() first");
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::complex<double> v = p.coeffs()[static_cast<Eigen::Index>(i)];
    if (v == 0.0) continue;
    // -a stays in a Laurent max-degree basis of the same degree.
    c[static_cast<Eigen::Index>(*b.index_of(-b[i]))] = std::conj(v);
  }
  return Poly(b, std::move(c));
}

std::complex<double> evaluate_monomial(const MultiIndex& a, const Eigen::VectorXcd& point) {
  if (a.size() != static_cast<int>(point.size()))
    throw validation_error("evaluate: point dimension does not match monomial");
  std::complex<double> r = 1.0;
  for (int k = 0; k < a.size(); ++k) {
    int e = a[k];
    if (e == 0) continue;
    std::complex<double> z = point[k];
    if (e < 0) {
      if (z == 0.0)
        throw validation_error("evaluate: zero coordinate with negative exponent " + a.to_string());
      z = 1.0 / z;
      e = -e;
    }
    // Exponentiation by squaring; exponents are small integers.
    std::complex<double> base = z, acc = 1.0;
    for (unsigned m = static_cast<unsigned>(e); m; m >>= 1) {
      if (m & 1u) acc *= base;
      base *= base;
    }
    r *= acc;
  }
  return r;
}

std::complex<double> evaluate(const Poly& p, const Eigen::VectorXcd& point) {
  const auto& b = p.basis();
  std::complex<double> r = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::complex<double> c = p.coeffs()[static_cast<Eigen::Index>(i)];
    if (c != 0.0) r += c * evaluate_monomial(b[i], point);
  }
  return r;
}

}  // namespace pronyvar
