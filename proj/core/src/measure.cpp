// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "pronyvar/measure.hpp"

#include <cmath>
#include <numbers>

#include "pronyvar/errors.hpp"

namespace pronyvar {

double CoordinateFunction::operator()(double t) const {
  double r = 0.0;
  // Horner on the algebraic part.
  for (std::size_t k = poly.size(); k-- > 0;) r = r * t + poly[k];
  for (std::size_t k = 0; k < cos_coeffs.size(); ++k)
    r += cos_coeffs[k] * std::cos(2.0 * std::numbers::pi * static_cast<double>(k + 1) * t);
  for (std::size_t k = 0; k < sin_coeffs.size(); ++k)
    r += sin_coeffs[k] * std::sin(2.0 * std::numbers::pi * static_cast<double>(k + 1) * t);
  return r;
}

int CoordinateFunction::algebraic_degree() const {
  for (std::size_t k = poly.size(); k-- > 0;)
    if (poly[k] != 0.0) return static_cast<int>(k);
  return 0;
}

int CoordinateFunction::trig_degree() const {
  int d = 0;
  for (std::size_t k = 0; k < cos_coeffs.size(); ++k)
    if (cos_coeffs[k] != 0.0) d = std::max(d, static_cast<int>(k + 1));
  for (std::size_t k = 0; k < sin_coeffs.size(); ++k)
    if (sin_coeffs[k] != 0.0) d = std::max(d, static_cast<int>(k + 1));
  return d;
}

bool AffineCurveBody::periodic() const {
  for (const auto& c : coords)
    if (c.has_trig()) return true;
  return false;
}

int AffineCurveBody::param_degree() const {
  int d = 1;
  for (const auto& c : coords) d = std::max({d, c.algebraic_degree(), c.trig_degree()});
  return d;
}

int body_dimension(const Body& body) {
  if (const auto* a = std::get_if<AtomicBody>(&body)) return static_cast<int>(a->point.size());
  if (const auto* t = std::get_if<TrigCurveBody>(&body)) return static_cast<int>(t->direction.size());
  return static_cast<int>(std::get<AffineCurveBody>(body).coords.size());
}

bool body_is_curve(const Body& body) { return !std::holds_alternative<AtomicBody>(body); }

void MeasureSpec::validate() const {
  if (space.n < 1) throw validation_error("measure: ambient dimension must be positive");
  if (terms.empty()) throw validation_error("measure: at least one weighted term is required");
  for (const auto& term : terms) {
    if (body_dimension(term.body) != space.n)
      throw validation_error("measure: body dimension does not match the ambient space");
    if (const auto* atom = std::get_if<AtomicBody>(&term.body)) {
      if (space.kind == Space::Kind::Torus) {
        for (Eigen::Index k = 0; k < atom->point.size(); ++k)
          if (std::abs(std::abs(atom->point[k]) - 1.0) > 1e-9)
            throw validation_error("measure: torus atom coordinates must have unit modulus");
      }
    } else if (const auto* trig = std::get_if<TrigCurveBody>(&term.body)) {
      if (space.kind != Space::Kind::Torus)
        throw validation_error("measure: trig_curve bodies live on the torus");
      bool all_zero = true;
      for (int v : trig->direction) all_zero = all_zero && v == 0;
      if (all_zero) throw validation_error("measure: trig_curve direction must be non-zero");
    } else {
      const auto& curve = std::get<AffineCurveBody>(term.body);
      if (space.kind != Space::Kind::Affine)
        throw validation_error("measure: affine_curve bodies live in affine space");
      if (!(curve.a < curve.b)) throw validation_error("measure: curve domain is empty or reversed");
      for (const auto& c : curve.coords)
        if (c.has_trig() && c.algebraic_degree() > 0)
          throw validation_error(
              "measure: a coordinate may be algebraic or trigonometric-plus-constant, not both");
      if (curve.periodic() && (std::abs(curve.a) > 1e-12 || std::abs(curve.b - 1.0) > 1e-12))
        throw validation_error("measure: periodic curves are parametrized over [0, 1]");
    }
    if (term.density) {
      const Poly& g = *term.density;
      if (g.ambient_dimension() != space.n)
        throw validation_error("measure: density dimension does not match the ambient space");
      if (space.kind == Space::Kind::Affine && g.basis().ring() == RingKind::LaurentL)
        throw validation_error("measure: affine densities must be ordinary polynomials");
      if (!body_is_curve(term.body))
        throw validation_error("measure: densities attach to curve bodies; fold the value into the atom weight");
    }
  }
}

Eigen::VectorXcd curve_point(const Space& space, const Body& body, double t) {
  if (const auto* trig = std::get_if<TrigCurveBody>(&body)) {
    Eigen::VectorXcd p(space.n);
    for (int k = 0; k < space.n; ++k) {
      double phase = 2.0 * std::numbers::pi * trig->direction[static_cast<std::size_t>(k)] * t;
      p[k] = std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return p;
  }
  if (const auto* curve = std::get_if<AffineCurveBody>(&body)) {
    Eigen::VectorXcd p(space.n);
    for (int k = 0; k < space.n; ++k) p[k] = curve->coords[static_cast<std::size_t>(k)](t);
    return p;
  }
  throw validation_error("curve_point: atomic bodies have no parametrization");
}

std::vector<double> curve_sample_parameters(const Body& body, int count) {
  double a = 0.0, b = 1.0;
  if (const auto* curve = std::get_if<AffineCurveBody>(&body)) {
    a = curve->a;
    b = curve->b;
  } else if (!std::holds_alternative<TrigCurveBody>(body)) {
    throw validation_error("curve_sample_parameters: atomic bodies have no parametrization");
  }
  std::vector<double> ts(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) ts[static_cast<std::size_t>(i)] = a + (b - a) * (i + 0.5) / count;
  return ts;
}

}  // namespace pronyvar
