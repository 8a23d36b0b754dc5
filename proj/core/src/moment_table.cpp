// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "pronyvar/moment_table.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pronyvar/errors.hpp"
#include "pronyvar/parallel.hpp"

namespace pronyvar {

std::string to_string(Provenance p) { return p == Provenance::Exact ? "exact" : "quadrature"; }

MomentTable::MomentTable(Space space, FiltrationBasis basis, Eigen::VectorXcd values, Provenance provenance,
                         int quadrature_nodes)
    : space_(space),
      basis_(std::move(basis)),
      values_(std::move(values)),
      provenance_(provenance),
      quadrature_nodes_(quadrature_nodes) {
  if (basis_.empty()) throw validation_error("moment table: empty basis");
  if (static_cast<std::size_t>(values_.size()) != basis_.size())
    throw validation_error("moment table: value count does not match basis size");
}

std::complex<double> MomentTable::value(const MultiIndex& a) const {
  auto idx = basis_.index_of(a);
  if (!idx)
    throw validation_error("moment table over " + basis_.describe() + " does not cover " + a.to_string());
  return values_[static_cast<Eigen::Index>(*idx)];
}

std::complex<double> MomentTable::apply(const Poly& p) const {
  const auto& b = p.basis();
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::complex<double> c = p.coeffs()[static_cast<Eigen::Index>(i)];
    if (c != 0.0) acc += c * value(b[i]);
  }
  return acc;
}

namespace {

long direction_dot(const MultiIndex& a, const std::vector<int>& v) {
  long s = 0;
  for (int k = 0; k < a.size(); ++k) s += static_cast<long>(a[k]) * v[static_cast<std::size_t>(k)];
  return s;
}

// Closed form along t -> exp(2 pi i v t): the averaged monomial x^a
// integrates to 1 when <a, v> = 0 and to 0 otherwise. A density shifts the
// exponent by its own support.
std::complex<double> trig_exact_moment(const TrigCurveBody& body, const MultiIndex& alpha,
                                       const Poly* density) {
  if (!density) return direction_dot(alpha, body.direction) == 0 ? 1.0 : 0.0;
  std::complex<double> acc = 0.0;
  const auto& b = density->basis();
  for (std::size_t j = 0; j < b.size(); ++j) {
    std::complex<double> c = density->coeffs()[static_cast<Eigen::Index>(j)];
    if (c != 0.0 && direction_dot(alpha + b[j], body.direction) == 0) acc += c;
  }
  return acc;
}

int density_degree(const std::optional<Poly>& density) {
  return density ? density->support_degree() : 0;
}

int trig_param_degree(const TrigCurveBody& body) {
  int s = 0;
  for (int v : body.direction) s += std::abs(v);
  return std::max(1, s);
}

// sigma_component(x^a) for every a in basis, by quadrature along the curve.
Eigen::VectorXcd integrate_curve(const Body& body, const Space& space, const FiltrationBasis& basis,
                                 const std::optional<Poly>& density, const QuadratureRule& rule,
                                 int threads) {
  Eigen::Index nodes = rule.nodes.size();
  std::vector<Eigen::VectorXcd> points(static_cast<std::size_t>(nodes));
  Eigen::VectorXcd density_values = Eigen::VectorXcd::Ones(nodes);
  for (Eigen::Index k = 0; k < nodes; ++k) {
    points[static_cast<std::size_t>(k)] = curve_point(space, body, rule.nodes[k]);
    if (density) density_values[k] = evaluate(*density, points[static_cast<std::size_t>(k)]);
  }
  Eigen::VectorXcd out(static_cast<Eigen::Index>(basis.size()));
  parallel_for(basis.size(), threads, [&](std::size_t i) {
    std::complex<double> acc = 0.0;
    for (Eigen::Index k = 0; k < nodes; ++k)
      acc += rule.weights[k] * density_values[k] * evaluate_monomial(basis[i], points[static_cast<std::size_t>(k)]);
    out[static_cast<Eigen::Index>(i)] = acc;
  });
  return out;
}

QuadratureRule curve_rule(const Body& body, int node_count) {
  if (const auto* curve = std::get_if<AffineCurveBody>(&body)) {
    if (curve->periodic()) return periodic_trapezoid(node_count, 0.0, 1.0);
    return gauss_legendre(node_count, curve->a, curve->b);
  }
  return periodic_trapezoid(node_count, 0.0, 1.0);
}

int curve_default_nodes(const Body& body, const FiltrationBasis& basis, const std::optional<Poly>& density) {
  int moment_degree = basis.degree() + density_degree(density);
  if (const auto* trig = std::get_if<TrigCurveBody>(&body))
    return default_node_count(moment_degree, trig_param_degree(*trig));
  return default_node_count(moment_degree, std::get<AffineCurveBody>(body).param_degree());
}

}  // namespace

MomentTable moments(const MeasureSpec& measure, const FiltrationBasis& basis, const QuadratureConfig& config) {
  measure.validate();
  if (basis.empty()) throw validation_error("moments: empty basis");
  if (basis.ambient_dimension() != measure.space.n)
    throw validation_error("moments: basis dimension does not match the measure");
  if (measure.space.kind == Space::Kind::Affine && basis.ring() == RingKind::LaurentL)
    throw validation_error("moments: negative exponents are not integrable against affine measures");

  Eigen::VectorXcd values = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
  bool all_exact = true;
  int max_nodes = 0;

  for (const auto& term : measure.terms) {
    Eigen::VectorXcd part(static_cast<Eigen::Index>(basis.size()));
    const Poly* density = term.density ? &*term.density : nullptr;

    if (const auto* atom = std::get_if<AtomicBody>(&term.body)) {
      const Eigen::VectorXcd& point = atom->point;
      parallel_for(basis.size(), config.threads, [&](std::size_t i) {
        part[static_cast<Eigen::Index>(i)] = evaluate_monomial(basis[i], point);
      });
    } else if (const auto* trig = std::get_if<TrigCurveBody>(&term.body);
               trig != nullptr && !config.force_quadrature) {
      parallel_for(basis.size(), config.threads, [&](std::size_t i) {
        part[static_cast<Eigen::Index>(i)] = trig_exact_moment(*trig, basis[i], density);
      });
    } else {
      int nodes = config.nodes.value_or(curve_default_nodes(term.body, basis, term.density));
      QuadratureRule rule = curve_rule(term.body, nodes);
      part = integrate_curve(term.body, measure.space, basis, term.density, rule, config.threads);
      all_exact = false;
      max_nodes = std::max(max_nodes, nodes);
      if (config.validate) {
        int refined_nodes = 2 * nodes;
        QuadratureRule refined = curve_rule(term.body, refined_nodes);
        Eigen::VectorXcd check =
            integrate_curve(term.body, measure.space, basis, term.density, refined, config.threads);
        Eigen::Index worst = 0;
        double err = (check - part).cwiseAbs().maxCoeff(&worst);
        if (err > config.validation_tol) {
          std::ostringstream os;
          os << "moments: quadrature did not settle at " << basis[static_cast<std::size_t>(worst)].to_string()
             << " (estimated error " << err << " > tol " << config.validation_tol << " with " << nodes
             << " vs " << refined_nodes << " nodes); raise the node count";
          throw numeric_error(os.str());
        }
      }
    }
    values += term.weight * part;
  }

  return MomentTable(measure.space, basis, std::move(values),
                     all_exact ? Provenance::Exact : Provenance::Quadrature, max_nodes);
}

MomentTable uniform_curve_moments(const Space& space, const Body& body, const FiltrationBasis& basis,
                                  const QuadratureConfig& config) {
  if (!body_is_curve(body))
    throw validation_error("uniform_curve_moments: the reference measure needs a curve body");
  MeasureSpec spec;
  spec.space = space;
  spec.terms.push_back(WeightedComponent{1.0, body, std::nullopt});
  return moments(spec, basis, config);
}

}  // namespace pronyvar
