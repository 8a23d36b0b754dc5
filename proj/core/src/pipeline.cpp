// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <sstream>

#include "pronyvar/density.hpp"
#include "pronyvar/errors.hpp"

namespace pronyvar {

namespace {

constexpr double kParametrizationTol = 1e-6;
constexpr int kParametrizationSamples = 100;

double parametrization_residual(const IdealBasis& ideal, const Space& space, const Body& body) {
  double worst = 0.0;
  for (double t : curve_sample_parameters(body, kParametrizationSamples)) {
    Eigen::VectorXcd p = curve_point(space, body, t);
    for (const auto& g : ideal.generators) worst = std::max(worst, std::abs(evaluate(g, p)));
  }
  return worst;
}

}  // namespace

PipelineResult full_pipeline(const MomentTable& table, int degree, int delta,
                             const std::optional<CurveSpec>& curve, const PronyOptions& prony,
                             const RankOptions& rank, const QuadratureConfig& quadrature, int threads) {
  if (delta < 0) throw validation_error("full_pipeline: negative delta");
  const Space& space = table.space();
  if (curve && !(curve->space == space))
    throw validation_error("full_pipeline: curve space does not match the moment table");

  RecoveryOptions options;
  options.policy = DeltaBound{delta};
  options.rank = rank;
  options.threads = threads;
  // A curve-supported torus measure needs Laurent columns: restrictions of
  // ordinary monomials to the curve only span half the frequencies, so some
  // densities have no ordinary-polynomial representative.
  if (curve && space.kind == Space::Kind::Torus) options.col_ring = RingKind::LaurentL;

  PipelineResult result;
  result.ideal = recover_truncated_ideal(table, degree, options);

  if (curve) {
    double residual = parametrization_residual(result.ideal, space, curve->body);
    result.parametrization_residual = residual;
    if (residual > kParametrizationTol) {
      std::ostringstream os;
      os << "full_pipeline: the supplied curve violates the recovered generators (max sample residual "
         << residual << " > " << kParametrizationTol << "); the parametrization does not match the support";
      throw validation_error(os.str());
    }
    result.density = recover_density(table, space, curve->body, delta, result.ideal, quadrature);
  } else {
    AtomicRecovery atoms;
    std::vector<Eigen::VectorXcd> points = solve_points(result.ideal, space.kind, prony, &atoms.warnings);
    auto [weights, residual] = solve_weights(points, table);
    atoms.points.resize(static_cast<Eigen::Index>(points.size()), space.n);
    for (std::size_t j = 0; j < points.size(); ++j)
      atoms.points.row(static_cast<Eigen::Index>(j)) = points[j];
    atoms.weights = std::move(weights);
    atoms.weight_residual = residual;
    for (const auto& g : result.ideal.generators)
      for (const auto& p : points)
        atoms.point_residual = std::max(atoms.point_residual, std::abs(evaluate(g, p)));
    result.atoms = std::move(atoms);
  }
  return result;
}

}  // namespace pronyvar
