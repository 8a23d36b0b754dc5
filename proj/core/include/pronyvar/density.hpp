// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "pronyvar/ideal.hpp"
#include "pronyvar/prony.hpp"

namespace pronyvar {

/// Monomial representatives of the degree-delta piece of the quotient by the
/// recovered ideal: the non-pivot columns of degree <= delta, as polynomials
/// over the ideal's column basis.
std::vector<Poly> quotient_basis(const IdealBasis& ideal, int delta);

/// Density coordinates against the quotient pairing of a reference measure,
/// with the reconstruction evidence. The recovered polynomial is determined
/// only up to the ideal (any representative reproduces the moments), which
/// is why coordinates are reported over the quotient representatives.
struct DensityRecovery {
  std::vector<Poly> representatives;
  Eigen::VectorXcd coordinates;
  /// sum_v coordinates[v] * representatives[v] over the ideal's column basis.
  Poly density;
  QuotientGram gram;
  double gram_min_eigenvalue = 0.0;
  double gram_max_eigenvalue = 0.0;
  /// Largest reconstruction error over fitted table entries.
  double residual_fit = 0.0;
  /// Largest reconstruction error over the held-out top-degree entries
  /// (the highest-degree 20% of the table, never used in the solve).
  double residual_heldout = 0.0;
  std::size_t heldout_count = 0;
};

/// Solves  gram * g = (mu(involve(w)))_w  for the density g of mu against
/// the uniform measure of the curve body, given the degree-delta ideal
/// truncation. The gram pairing must be Hermitian positive definite; a
/// pivot or eigenvalue collapse below 1e-12 of the largest raises
/// numeric_error (representatives dependent along the curve).
DensityRecovery recover_density(const MomentTable& mu, const Space& space, const Body& curve, int delta,
                                const IdealBasis& ideal, const QuadratureConfig& quadrature = {});

/// Curve input for the pipeline: the ambient space plus one curve body.
struct CurveSpec {
  Space space;
  Body body;
};

/// Variety-then-measure pipeline output. Exactly one of density/atoms is
/// set: density when a curve is supplied, atoms otherwise.
struct PipelineResult {
  IdealBasis ideal;
  /// max |g(curve(t))| over generators and parameter samples.
  std::optional<double> parametrization_residual;
  std::optional<DensityRecovery> density;
  std::optional<AtomicRecovery> atoms;
};

/// Recovers the degree-`degree` ideal truncation with rows degree + delta,
/// then either checks the supplied curve against it and recovers the density
/// of the measure along the curve, or extracts atoms when no curve is given.
/// A curve whose samples violate the recovered generators beyond 1e-6 raises
/// validation_error.
PipelineResult full_pipeline(const MomentTable& table, int degree, int delta,
                             const std::optional<CurveSpec>& curve, const PronyOptions& prony = {},
                             const RankOptions& rank = {}, const QuadratureConfig& quadrature = {},
                             int threads = 1);

}  // namespace pronyvar
