// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "pronyvar/density.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>
#include <sstream>

#include "pronyvar/errors.hpp"

namespace pronyvar {

std::vector<Poly> quotient_basis(const IdealBasis& ideal, int delta) {
  if (delta < 0) throw validation_error("quotient_basis: negative degree");
  if (delta > ideal.column_basis.degree())
    throw validation_error("quotient_basis: delta exceeds the recovered truncation degree");
  std::vector<Poly> reps;
  for (std::size_t j : ideal.standard_monomial_indices(delta))
    reps.push_back(Poly::monomial(ideal.column_basis, ideal.column_basis[j]));
  return reps;
}

namespace {

constexpr double kPositivityRelTol = 1e-12;
constexpr double kHermitianRelTol = 1e-10;

// Entry indices of the top-degree 20% of the table basis: highest filtration
// degree first, grlex-descending inside a shell.
std::vector<std::size_t> heldout_indices(const FiltrationBasis& basis) {
  std::size_t count = basis.size() / 5;
  std::vector<std::size_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(basis.size() - 1 - i);
  return out;
}

}  // namespace

DensityRecovery recover_density(const MomentTable& mu, const Space& space, const Body& curve, int delta,
                                const IdealBasis& ideal, const QuadratureConfig& quadrature) {
  if (!(space == mu.space()))
    throw validation_error("recover_density: curve space does not match the moment table");
  if (!body_is_curve(curve)) throw validation_error("recover_density: the support body must be a curve");
  if (body_dimension(curve) != space.n)
    throw validation_error("recover_density: curve dimension does not match the space");
  if (mu.max_degree() < delta)
    throw validation_error("recover_density: the table must cover the density degree");

  DensityRecovery out;
  out.representatives = quotient_basis(ideal, delta);
  if (out.representatives.empty())
    throw validation_error(
        "recover_density: the quotient in degree <= delta is zero; the recovered ideal leaves no room "
        "for a density");

  // Reference moments must pair every two representatives and reach every
  // table entry shifted by one representative.
  int reference_degree = mu.max_degree() + delta;
  FiltrationBasis reference_basis =
      build_basis(space.n, reference_degree, mu.basis().ring(), mu.basis().filtration());
  MomentTable reference = uniform_curve_moments(space, curve, reference_basis, quadrature);

  QuotientGram gram = quotient_gram(reference, out.representatives);
  Eigen::Index m = gram.values.rows();
  double scale = gram.values.cwiseAbs().maxCoeff();
  double asym = (gram.values - gram.values.adjoint()).cwiseAbs().maxCoeff();
  if (scale > 0.0 && asym > kHermitianRelTol * scale) {
    std::ostringstream os;
    os << "recover_density: quotient pairing is not Hermitian (deviation " << asym << " at scale " << scale
       << "); the reference measure is not real";
    throw numeric_error(os.str());
  }
  Eigen::MatrixXcd hermitian = 0.5 * (gram.values + gram.values.adjoint());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitian);
  if (es.info() != Eigen::Success) throw numeric_error("recover_density: gram eigensolve failed");
  out.gram_min_eigenvalue = es.eigenvalues().minCoeff();
  out.gram_max_eigenvalue = es.eigenvalues().maxCoeff();
  if (out.gram_min_eigenvalue <= kPositivityRelTol * std::max(out.gram_max_eigenvalue, 0.0)) {
    std::ostringstream os;
    os << "recover_density: quotient pairing lost positive definiteness (eigenvalues in ["
       << out.gram_min_eigenvalue << ", " << out.gram_max_eigenvalue
       << "]); representatives are dependent along the curve or the reference measure is signed";
    throw numeric_error(os.str());
  }

  Eigen::LDLT<Eigen::MatrixXcd> ldlt(hermitian);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
    throw numeric_error("recover_density: Hermitian factorization of the quotient pairing failed");
  {
    Eigen::VectorXd d = ldlt.vectorD().real();
    if (d.minCoeff() <= kPositivityRelTol * d.maxCoeff())
      throw numeric_error("recover_density: a pivot of the quotient pairing collapsed below tolerance");
  }

  InvolutionKind involution = space.involution();
  Eigen::VectorXcd rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Poly& w = out.representatives[static_cast<std::size_t>(i)];
    Poly wbar = involution == InvolutionKind::Laurent ? involve(to_laurent(w), involution) : w;
    rhs[i] = mu.apply(wbar);
  }
  out.coordinates = ldlt.solve(rhs);
  out.gram = std::move(gram);

  Poly density = Poly::zero(ideal.column_basis);
  for (Eigen::Index i = 0; i < m; ++i)
    density = density + out.coordinates[i] * out.representatives[static_cast<std::size_t>(i)];
  out.density = embed(density, ideal.column_basis);

  // Reconstruction audit: the recovered density must reproduce the input
  // table through the reference measure, top-degree slice held out.
  std::vector<std::size_t> held = heldout_indices(mu.basis());
  out.heldout_count = held.size();
  std::vector<bool> is_held(mu.basis().size(), false);
  for (std::size_t i : held) is_held[i] = true;
  for (std::size_t a = 0; a < mu.basis().size(); ++a) {
    std::complex<double> predicted = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      const Poly& rep = out.representatives[static_cast<std::size_t>(i)];
      predicted +=
          out.coordinates[i] * reference.apply(Poly::monomial(mu.basis(), mu.basis()[a]) * rep);
    }
    double err = std::abs(predicted - mu.values()[static_cast<Eigen::Index>(a)]);
    if (is_held[a])
      out.residual_heldout = std::max(out.residual_heldout, err);
    else
      out.residual_fit = std::max(out.residual_fit, err);
  }
  return out;
}

}  // namespace pronyvar
