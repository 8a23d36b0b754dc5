// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the hot path: moment matrix assembly, the SVD kernel,
// and the end-to-end atomic reconstruction.

#include <benchmark/benchmark.h>

#include <complex>
#include <random>

#include "pronyvar/ideal.hpp"
#include "pronyvar/moment_table.hpp"
#include "pronyvar/prony.hpp"

namespace {

using namespace pronyvar;
using Complex = std::complex<double>;

MomentTable atomic_table(int n, int atoms, int degree) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  MeasureSpec m;
  m.space = Space{Space::Kind::Affine, n};
  for (int j = 0; j < atoms; ++j) {
    Eigen::VectorXcd p(n);
    for (int k = 0; k < n; ++k) p[k] = Complex(unit(rng), 0.0);
    m.terms.push_back({Complex(0.5 + 0.5 * (j + 1), 0.0), AtomicBody{p}, std::nullopt});
  }
  return moments(m, build_basis(n, degree, RingKind::PolynomialR, FiltrationKind::TotalDegree));
}

void bm_assemble(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  MomentTable table = atomic_table(3, 6, 2 * degree);
  FiltrationBasis b = build_basis(3, degree, RingKind::PolynomialR, FiltrationKind::TotalDegree);
  for (auto _ : state) {
    MomentMatrix h = assemble(table, b, b);
    benchmark::DoNotOptimize(h.values.data());
  }
  state.SetComplexityN(static_cast<std::int64_t>(b.size()));
}
BENCHMARK(bm_assemble)->Arg(4)->Arg(6)->Arg(8)->Complexity(benchmark::oNSquared);

void bm_kernel(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  MomentTable table = atomic_table(3, 6, 2 * degree);
  FiltrationBasis b = build_basis(3, degree, RingKind::PolynomialR, FiltrationKind::TotalDegree);
  MomentMatrix h = assemble(table, b, b);
  for (auto _ : state) {
    IdealBasis kernel = numerical_kernel(h);
    benchmark::DoNotOptimize(kernel.report.rank);
  }
}
BENCHMARK(bm_kernel)->Arg(4)->Arg(6)->Arg(8);

void bm_recover_atoms(benchmark::State& state) {
  const int atoms = static_cast<int>(state.range(0));
  MomentTable table = atomic_table(2, atoms, 2 * (atoms + 1));
  for (auto _ : state) {
    AtomicRecovery rec = recover_atoms(table, atoms + 1);
    benchmark::DoNotOptimize(rec.weights.data());
  }
}
BENCHMARK(bm_recover_atoms)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
