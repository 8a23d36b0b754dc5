// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pronyvar/density.hpp"

using namespace pronyvar;
using Complex = std::complex<double>;
using Clock = std::chrono::steady_clock;

namespace {

std::string format(const char* fmt, ...) {
  va_list args;
  va_start(args, fmt);
  char buf[512];
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return std::string(buf);
}

// ---------------------------------------------------------------------------
// Shared random corpus: 100 instances, n in {1,2,3}, r in {1..6}, real atoms
// in [-1,1]^n at pairwise distance >= 0.2, complex weights with modulus in
// [0.1, 2].
// ---------------------------------------------------------------------------

struct Instance {
  int n = 0;
  int r = 0;
  int degree = 0;  // column degree r + 1
  std::vector<Eigen::VectorXcd> points;
  Eigen::VectorXcd weights;
  MomentTable table;  // covers degree 2 * degree + 1
};

Instance make_instance(int index) {
  Instance inst;
  inst.n = 1 + index % 3;
  inst.r = 1 + (index / 3) % 6;
  inst.degree = inst.r + 1;
  std::mt19937_64 rng(1000 + static_cast<std::uint64_t>(index));
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  std::uniform_real_distribution<double> modulus(0.1, 2.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);

  while (true) {
    inst.points.clear();
    bool ok = true;
    for (int j = 0; j < inst.r && ok; ++j) {
      int attempts = 0;
      while (true) {
        Eigen::VectorXcd p(inst.n);
        for (int k = 0; k < inst.n; ++k) p[k] = Complex(box(rng), 0.0);
        bool separated = true;
        for (const auto& q : inst.points)
          if ((p - q).norm() < 0.2) separated = false;
        if (separated) {
          inst.points.push_back(p);
          break;
        }
        if (++attempts > 10000) {
          ok = false;
          break;
        }
      }
    }
    if (ok) break;
  }

  inst.weights.resize(inst.r);
  for (int j = 0; j < inst.r; ++j) {
    double m = modulus(rng);
    double ph = phase(rng);
    inst.weights[j] = Complex(m * std::cos(ph), m * std::sin(ph));
  }

  MeasureSpec m;
  m.space = Space{Space::Kind::Affine, inst.n};
  for (int j = 0; j < inst.r; ++j)
    m.terms.push_back({inst.weights[j], AtomicBody{inst.points[j]}, std::nullopt});
  inst.table = moments(m, build_basis(inst.n, 2 * inst.degree + 1, RingKind::PolynomialR,
                                      FiltrationKind::TotalDegree));
  return inst;
}

const std::vector<Instance>& corpus() {
  static std::vector<Instance> all = [] {
    std::vector<Instance> v;
    v.reserve(100);
    for (int i = 0; i < 100; ++i) v.push_back(make_instance(i));
    return v;
  }();
  return all;
}

Eigen::MatrixXcd stack_points(const std::vector<Eigen::VectorXcd>& pts) {
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(pts.size()), pts.empty() ? 0 : pts[0].size());
  for (std::size_t j = 0; j < pts.size(); ++j) m.row(static_cast<Eigen::Index>(j)) = pts[j].transpose();
  return m;
}

AffineCurveBody unit_circle() {
  CoordinateFunction x;
  x.cos_coeffs = {1.0};
  CoordinateFunction y;
  y.sin_coeffs = {1.0};
  return AffineCurveBody{{x, y}, 0.0, 1.0};
}

// ---------------------------------------------------------------------------
// Criteria. Each returns "" on success, otherwise a failure description.
// ---------------------------------------------------------------------------

std::string criterion_roundtrip() {
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const Instance& inst = corpus()[i];
    AtomicRecovery rec = recover_atoms(inst.table, inst.degree);
    if (rec.count() != inst.r)
      return format("instance %zu: recovered %d atoms, expected %d", i, rec.count(), inst.r);
    double err = oracle::best_matching_error(rec.points, rec.weights, stack_points(inst.points), inst.weights);
    if (!(err <= 1e-8)) return format("instance %zu: matching error %.3e > 1e-8", i, err);
    // Forward moments of the recovered atoms against the input table.
    const FiltrationBasis& basis = inst.table.basis();
    double fwd = 0.0;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      Complex s = 0.0;
      for (int j = 0; j < rec.count(); ++j)
        s += rec.weights[j] * oracle::monomial_at(basis[a], rec.points.row(j).transpose());
      fwd = std::max(fwd, std::abs(s - inst.table.value(basis[a])));
    }
    if (!(fwd <= 1e-8)) return format("instance %zu: forward moment misfit %.3e > 1e-8", i, fwd);
  }
  return "";
}

std::string criterion_vandermonde() {
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const Instance& inst = corpus()[i];
    FiltrationBasis b = build_basis(inst.n, inst.degree, RingKind::PolynomialR, FiltrationKind::TotalDegree);
    MomentMatrix h = assemble(inst.table, b, b);
    VandermondeFactors f = vandermonde(inst.points, inst.weights, b, b, InvolutionKind::Trivial);
    double misfit = (h.values - f.product()).cwiseAbs().maxCoeff();
    double scale = h.values.norm();
    if (!(misfit <= 1e-12 * scale))
      return format("instance %zu: factorization misfit %.3e > 1e-12 * %.3e", i, misfit, scale);
  }
  return "";
}

std::string criterion_circle_kernel() {
  Space plane{Space::Kind::Affine, 2};
  MomentTable table = uniform_curve_moments(plane, unit_circle(),
                                            build_basis(2, 8, RingKind::PolynomialR, FiltrationKind::TotalDegree));
  IdealBasis at2 = recover_truncated_ideal(table, 2);
  if (at2.nullity() != 1) return format("degree 2 nullity %d, expected 1", at2.nullity());
  const Poly& g = at2.generators[0];
  double c = std::max({std::abs(g.coeff(MultiIndex({2, 0})) - Complex(1.0)),
                       std::abs(g.coeff(MultiIndex({0, 2})) - Complex(1.0)),
                       std::abs(g.coeff(MultiIndex({0, 0})) + Complex(1.0)),
                       std::abs(g.coeff(MultiIndex({1, 0}))), std::abs(g.coeff(MultiIndex({0, 1}))),
                       std::abs(g.coeff(MultiIndex({1, 1})))});
  if (!(c <= 1e-8)) return format("degree 2 generator deviates from x^2 + y^2 - 1 by %.3e", c);
  for (int d : {3, 4}) {
    IdealBasis ideal = recover_truncated_ideal(table, d);
    int expected = (d + 2) * (d + 1) / 2 - (2 * d + 1);
    if (ideal.nullity() != expected)
      return format("degree %d nullity %d, expected %d", d, ideal.nullity(), expected);
  }
  return "";
}

std::string criterion_torus_union() {
  Space torus{Space::Kind::Torus, 2};
  TrigCurveBody c1{{2, 1}};
  TrigCurveBody c2{{1, 2}};
  MeasureSpec m;
  m.space = torus;
  m.terms.push_back({Complex(1.0), c1, std::nullopt});
  m.terms.push_back({Complex(-1.0), c2, std::nullopt});
  MomentTable table = moments(m, build_basis(2, 8, RingKind::LaurentL, FiltrationKind::MaxDegree));

  // Ordinary-monomial rows never see the cancelling mass, so the constant
  // stays in every kernel.
  for (int dr = 0; dr <= 5; ++dr)
    for (int dc = 0; dc <= 5; ++dc) {
      FiltrationBasis rows = build_basis(2, dr, RingKind::PolynomialR, FiltrationKind::MaxDegree);
      FiltrationBasis cols = build_basis(2, dc, RingKind::PolynomialR, FiltrationKind::MaxDegree);
      MomentMatrix h = assemble(table, rows, cols);
      double residual = h.values.col(0).norm();  // column of the constant monomial
      if (!(residual <= 1e-12))
        return format("constant escapes ker H_{%d,%d}: residual %.3e", dr, dc, residual);
    }

  // Laurent rows with delta = 2 recover the union ideal truncation.
  RecoveryOptions opts;
  opts.policy = DeltaBound{2};
  opts.col_ring = RingKind::LaurentL;
  IdealBasis ideal = recover_truncated_ideal(table, 3, opts);

  std::vector<Eigen::VectorXcd> samples;
  for (const Body& body : {Body(c1), Body(c2)})
    for (double t : curve_sample_parameters(body, 200)) samples.push_back(curve_point(torus, body, t));
  for (const Poly& g : ideal.generators) {
    double scale = std::max(1.0, g.norm());
    for (const auto& p : samples) {
      double v = std::abs(evaluate(g, p)) / scale;
      if (!(v <= 1e-8)) return format("generator value %.3e on a union sample", v);
    }
  }
  int oracle_dim = oracle::sampling_nullity(oracle::evaluation_matrix(samples, ideal.column_basis));
  if (ideal.nullity() != oracle_dim)
    return format("kernel dim %d, sampling oracle %d", ideal.nullity(), oracle_dim);
  return "";
}

std::string criterion_signed_segment() {
  Space line{Space::Kind::Affine, 1};
  CoordinateFunction f;
  f.poly = {0.0, 1.0};
  AffineCurveBody segment{{f}, -1.0, 1.0};
  FiltrationBasis db = build_basis(1, 1, RingKind::PolynomialR, FiltrationKind::TotalDegree);
  MeasureSpec m;
  m.space = line;
  m.terms.push_back({Complex(1.0), segment, Poly::monomial(db, MultiIndex({1}))});
  MomentTable table = moments(m, build_basis(1, 13, RingKind::PolynomialR, FiltrationKind::TotalDegree));

  for (int d : {2, 4, 6}) {
    FiltrationBasis b = build_basis(1, d, RingKind::PolynomialR, FiltrationKind::TotalDegree);
    MomentMatrix h = assemble(table, b, b);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(h.values);
    double det = svd.singularValues().prod();
    double bound = 1e-10 * std::pow(svd.singularValues()[0], d + 1);
    if (!(det <= bound)) return format("degree %d: |det| %.3e above singular bound %.3e", d, det, bound);
  }
  for (int d = 0; d <= 6; ++d) {
    FiltrationBasis rows = build_basis(1, d + 1, RingKind::PolynomialR, FiltrationKind::TotalDegree);
    FiltrationBasis cols = build_basis(1, d, RingKind::PolynomialR, FiltrationKind::TotalDegree);
    IdealBasis k = numerical_kernel(assemble(table, rows, cols));
    if (k.nullity() != 0) return format("H_{%d,%d} nullity %d, expected 0", d + 1, d, k.nullity());
  }
  return "";
}

std::string criterion_two_atoms() {
  Space line{Space::Kind::Affine, 1};
  std::vector<Eigen::VectorXcd> pts(2, Eigen::VectorXcd(1));
  pts[0] << Complex(0.5);
  pts[1] << Complex(-0.5);
  Eigen::VectorXcd w(2);
  w << Complex(1.0), Complex(-1.0);
  MeasureSpec m;
  m.space = line;
  m.terms.push_back({w[0], AtomicBody{pts[0]}, std::nullopt});
  m.terms.push_back({w[1], AtomicBody{pts[1]}, std::nullopt});
  MomentTable table = moments(m, build_basis(1, 8, RingKind::PolynomialR, FiltrationKind::TotalDegree));

  FiltrationBasis b0 = build_basis(1, 0, RingKind::PolynomialR, FiltrationKind::TotalDegree);
  MomentMatrix h00 = assemble(table, b0, b0);
  if (std::abs(h00.values(0, 0)) > 1e-15) return "H_{0,0} is not the zero matrix";
  IdealBasis k00 = numerical_kernel(h00);
  if (k00.nullity() != 1) return format("H_{0,0} nullity %d, expected 1", k00.nullity());
  if (std::abs(k00.generators[0].coeff(MultiIndex({0})) - Complex(1.0)) > 1e-12)
    return "H_{0,0} kernel generator is not the constant 1";

  for (int d = 2; d <= 3; ++d) {
    FiltrationBasis cols = build_basis(1, d, RingKind::PolynomialR, FiltrationKind::TotalDegree);
    Eigen::MatrixXcd truth = oracle::vandermonde_nullspace(pts, cols);
    for (int dr = d; dr <= 5; ++dr) {
      FiltrationBasis rows = build_basis(1, dr, RingKind::PolynomialR, FiltrationKind::TotalDegree);
      IdealBasis k = numerical_kernel(assemble(table, rows, cols));
      if (k.orthonormal_kernel.cols() != truth.cols())
        return format("H_{%d,%d} nullity %d, oracle %d", dr, d, k.nullity(), static_cast<int>(truth.cols()));
      double angle = std::max(containment_angle(k.orthonormal_kernel, truth),
                              containment_angle(truth, k.orthonormal_kernel));
      if (!(angle <= 1e-9))
        return format("H_{%d,%d} kernel is %.3e rad away from the point ideal", dr, d, angle);
    }
  }
  return "";
}

std::string criterion_density() {
  Space plane{Space::Kind::Affine, 2};
  FiltrationBasis db = build_basis(2, 1, RingKind::PolynomialR, FiltrationKind::TotalDegree);
  Poly g = Poly::constant(db, 1.0) + Complex(0.5) * Poly::monomial(db, MultiIndex({1, 0}));
  MeasureSpec mu;
  mu.space = plane;
  mu.terms.push_back({Complex(1.0), unit_circle(), g});
  MomentTable table = moments(mu, build_basis(2, 7, RingKind::PolynomialR, FiltrationKind::TotalDegree));

  PipelineResult result = full_pipeline(table, 3, 1, CurveSpec{plane, unit_circle()});
  if (!result.density) return "pipeline returned no density";
  const DensityRecovery& rec = *result.density;
  double dev = std::max({std::abs(rec.density.coeff(MultiIndex({0, 0})) - Complex(1.0)),
                         std::abs(rec.density.coeff(MultiIndex({1, 0})) - Complex(0.5)),
                         std::abs(rec.density.coeff(MultiIndex({0, 1})))});
  if (!(dev <= 1e-6)) return format("density coordinates deviate by %.3e from (1, 1/2, 0)", dev);
  if (!(rec.residual_heldout <= 1e-6))
    return format("held-out residual %.3e > 1e-6", rec.residual_heldout);
  if (!(rec.gram_min_eigenvalue >= 0.1))
    return format("gram min eigenvalue %.3e < 0.1", rec.gram_min_eigenvalue);

  // Independent forward simulation: integrate g-hat against raw samples of
  // the circle with a hand-rolled trapezoid rule and compare to the table.
  int nodes = 512;
  double worst = 0.0;
  const FiltrationBasis& basis = table.basis();
  for (std::size_t a = 0; a < basis.size(); ++a) {
    Complex acc = 0.0;
    for (int s = 0; s < nodes; ++s) {
      double t = static_cast<double>(s) / nodes;
      Eigen::VectorXcd p(2);
      p << Complex(std::cos(2 * M_PI * t), 0.0), Complex(std::sin(2 * M_PI * t), 0.0);
      acc += evaluate(rec.density, p) * oracle::monomial_at(basis[a], p);
    }
    acc /= static_cast<double>(nodes);
    worst = std::max(worst, std::abs(acc - table.value(basis[a])));
  }
  if (!(worst <= 1e-6)) return format("forward simulation misfit %.3e > 1e-6", worst);
  return "";
}

std::string criterion_chain(const Clock::time_point& started) {
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const Instance& inst = corpus()[i];
    FiltrationBasis cols = build_basis(inst.n, inst.degree, RingKind::PolynomialR, FiltrationKind::TotalDegree);
    FiltrationBasis rows_sq = cols;
    FiltrationBasis rows_up = build_basis(inst.n, inst.degree + 1, RingKind::PolynomialR, FiltrationKind::TotalDegree);
    MomentMatrix h_sq = assemble(inst.table, rows_sq, cols);
    MomentMatrix h_up = assemble(inst.table, rows_up, cols);

    // Truncated point ideal sits inside the kernel.
    Eigen::MatrixXcd truth = oracle::vandermonde_nullspace(inst.points, cols);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(h_sq.values);
    double scale = svd.singularValues()[0];
    double worst = (h_sq.values * truth).cwiseAbs().maxCoeff() / scale;
    if (!(worst <= 1e-8))
      return format("instance %zu: ideal column leaks %.3e through H", i, worst);

    // More rows can only shrink the kernel.
    IdealBasis k_sq = numerical_kernel(h_sq);
    IdealBasis k_up = numerical_kernel(h_up);
    if (k_up.nullity() > k_sq.nullity())
      return format("instance %zu: nullity grew from %d to %d", i, k_sq.nullity(), k_up.nullity());
    double angle = containment_angle(k_up.orthonormal_kernel, k_sq.orthonormal_kernel);
    if (!(angle <= 1e-8))
      return format("instance %zu: kernel chain broken by %.3e rad", i, angle);
  }
  double elapsed = std::chrono::duration<double>(Clock::now() - started).count();
  if (elapsed > 120.0) return format("suite took %.1f s > 120 s", elapsed);
  return "";
}

}  // namespace

int main() {
  Clock::time_point started = Clock::now();
  struct Criterion {
    int id;
    const char* label;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "zero-dimensional round-trip on 100 random instances", criterion_roundtrip},
      {2, "moment matrices match their evaluation factorization", criterion_vandermonde},
      {3, "circle kernel dimensions and defining equation", criterion_circle_kernel},
      {4, "signed torus measure: row ring and union ideal", criterion_torus_union},
      {5, "signed segment density: singular squares, trivial kernels", criterion_signed_segment},
      {6, "two cancelling atoms: degenerate and settled kernels", criterion_two_atoms},
      {7, "density recovery on the circle", criterion_density},
      {8, "kernel chain and ideal containment on the corpus", [&] { return criterion_chain(started); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      detail = format("exception: %s", e.what());
    }
    if (detail.empty()) {
      std::printf("[PASS] criterion %d: %s\n", c.id, c.label);
    } else {
      std::printf("[FAIL] criterion %d: %s: %s\n", c.id, c.label, detail.c_str());
      ++failures;
    }
  }
  double elapsed = std::chrono::duration<double>(Clock::now() - started).count();
  std::printf("%d/%zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failures,
              criteria.size(), elapsed);
  return failures == 0 ? 0 : 1;
}
