// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "pronyvar/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pronyvar/errors.hpp"

namespace pronyvar {

namespace {

[[noreturn]] void fail(const std::string& what) { throw validation_error("json: " + what); }

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key \"") + key + "\" in " + j.dump());
  return *it;
}

double number_from(const json& j, const char* what) {
  if (!j.is_number()) fail(std::string(what) + " must be a number, got " + j.dump());
  return j.get<double>();
}

int int_from(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer, got " + j.dump());
  return j.get<int>();
}

RingKind ring_from(const json& j) {
  std::string s = j.get<std::string>();
  if (s == "R") return RingKind::PolynomialR;
  if (s == "L") return RingKind::LaurentL;
  fail("ring must be \"R\" or \"L\", got \"" + s + "\"");
}

FiltrationKind filtration_from(const json& j) {
  std::string s = j.get<std::string>();
  if (s == "total") return FiltrationKind::TotalDegree;
  if (s == "max") return FiltrationKind::MaxDegree;
  fail("filtration must be \"total\" or \"max\", got \"" + s + "\"");
}

}  // namespace

json complex_to_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::complex<double> complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) fail("complex values are [re, im] pairs, got " + j.dump());
  return {number_from(j[0], "re"), number_from(j[1], "im")};
}

json multiindex_to_json(const MultiIndex& a) {
  json out = json::array();
  for (int v : a.exponents()) out.push_back(v);
  return out;
}

MultiIndex multiindex_from_json(const json& j, int expected_n) {
  if (!j.is_array()) fail("multi-index must be an array of integers, got " + j.dump());
  std::vector<int> e;
  e.reserve(j.size());
  for (const auto& v : j) e.push_back(int_from(v, "exponent"));
  if (expected_n >= 0 && static_cast<int>(e.size()) != expected_n)
    fail("multi-index length " + std::to_string(e.size()) + " does not match n=" + std::to_string(expected_n));
  return MultiIndex(std::move(e));
}

json basis_to_json(const FiltrationBasis& basis) {
  return json{{"ring", to_string(basis.ring())},
              {"filtration", to_string(basis.filtration())},
              {"n", basis.ambient_dimension()},
              {"degree", basis.degree()}};
}

FiltrationBasis basis_from_json(const json& j) {
  return build_basis(int_from(require(j, "n"), "n"), int_from(require(j, "degree"), "degree"),
                     ring_from(require(j, "ring")), filtration_from(require(j, "filtration")));
}

json poly_to_json(const Poly& p) {
  json terms = json::array();
  const auto& b = p.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::complex<double> c = p.coeffs()[static_cast<Eigen::Index>(i)];
    if (c != 0.0) terms.push_back(json{{"alpha", multiindex_to_json(b[i])}, {"coeff", complex_to_json(c)}});
  }
  return json{{"ring", to_string(b.ring())},
              {"filtration", to_string(b.filtration())},
              {"n", b.ambient_dimension()},
              {"degree", b.degree()},
              {"terms", std::move(terms)}};
}

Poly poly_from_json(const json& j) {
  int n = int_from(require(j, "n"), "n");
  RingKind ring = ring_from(require(j, "ring"));
  FiltrationKind filtration = filtration_from(require(j, "filtration"));
  const json& terms = require(j, "terms");
  if (!terms.is_array()) fail("poly terms must be an array");

  std::vector<std::pair<MultiIndex, std::complex<double>>> parsed;
  int degree = 0;
  for (const auto& t : terms) {
    MultiIndex a = multiindex_from_json(require(t, "alpha"), n);
    parsed.emplace_back(a, complex_from_json(require(t, "coeff")));
    degree = std::max(degree, filtration_degree(a, filtration));
  }
  if (j.contains("degree")) degree = std::max(degree, int_from(j["degree"], "degree"));

  Poly p = Poly::zero(build_basis(n, degree, ring, filtration));
  Eigen::VectorXcd c = p.coeffs();
  for (const auto& [a, v] : parsed) {
    auto idx = p.basis().index_of(a);
    if (!idx) fail("poly term " + a.to_string() + " not admissible in " + p.basis().describe());
    c[static_cast<Eigen::Index>(*idx)] += v;
  }
  return Poly(p.basis(), std::move(c));
}

json space_to_json(const Space& space) {
  return json{{"kind", space.kind == Space::Kind::Torus ? "torus" : "affine"}, {"n", space.n}};
}

Space space_from_json(const json& j) {
  Space s;
  std::string kind = require(j, "kind").get<std::string>();
  if (kind == "torus")
    s.kind = Space::Kind::Torus;
  else if (kind == "affine")
    s.kind = Space::Kind::Affine;
  else
    fail("space kind must be \"affine\" or \"torus\", got \"" + kind + "\"");
  s.n = int_from(require(j, "n"), "n");
  return s;
}

namespace {

json coordinate_to_json(const CoordinateFunction& c) {
  json out = json::object();
  if (!c.poly.empty()) out["poly"] = c.poly;
  if (!c.cos_coeffs.empty()) out["cos"] = c.cos_coeffs;
  if (!c.sin_coeffs.empty()) out["sin"] = c.sin_coeffs;
  return out;
}

CoordinateFunction coordinate_from_json(const json& j) {
  CoordinateFunction c;
  if (j.contains("poly")) c.poly = j["poly"].get<std::vector<double>>();
  if (j.contains("cos")) c.cos_coeffs = j["cos"].get<std::vector<double>>();
  if (j.contains("sin")) c.sin_coeffs = j["sin"].get<std::vector<double>>();
  return c;
}

}  // namespace

json body_to_json(const Body& body) {
  if (const auto* atom = std::get_if<AtomicBody>(&body)) {
    json point = json::array();
    for (Eigen::Index i = 0; i < atom->point.size(); ++i) point.push_back(complex_to_json(atom->point[i]));
    return json{{"kind", "atomic"}, {"point", std::move(point)}};
  }
  if (const auto* trig = std::get_if<TrigCurveBody>(&body))
    return json{{"kind", "trig_curve"}, {"v", trig->direction}};
  const auto& curve = std::get<AffineCurveBody>(body);
  json coords = json::array();
  for (const auto& c : curve.coords) coords.push_back(coordinate_to_json(c));
  return json{{"kind", "affine_curve"}, {"coords", std::move(coords)}, {"domain", {curve.a, curve.b}}};
}

Body body_from_json(const json& j) {
  std::string kind = require(j, "kind").get<std::string>();
  if (kind == "atomic") {
    const json& pj = require(j, "point");
    if (!pj.is_array()) fail("atomic point must be an array");
    AtomicBody atom;
    atom.point.resize(static_cast<Eigen::Index>(pj.size()));
    for (std::size_t i = 0; i < pj.size(); ++i)
      atom.point[static_cast<Eigen::Index>(i)] = complex_from_json(pj[i]);
    return atom;
  }
  if (kind == "trig_curve") {
    TrigCurveBody trig;
    const json& vj = require(j, "v");
    if (!vj.is_array()) fail("trig_curve v must be an array of integers");
    for (const auto& v : vj) trig.direction.push_back(int_from(v, "v entry"));
    return trig;
  }
  if (kind == "affine_curve") {
    AffineCurveBody curve;
    const json& cj = require(j, "coords");
    if (!cj.is_array()) fail("affine_curve coords must be an array");
    for (const auto& c : cj) curve.coords.push_back(coordinate_from_json(c));
    const json& dj = require(j, "domain");
    if (!dj.is_array() || dj.size() != 2) fail("affine_curve domain must be [a, b]");
    curve.a = number_from(dj[0], "domain start");
    curve.b = number_from(dj[1], "domain end");
    return curve;
  }
  fail("body kind must be \"atomic\", \"trig_curve\" or \"affine_curve\", got \"" + kind + "\"");
}

json measure_to_json(const MeasureSpec& measure) {
  json terms = json::array();
  for (const auto& term : measure.terms) {
    json t{{"weight", complex_to_json(term.weight)}, {"body", body_to_json(term.body)}};
    t["density"] = term.density ? poly_to_json(*term.density) : json(nullptr);
    terms.push_back(std::move(t));
  }
  return json{{"space", space_to_json(measure.space)}, {"terms", std::move(terms)}};
}

MeasureSpec measure_from_json(const json& j) {
  MeasureSpec m;
  m.space = space_from_json(require(j, "space"));
  const json& terms = require(j, "terms");
  if (!terms.is_array()) fail("measure terms must be an array");
  for (const auto& t : terms) {
    WeightedComponent c;
    c.weight = complex_from_json(require(t, "weight"));
    c.body = body_from_json(require(t, "body"));
    if (t.contains("density") && !t["density"].is_null()) c.density = poly_from_json(t["density"]);
    m.terms.push_back(std::move(c));
  }
  m.validate();
  return m;
}

json table_to_json(const MomentTable& table) {
  json entries = json::array();
  const auto& b = table.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    entries.push_back(json{{"alpha", multiindex_to_json(b[i])},
                           {"value", complex_to_json(table.values()[static_cast<Eigen::Index>(i)])}});
  json out{{"space", space_to_json(table.space())},
           {"ring", to_string(b.ring())},
           {"filtration", to_string(b.filtration())},
           {"max_degree", b.degree()},
           {"entries", std::move(entries)},
           {"provenance", to_string(table.provenance())}};
  if (table.provenance() == Provenance::Quadrature) out["quadrature_nodes"] = table.quadrature_nodes();
  return out;
}

MomentTable table_from_json(const json& j) {
  Space space = space_from_json(require(j, "space"));
  FiltrationKind filtration = filtration_from(require(j, "filtration"));
  RingKind ring = j.contains("ring") ? ring_from(j["ring"]) : space.row_ring();
  int degree = int_from(require(j, "max_degree"), "max_degree");
  FiltrationBasis basis = build_basis(space.n, degree, ring, filtration);

  Eigen::VectorXcd values = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
  const json& entries = require(j, "entries");
  if (!entries.is_array()) fail("table entries must be an array");
  for (const auto& e : entries) {
    MultiIndex a = multiindex_from_json(require(e, "alpha"), space.n);
    auto idx = basis.index_of(a);
    if (!idx) fail("table entry " + a.to_string() + " not admissible in " + basis.describe());
    values[static_cast<Eigen::Index>(*idx)] = complex_from_json(require(e, "value"));
  }

  Provenance prov = Provenance::Exact;
  int nodes = 0;
  if (j.contains("provenance")) {
    std::string p = j["provenance"].get<std::string>();
    if (p == "quadrature")
      prov = Provenance::Quadrature;
    else if (p != "exact")
      fail("provenance must be \"exact\" or \"quadrature\"");
  }
  if (j.contains("quadrature_nodes")) nodes = int_from(j["quadrature_nodes"], "quadrature_nodes");
  return MomentTable(space, std::move(basis), std::move(values), prov, nodes);
}

json matrix_to_json(const MomentMatrix& matrix) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < matrix.values.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < matrix.values.cols(); ++k) row.push_back(complex_to_json(matrix.values(i, k)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", basis_to_json(matrix.rows)},
              {"cols", basis_to_json(matrix.cols)},
              {"involution", to_string(matrix.involution)},
              {"shape", {matrix.values.rows(), matrix.values.cols()}},
              {"values", std::move(rows)}};
}

std::string matrix_to_csv(const MomentMatrix& matrix) {
  std::ostringstream os;
  char buf[96];
  for (Eigen::Index i = 0; i < matrix.values.rows(); ++i) {
    for (Eigen::Index k = 0; k < matrix.values.cols(); ++k) {
      std::complex<double> z = matrix.values(i, k);
      std::snprintf(buf, sizeof buf, "%.17g%+.17gj", z.real(), z.imag());
      if (k) os << ",";
      os << buf;
    }
    os << "\n";
  }
  return os.str();
}

json report_to_json(const KernelReport& report) {
  json sv = json::array();
  for (Eigen::Index i = 0; i < report.singular_values.size(); ++i) sv.push_back(report.singular_values[i]);
  return json{{"rows", report.rows},
              {"cols", report.cols},
              {"rank", report.rank},
              {"nullity", report.nullity()},
              {"singular_values", std::move(sv)},
              {"tolerance", report.tolerance},
              {"auto_tolerance", report.auto_tolerance},
              {"gap_rule_applied", report.gap_rule_applied},
              {"gap_ratio", report.gap_ratio ? json(*report.gap_ratio) : json(nullptr)}};
}

json ideal_to_json(const IdealBasis& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators) gens.push_back(poly_to_json(g));
  json out{{"row_basis", basis_to_json(ideal.row_basis)},
           {"column_basis", basis_to_json(ideal.column_basis)},
           {"generators", std::move(gens)},
           {"pivots", ideal.pivots}};
  json report = report_to_json(ideal.report);
  for (auto& [key, value] : report.items()) out[key] = value;
  out["stabilized_at"] = ideal.stabilized_at >= 0 ? json(ideal.stabilized_at) : json(nullptr);
  return out;
}

json atoms_to_json(const AtomicRecovery& recovery) {
  json points = json::array();
  for (Eigen::Index i = 0; i < recovery.points.rows(); ++i) {
    json p = json::array();
    for (Eigen::Index k = 0; k < recovery.points.cols(); ++k)
      p.push_back(complex_to_json(recovery.points(i, k)));
    points.push_back(std::move(p));
  }
  json weights = json::array();
  for (Eigen::Index i = 0; i < recovery.weights.size(); ++i)
    weights.push_back(complex_to_json(recovery.weights[i]));
  return json{{"count", recovery.count()},
              {"points", std::move(points)},
              {"weights", std::move(weights)},
              {"point_residual", recovery.point_residual},
              {"weight_residual", recovery.weight_residual},
              {"warnings", recovery.warnings}};
}

json density_to_json(const DensityRecovery& recovery) {
  json reps = json::array();
  for (const auto& r : recovery.representatives) reps.push_back(poly_to_json(r));
  json coords = json::array();
  for (Eigen::Index i = 0; i < recovery.coordinates.size(); ++i)
    coords.push_back(complex_to_json(recovery.coordinates[i]));
  json gram_rows = json::array();
  for (Eigen::Index i = 0; i < recovery.gram.values.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < recovery.gram.values.cols(); ++k)
      row.push_back(complex_to_json(recovery.gram.values(i, k)));
    gram_rows.push_back(std::move(row));
  }
  return json{{"quotient_basis", std::move(reps)},
              {"coordinates", std::move(coords)},
              {"density", poly_to_json(recovery.density)},
              {"gram", std::move(gram_rows)},
              {"gram_min_eigenvalue", recovery.gram_min_eigenvalue},
              {"gram_max_eigenvalue", recovery.gram_max_eigenvalue},
              {"residual_fit", recovery.residual_fit},
              {"residual_heldout", recovery.residual_heldout},
              {"heldout_count", recovery.heldout_count}};
}

json curve_to_json(const CurveSpec& curve) {
  return json{{"space", space_to_json(curve.space)}, {"body", body_to_json(curve.body)}};
}

CurveSpec curve_from_json(const json& j) {
  CurveSpec c;
  c.space = space_from_json(require(j, "space"));
  c.body = body_from_json(require(j, "body"));
  if (!body_is_curve(c.body)) fail("curve file must hold a curve body");
  if (body_dimension(c.body) != c.space.n) fail("curve body dimension does not match its space");
  return c;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw validation_error("cannot parse " + path + " as JSON");
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::string text = j.dump(2);
  text.push_back('\n');
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw validation_error("cannot open " + path + " for writing");
  out << text;
}

}  // namespace pronyvar
