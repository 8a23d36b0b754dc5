// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "pronyvar/density.hpp"

namespace pronyvar {

/// Order-preserving JSON so that emitted documents are byte-stable.
using json = nlohmann::ordered_json;

json complex_to_json(std::complex<double> z);
std::complex<double> complex_from_json(const json& j);

json multiindex_to_json(const MultiIndex& a);
MultiIndex multiindex_from_json(const json& j, int expected_n = -1);

/// {"ring": "R"|"L", "filtration": "total"|"max", "n": int, "degree": int}
json basis_to_json(const FiltrationBasis& basis);
FiltrationBasis basis_from_json(const json& j);

json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

json space_to_json(const Space& space);
Space space_from_json(const json& j);

json body_to_json(const Body& body);
Body body_from_json(const json& j);

json measure_to_json(const MeasureSpec& measure);
MeasureSpec measure_from_json(const json& j);

/// Tables list every basis entry in order; on input, omitted entries are
/// zero (sparse files are convenient for indicator-style torus tables).
json table_to_json(const MomentTable& table);
MomentTable table_from_json(const json& j);

json matrix_to_json(const MomentMatrix& matrix);
/// Row-major CSV with complex entries rendered as "re+imj".
std::string matrix_to_csv(const MomentMatrix& matrix);

json report_to_json(const KernelReport& report);
json ideal_to_json(const IdealBasis& ideal);
json atoms_to_json(const AtomicRecovery& recovery);
json density_to_json(const DensityRecovery& recovery);

json curve_to_json(const CurveSpec& curve);
CurveSpec curve_from_json(const json& j);

/// Parse failures raise validation_error naming the path.
json load_json_file(const std::string& path);
/// path "-" writes to stdout. Two-space indent, one trailing newline.
void save_json_file(const std::string& path, const json& j);

}  // namespace pronyvar
