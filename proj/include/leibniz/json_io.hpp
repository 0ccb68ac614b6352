#pragma once

#include "leibniz/derivations.hpp"
#include "leibniz/families.hpp"
#include "leibniz/quotients.hpp"
#include "leibniz/transforms.hpp"

#include "json.hpp"

#include <string>

namespace leibniz {

using Json = nlohmann::json;

// Coefficients are strings in lowest terms ("3", "-1/2"). Readers also accept
// JSON integers. Malformed input throws UsageError.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// {"dim": n, "brackets": [{"left": i, "right": j, "result": [{"basis": k, "coeff": "c"}]}]}
Json algebra_to_json(const StructureTensor& T);
StructureTensor algebra_from_json(const Json& j);

// {"dim": n, "columns": [[c_11, c_21, ...], ...]}
Json map_to_json(const LinearMap& m);
LinearMap map_from_json(const Json& j);

// {"family": "G1", "n": 6, "params": {"a": "3/2"}}
Json descriptor_to_json(const AlgebraDescriptor& d);
AlgebraDescriptor descriptor_from_json(const Json& j);

Json vector_to_json(const Vector& v);
Json subspace_to_json(const Subspace& s);
Json series_to_json(const SeriesResult& s);
Json violation_to_json(const IdentityViolation& v);
Json certificate_to_json(const IdealCertificate& c);

// {"dim": n, "fixed": [algebra-style bracket entries], "zero": [[i, j, k], ...]}
Json pattern_to_json(const ShapePattern& p);
ShapePattern pattern_from_json(const Json& j);

// {"steps": [{"description": "...", "map": {...}}]}
Json chain_to_json(const std::vector<TransformStep>& steps);
std::vector<TransformStep> chain_from_json(const Json& j);

Json read_json_file(const std::string& path);
// Writes text to path, or to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);

} // namespace leibniz
