#pragma once

#include "qlp/coulomb.hpp"
#include "qlp/linkpat.hpp"
#include "qlp/uqsl2.hpp"

#include <json.hpp>

#include <string_view>

namespace qlp {

using json = nlohmann::ordered_json;

// {"p", "valences", "links": [[a, b, mult]], "defects": {"i": count}}
json to_json(const LinkPattern &w);
LinkPattern pattern_from_json(const json &j);
// Accepts the JSON form or the compact text form "(2,1,1)[1-2x2]{3:1}".
LinkPattern parse_pattern(std::string_view text);

// {"shape", "coeffs": [{"index", "value"}]}, indices in lexicographic order
json to_json(const TensorVector &v);
TensorVector vector_from_json(const json &j);

// {"p", "exponents": [{"pair", "value"}], "denominator": [{"pair", "power"}], "numerator": [{"monomial", "value"}]}
json to_json(const CoulombExpr &f);

} // namespace qlp
