#pragma once

// JSON form of AlgebraSpec. Rationals are strings "p/q" (plain JSON
// integers are also accepted); decimals are rejected.
//
//   {"family": "H3", "dim": 4, "a": ["1","0","0","0"], "b": ["0","1","0","0"]}
//   {"family": "Of", "dim": 8, "f": {"skew": [[...8 rows...]]}}
//   {"family": "Cracovian", "dim": 8, "base": {...}, "e": ["1","0",...]}

#include "avw/factory.hpp"

#include <json.hpp>

#include <string>

namespace avw {

using Json = nlohmann::json;

Scalar scalar_from_json(const Json& j);
Json scalar_to_json(const Scalar& s);
Element element_from_json(const Json& j);
Json element_to_json(const Element& e);
Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);

/// Throws SpecError on malformed documents.
AlgebraSpec spec_from_json(const Json& j);
Json spec_to_json(const AlgebraSpec& spec);

AlgebraSpec load_spec(const std::string& path);

}  // namespace avw
