// serialize.hpp — structured-text (JSON) encodings with exact round-trip of
// double-precision values and stable field order for diffing.

#pragma once

#include "ossa/functional.hpp"
#include "ossa/gns.hpp"

#include <json.hpp>

#include <string>

namespace ossa {

using Json = nlohmann::json;

/// {"rows": r, "cols": c, "re": [...], "im": [...]} with row-major entries.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json algebra_to_json(const MatrixAlgebra& a);
MatrixAlgebra algebra_from_json(const Json& j);

Json functional_to_json(const PositiveFunctional& w);
PositiveFunctional functional_from_json(const Json& j);

/// Debug dump: Gram matrix, eta factor and the pi images of the basis.
Json gns_to_json(const GnsSpace& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace ossa
