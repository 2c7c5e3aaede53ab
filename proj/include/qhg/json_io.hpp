#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "qhg/group.hpp"
#include "qhg/hypergroup.hpp"

namespace qhg {

using Json = nlohmann::ordered_json;

/// "a/b" (or "a") for rationals, {"re": "a/b", "im": "c/d"} otherwise.
Json scalar_to_json(const Scalar& s);
/// Accepts the two text forms and plain JSON integers. Throws SchemaError.
Scalar scalar_from_json(const Json& j);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, std::size_t expected, const std::string& what);
/// Matrices are lists of rows.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& what);

/// {"dim", "labels", "mult", "star": {"matrix"}?}
Json algebra_to_json(const StructureAlgebra& alg);
StructureAlgebra algebra_from_json(const Json& j);

/// {"algebra", "comult", "counit", "left_integral", "antipode"?, "pairing"?}.
/// "comult" lists Δ(e_j) for each j as n² coefficients.
Json hypergroup_to_json(const HypergroupData& h, const std::optional<Matrix>& pairing = std::nullopt);
HypergroupData hypergroup_data_from_json(const Json& j);

/// Reads, parses and runs the full pipeline. Throws SchemaError or
/// ValidationError.
QuantumHypergroup import_structure_json(const std::string& path);
Json read_json_file(const std::string& path);

/// {"elements": [...], "table": [[...]]}
FiniteGroup group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& g);
/// {"members": [...]} with element labels or indices.
std::vector<std::size_t> subgroup_members_from_json(const Json& j, const FiniteGroup& g);

}  // namespace qhg
