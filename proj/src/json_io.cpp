#include "qhg/json_io.hpp"

#include <fstream>
#include <sstream>

#include "qhg/errors.hpp"

namespace qhg {

namespace {

std::string rational_text(const mpq_class& q) { return q.get_str(); }

bool is_index(const Json& j) { return j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(where + ": missing field '" + key + "'");
  return j.at(key);
}

void expect_array(const Json& j, std::size_t size, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + ": expected an array");
  if (j.size() != size)
    throw SchemaError(what + ": expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
}

mpq_class rational_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return mpq_class(j.dump());
  if (j.is_string()) return Scalar::parse_rational(j.get<std::string>());
  throw SchemaError(what + ": expected an integer or a fraction string");
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (s.is_real()) return rational_text(s.re());
  return Json{{"re", rational_text(s.re())}, {"im", rational_text(s.im())}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      if (k != "re" && k != "im") throw SchemaError("scalar: unexpected key '" + k + "'");
    mpq_class re = j.contains("re") ? rational_from_json(j.at("re"), "scalar.re") : mpq_class(0);
    mpq_class im = j.contains("im") ? rational_from_json(j.at("im"), "scalar.im") : mpq_class(0);
    return Scalar(re, im);
  }
  return Scalar(rational_from_json(j, "scalar"));
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

Vector vector_from_json(const Json& j, std::size_t expected, const std::string& what) {
  expect_array(j, expected, what);
  Vector v;
  v.reserve(expected);
  for (const auto& e : j) v.push_back(scalar_from_json(e));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  expect_array(j, rows, what);
  std::vector<Vector> rs;
  for (std::size_t r = 0; r < rows; ++r) rs.push_back(vector_from_json(j[r], cols, what + "[" + std::to_string(r) + "]"));
  return Matrix::from_rows(rs, cols);
}

Json algebra_to_json(const StructureAlgebra& alg) {
  const std::size_t n = alg.dim();
  Json mult = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(vector_to_json(alg.mult(i, j)));
    mult.push_back(std::move(row));
  }
  Json out{{"dim", n}, {"labels", alg.labels()}, {"mult", std::move(mult)}};
  if (alg.has_star()) out["star"] = Json{{"matrix", matrix_to_json(alg.star_matrix())}};
  return out;
}

StructureAlgebra algebra_from_json(const Json& j) {
  const Json& dim = field(j, "dim", "algebra");
  if (!is_index(dim) || dim.get<std::size_t>() == 0) throw SchemaError("algebra.dim: expected a positive integer");
  const std::size_t n = dim.get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    expect_array(j.at("labels"), n, "algebra.labels");
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) throw SchemaError("algebra.labels: expected strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  }
  const Json& mult = field(j, "mult", "algebra");
  expect_array(mult, n, "algebra.mult");
  std::vector<std::vector<Vector>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    expect_array(mult[i], n, "algebra.mult[" + std::to_string(i) + "]");
    for (std::size_t k = 0; k < n; ++k)
      table[i].push_back(vector_from_json(mult[i][k], n, "algebra.mult[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
  }
  std::optional<Matrix> star;
  if (j.contains("star") && !j.at("star").is_null())
    star = matrix_from_json(field(j.at("star"), "matrix", "algebra.star"), n, n, "algebra.star.matrix");
  return StructureAlgebra(std::move(labels), std::move(table), std::move(star));
}

Json hypergroup_to_json(const HypergroupData& h, const std::optional<Matrix>& pairing) {
  const std::size_t n = h.dim();
  Json comult = Json::array();
  for (std::size_t j = 0; j < n; ++j) comult.push_back(vector_to_json(h.comult.column(j)));
  Json out{{"algebra", algebra_to_json(h.alg)},
           {"comult", std::move(comult)},
           {"counit", vector_to_json(h.counit)},
           {"left_integral", vector_to_json(h.left_integral)}};
  if (h.antipode) out["antipode"] = matrix_to_json(*h.antipode);
  if (pairing) out["pairing"] = matrix_to_json(*pairing);
  return out;
}

HypergroupData hypergroup_data_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("hypergroup: expected an object");
  StructureAlgebra alg = algebra_from_json(field(j, "algebra", "hypergroup"));
  const std::size_t n = alg.dim();
  const Json& cj = field(j, "comult", "hypergroup");
  expect_array(cj, n, "comult");
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < n; ++c) cols.push_back(vector_from_json(cj[c], n * n, "comult[" + std::to_string(c) + "]"));
  Matrix comult = Matrix::from_columns(cols, n * n);
  Vector counit = vector_from_json(field(j, "counit", "hypergroup"), n, "counit");
  Vector phi = vector_from_json(field(j, "left_integral", "hypergroup"), n, "left_integral");
  std::optional<Matrix> antipode;
  if (j.contains("antipode") && !j.at("antipode").is_null())
    antipode = matrix_from_json(j.at("antipode"), n, n, "antipode");
  return HypergroupData{std::move(alg), std::move(comult), std::move(counit), std::move(phi), std::move(antipode)};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

QuantumHypergroup import_structure_json(const std::string& path) {
  return QuantumHypergroup::create(hypergroup_data_from_json(read_json_file(path)));
}

FiniteGroup group_from_json(const Json& j) {
  const Json& el = field(j, "elements", "group");
  if (!el.is_array() || el.empty()) throw SchemaError("group.elements: expected a nonempty array");
  std::vector<std::string> labels;
  for (const auto& e : el) {
    if (!e.is_string()) throw SchemaError("group.elements: expected strings");
    labels.push_back(e.get<std::string>());
  }
  const std::size_t n = labels.size();
  const Json& t = field(j, "table", "group");
  expect_array(t, n, "group.table");
  std::vector<std::vector<std::size_t>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    expect_array(t[i], n, "group.table[" + std::to_string(i) + "]");
    for (const auto& x : t[i]) {
      if (!is_index(x)) throw SchemaError("group.table: expected nonnegative integers");
      table[i].push_back(x.get<std::size_t>());
    }
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

Json group_to_json(const FiniteGroup& g) { return Json{{"elements", g.labels()}, {"table", g.table()}}; }

std::vector<std::size_t> subgroup_members_from_json(const Json& j, const FiniteGroup& g) {
  const Json& m = field(j, "members", "subgroup");
  if (!m.is_array() || m.empty()) throw SchemaError("subgroup.members: expected a nonempty array");
  std::vector<std::size_t> out;
  for (const auto& x : m) {
    if (is_index(x)) {
      const auto i = x.get<std::size_t>();
      if (i >= g.order()) throw SchemaError("subgroup.members: index out of range");
      out.push_back(i);
    } else if (x.is_string()) {
      out.push_back(g.index_of(x.get<std::string>()));
    } else {
      throw SchemaError("subgroup.members: expected labels or indices");
    }
  }
  return out;
}

}  // namespace qhg
