#include "joinalg/io.hpp"

#include <fstream>
#include <sstream>

namespace joinalg {

namespace {

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return std::to_string(line) + ":" + std::to_string(column);
}

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw MalformedInput((where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& require_array(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  return j;
}

std::vector<std::size_t> index_row(const Json& j, const std::string& where) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < require_array(j, where).size(); ++i) {
    out.push_back(size_from_json(j[i], where + "/" + std::to_string(i)));
  }
  return out;
}

std::vector<std::vector<std::size_t>> index_table(const Json& j, const std::string& where) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < require_array(j, where).size(); ++i) {
    out.push_back(index_row(j[i], where + "/" + std::to_string(i)));
  }
  return out;
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < require_array(j, where).size(); ++i) {
    out.push_back(string_from_json(j[i], where + "/" + std::to_string(i)));
  }
  return out;
}

void expect_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& where) {
  if (m.rows() != rows || m.cols() != cols) {
    bad(where, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix, got " +
                   std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(origin + ":" + line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput(path.string() + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path.string());
}

Json inline_references(const Json& node, const std::filesystem::path& base_dir) {
  if (node.is_object()) {
    if (node.size() == 1 && node.contains("file") && node["file"].is_string()) {
      const std::filesystem::path target = base_dir / node["file"].get<std::string>();
      return inline_references(read_json_file(target), target.parent_path());
    }
    Json out = Json::object();
    for (const auto& [key, value] : node.items()) out[key] = inline_references(value, base_dir);
    return out;
  }
  if (node.is_array()) {
    Json out = Json::array();
    for (const auto& value : node) out.push_back(inline_references(value, base_dir));
    return out;
  }
  return node;
}

Json load_document(const std::filesystem::path& path) {
  return inline_references(read_json_file(path), path.parent_path());
}

const Json& require_field(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(where + "/" + key, "missing field");
  return *it;
}

std::size_t size_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    bad(where, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::string string_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

Scalar scalar_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) bad(where, "expected a rational as a \"p/q\" string");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const MalformedInput& e) {
    bad(where, e.what());
  }
}

Vector vector_from_json(const Json& j, const std::string& where) {
  if (j.is_object()) return sparse_vector_from_json(j, where);
  Vector out;
  for (std::size_t i = 0; i < require_array(j, where).size(); ++i) {
    out.push_back(scalar_from_json(j[i], where + "/" + std::to_string(i)));
  }
  return out;
}

std::vector<Scalar> sparse_vector_from_json(const Json& j, const std::string& where) {
  const std::size_t n = size_from_json(require_field(j, "size", where), where + "/size");
  std::vector<Scalar> out(n);
  const Json& entries = require_array(require_field(j, "entries", where), where + "/entries");
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string at = where + "/entries/" + std::to_string(e);
    if (!entries[e].is_array() || entries[e].size() != 2) bad(at, "expected [index, \"p/q\"]");
    const std::size_t i = size_from_json(entries[e][0], at + "/0");
    if (i >= n) bad(at, "index out of range");
    out[i] = scalar_from_json(entries[e][1], at + "/1");
  }
  return out;
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
  if (j.is_object()) {
    const std::size_t rows = size_from_json(require_field(j, "rows", where), where + "/rows");
    const std::size_t cols = size_from_json(require_field(j, "cols", where), where + "/cols");
    Matrix m(rows, cols);
    const Json& entries = require_array(require_field(j, "entries", where), where + "/entries");
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const std::string at = where + "/entries/" + std::to_string(e);
      if (!entries[e].is_array() || entries[e].size() != 3) bad(at, "expected [row, col, \"p/q\"]");
      const std::size_t r = size_from_json(entries[e][0], at + "/0");
      const std::size_t c = size_from_json(entries[e][1], at + "/1");
      if (r >= rows || c >= cols) bad(at, "entry out of range");
      m(r, c) = scalar_from_json(entries[e][2], at + "/2");
    }
    return m;
  }
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < require_array(j, where).size(); ++r) {
    rows.push_back(vector_from_json(j[r], where + "/" + std::to_string(r)));
  }
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) bad(where + "/" + std::to_string(r), "ragged matrix row");
  }
  return Matrix::from_rows(rows, cols);
}

Algebra algebra_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an algebra object");
  if (j.contains("builder")) {
    const std::string builder = string_from_json(j["builder"], where + "/builder");
    if (builder == "function") {
      if (j.contains("points")) return function_algebra(string_list(j["points"], where + "/points"));
      const std::size_t n = size_from_json(require_field(j, "size", where), where + "/size");
      return function_algebra(Space::numbered("x", n).labels());
    }
    if (builder == "matrix") return matrix_algebra(size_from_json(require_field(j, "n", where), where + "/n"));
    if (builder == "group") return group_hopf(group_from_json(require_field(j, "group", where), where + "/group")).algebra;
    bad(where + "/builder", "unknown algebra builder '" + builder + "'");
  }
  Space space;
  if (j.contains("basis")) {
    try {
      space = Space(string_list(j["basis"], where + "/basis"));
    } catch (const std::invalid_argument& e) {
      bad(where + "/basis", e.what());
    }
  } else {
    space = Space::numbered("e", size_from_json(require_field(j, "dim", where), where + "/dim"));
  }
  const std::size_t n = space.dim();
  std::vector<StructureConstant> constants;
  const Json& triples = require_array(require_field(j, "constants", where), where + "/constants");
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const std::string at = where + "/constants/" + std::to_string(t);
    if (!triples[t].is_array() || triples[t].size() != 4) bad(at, "expected [i, j, k, \"p/q\"]");
    StructureConstant c{size_from_json(triples[t][0], at + "/0"), size_from_json(triples[t][1], at + "/1"),
                        size_from_json(triples[t][2], at + "/2"), scalar_from_json(triples[t][3], at + "/3")};
    if (c.left >= n || c.right >= n || c.out >= n) bad(at, "basis index out of range (dim " + std::to_string(n) + ")");
    constants.push_back(std::move(c));
  }
  Vector unit = vector_from_json(require_field(j, "unit", where), where + "/unit");
  if (unit.size() != n) bad(where + "/unit", "unit needs " + std::to_string(n) + " coordinates");
  return Algebra(std::move(space), constants, std::move(unit));
}

Json algebra_to_json(const Algebra& a) {
  Json constants = Json::array();
  for (const auto& c : a.constants()) constants.push_back({c.left, c.right, c.out, to_string(c.value)});
  Json unit = Json::array();
  for (const auto& x : a.unit()) unit.push_back(to_string(x));
  return Json{{"basis", a.space().labels()}, {"constants", constants}, {"unit", unit}};
}

FiniteGroup group_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return FiniteGroup::named(j.get<std::string>());
    } catch (const MalformedInput& e) {
      bad(where, e.what());
    }
  }
  if (!j.is_object()) bad(where, "expected a group name or object");
  if (j.contains("name")) return group_from_json(j["name"], where + "/name");
  auto table = index_table(require_field(j, "table", where), where + "/table");
  std::vector<std::string> names;
  if (j.contains("names")) names = string_list(j["names"], where + "/names");
  try {
    return FiniteGroup(std::move(table), std::move(names));
  } catch (const MalformedInput& e) {
    bad(where + "/table", e.what());
  }
}

HopfAlgebra hopf_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected a Hopf algebra object");
  if (j.contains("builder")) {
    const std::string builder = string_from_json(j["builder"], where + "/builder");
    if (builder == "trivial") return trivial_hopf();
    const FiniteGroup g = group_from_json(require_field(j, "group", where), where + "/group");
    if (builder == "function") return function_hopf(g);
    if (builder == "group") return group_hopf(g);
    bad(where + "/builder", "unknown Hopf builder '" + builder + "'");
  }
  Algebra a = algebra_from_json(require_field(j, "algebra", where), where + "/algebra");
  const std::size_t n = a.dim();
  Matrix delta = matrix_from_json(require_field(j, "coproduct", where), where + "/coproduct");
  expect_shape(delta, n * n, n, where + "/coproduct");
  Matrix eps = matrix_from_json(require_field(j, "counit", where), where + "/counit");
  expect_shape(eps, 1, n, where + "/counit");
  Matrix s = matrix_from_json(require_field(j, "antipode", where), where + "/antipode");
  expect_shape(s, n, n, where + "/antipode");
  std::optional<Matrix> s_inv;
  if (j.contains("antipode_inverse")) {
    s_inv = matrix_from_json(j["antipode_inverse"], where + "/antipode_inverse");
    expect_shape(*s_inv, n, n, where + "/antipode_inverse");
  }
  return make_hopf(std::move(a), std::move(delta), std::move(eps), std::move(s), std::move(s_inv));
}

FiniteGSet gset_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected a G-set object");
  if (j.contains("union")) {
    const Json& parts = require_array(j["union"], where + "/union");
    if (parts.empty()) bad(where + "/union", "empty union");
    FiniteGSet out = gset_from_json(parts[0], where + "/union/0");
    for (std::size_t i = 1; i < parts.size(); ++i) {
      FiniteGSet next = gset_from_json(parts[i], where + "/union/" + std::to_string(i));
      if (next.group().table() != out.group().table()) bad(where + "/union", "parts act by different groups");
      out = FiniteGSet::disjoint_union(out, next);
    }
    return out;
  }
  const FiniteGroup g = group_from_json(require_field(j, "group", where), where + "/group");
  if (j.contains("builder")) {
    const std::string builder = string_from_json(j["builder"], where + "/builder");
    if (builder == "regular") return FiniteGSet::regular(g);
    if (builder == "trivial") return FiniteGSet::trivial(g, size_from_json(require_field(j, "size", where), where + "/size"));
    bad(where + "/builder", "unknown G-set builder '" + builder + "'");
  }
  try {
    return FiniteGSet(g, index_table(require_field(j, "action", where), where + "/action"));
  } catch (const MalformedInput& e) {
    const std::string what = e.what();
    if (what.rfind(where, 0) == 0) throw;
    bad(where + "/action", what);
  }
}

ComoduleAlgebra comodule_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected a comodule algebra object");
  if (j.contains("gset")) return fun_comodule(gset_from_json(j["gset"], where + "/gset"));
  Algebra a = algebra_from_json(require_field(j, "algebra", where), where + "/algebra");
  HopfAlgebra h = hopf_from_json(require_field(j, "hopf", where), where + "/hopf");
  Matrix delta = matrix_from_json(require_field(j, "coaction", where), where + "/coaction");
  expect_shape(delta, a.dim() * h.dim(), a.dim(), where + "/coaction");
  return ComoduleAlgebra{std::move(a), std::move(h), std::move(delta)};
}

Json scalar_to_json(const Scalar& x) { return to_string(x); }

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!is_zero(m(r, c))) entries.push_back({r, c, to_string(m(r, c))});
    }
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json vector_to_json(const std::vector<Scalar>& v) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_zero(v[i])) entries.push_back({i, to_string(v[i])});
  }
  return Json{{"size", v.size()}, {"entries", entries}};
}

}  // namespace joinalg
