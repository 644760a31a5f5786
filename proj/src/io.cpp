#include "leibniz/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace leibniz {

namespace {

[[noreturn]] void fail(const std::string& locus, const std::string& what) { throw ParseError(locus + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& locus) {
  if (!j.is_object()) fail(locus.empty() ? "<root>" : locus, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(locus.empty() ? std::string(key) : locus + "." + key, "missing field");
  return *it;
}

std::string join(const std::string& locus, const std::string& key) { return locus.empty() ? key : locus + "." + key; }

Rational rational_from_json(const Json& j, const std::string& locus) {
  if (!j.is_string()) fail(locus, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(locus, e.what());
  }
}

std::size_t count_from_json(const Json& j, const std::string& locus) {
  if (!j.is_number_unsigned()) fail(locus, "expected a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail("line " + std::to_string(line) + ", column " + std::to_string(col), "malformed JSON");
  }
}

Json vector_to_json(const LeibnizAlgebra& alg, const Vector& v) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out[alg.basis_names()[i]] = to_string(v[i]);
  return out;
}

Json algebra_to_json(const LeibnizAlgebra& alg, const std::string& name) {
  Json j;
  j["name"] = name;
  j["dim"] = alg.dim();
  j["basis"] = alg.basis_names();
  Json brackets = Json::array();
  for (std::size_t a = 0; a < alg.dim(); ++a)
    for (std::size_t b = 0; b < alg.dim(); ++b) {
      const Vector& p = alg.product(a, b);
      if (is_zero(p)) continue;
      brackets.push_back(
          {{"left", alg.basis_names()[a]}, {"right", alg.basis_names()[b]}, {"result", vector_to_json(alg, p)}});
    }
  j["brackets"] = std::move(brackets);
  return j;
}

LeibnizAlgebra algebra_from_json(const Json& j) {
  const std::size_t dim = count_from_json(field(j, "dim", ""), "dim");
  const Json& basis = field(j, "basis", "");
  if (!basis.is_array()) fail("basis", "expected a list of labels");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string locus = "basis[" + std::to_string(i) + "]";
    if (!basis[i].is_string()) fail(locus, "expected a label string");
    std::string label = basis[i].get<std::string>();
    if (label.empty()) fail(locus, "empty label");
    if (!seen.insert(label).second) fail(locus, "duplicate label '" + label + "'");
    names.push_back(std::move(label));
  }
  if (names.size() != dim) fail("dim", "does not match the number of basis labels");

  const Json& brackets = field(j, "brackets", "");
  if (!brackets.is_array()) fail("brackets", "expected a list");
  std::vector<LeibnizAlgebra::Entry> entries;
  std::set<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    const std::string locus = "brackets[" + std::to_string(i) + "]";
    LeibnizAlgebra::Entry e;
    for (const char* side : {"left", "right"}) {
      const Json& s = field(brackets[i], side, locus);
      if (!s.is_string() || !seen.count(s.get<std::string>()))
        fail(join(locus, side), "unknown basis label " + s.dump());
      (std::string(side) == "left" ? e.left : e.right) = s.get<std::string>();
    }
    if (!pairs.insert({e.left, e.right}).second) fail(locus, "duplicate bracket entry [" + e.left + "," + e.right + "]");
    const Json& result = field(brackets[i], "result", locus);
    if (!result.is_object()) fail(join(locus, "result"), "expected a {label: \"p/q\"} object");
    for (const auto& [label, value] : result.items()) {
      const std::string rl = join(join(locus, "result"), label);
      if (!seen.count(label)) fail(rl, "unknown basis label '" + label + "'");
      e.result[label] = rational_from_json(value, rl);
    }
    entries.push_back(std::move(e));
  }
  return LeibnizAlgebra::from_entries(std::move(names), entries);
}

std::string serialize_algebra(const LeibnizAlgebra& alg, const std::string& name) {
  return algebra_to_json(alg, name).dump(2) + "\n";
}

LeibnizAlgebra parse_algebra(std::string_view text) { return algebra_from_json(parse_json(text)); }

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& locus) {
  if (!j.is_array() || j.size() != rows)
    fail(locus, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rl = locus + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) fail(rl, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c], rl + "[" + std::to_string(c) + "]");
  }
  return m;
}

Json representation_to_json(const Representation& rep, const std::string& algebra_name) {
  const LeibnizAlgebra& alg = rep.algebra();
  Json j;
  j["algebra"] = algebra_to_json(alg, algebra_name);
  j["module_dim"] = rep.module_dim();
  Json rho = Json::object(), lambda = Json::object();
  for (std::size_t b = 0; b < alg.dim(); ++b) {
    rho[alg.basis_names()[b]] = matrix_to_json(rep.rho(b));
    lambda[alg.basis_names()[b]] = matrix_to_json(rep.lambda(b));
  }
  j["rho"] = std::move(rho);
  j["lambda"] = std::move(lambda);
  return j;
}

RepData rep_data_from_json(const Json& j, const std::filesystem::path& base_dir) {
  const Json& a = field(j, "algebra", "");
  LeibnizAlgebra alg;
  if (a.is_string()) {
    const std::filesystem::path path = base_dir / a.get<std::string>();
    std::ifstream in(path);
    if (!in) fail("algebra", "cannot open '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      alg = parse_algebra(buf.str());
    } catch (const ParseError& e) {
      fail("algebra (" + path.string() + ")", e.what());
    }
  } else {
    try {
      alg = algebra_from_json(a);
    } catch (const ParseError& e) {
      fail("algebra", e.what());
    }
  }
  const std::size_t d = count_from_json(field(j, "module_dim", ""), "module_dim");
  RepData out{alg, BimoduleAction{d, {}, {}}};
  for (const char* key : {"rho", "lambda"}) {
    const Json& mats = field(j, key, "");
    if (!mats.is_object()) fail(key, "expected a {label: matrix} object");
    for (const auto& [label, _] : mats.items())
      if (!alg.index_of(label)) fail(join(key, label), "unknown basis label '" + label + "'");
    auto& target = std::string(key) == "rho" ? out.action.rho : out.action.lambda;
    for (const auto& label : alg.basis_names()) {
      auto it = mats.find(label);
      if (it == mats.end()) fail(join(key, label), "missing matrix");
      target.push_back(matrix_from_json(*it, d, d, join(key, label)));
    }
  }
  return out;
}

std::string serialize_representation(const Representation& rep, const std::string& algebra_name) {
  return representation_to_json(rep, algebra_name).dump(2) + "\n";
}

RepData parse_rep_data(std::string_view text, const std::filesystem::path& base_dir) {
  return rep_data_from_json(parse_json(text), base_dir);
}

Representation parse_representation(std::string_view text, const std::filesystem::path& base_dir) {
  RepData data = parse_rep_data(text, base_dir);
  if (data.algebra.dim() == 0) return Representation::zero(std::move(data.algebra), data.action.module_dim);
  return Representation(std::move(data.algebra), std::move(data.action.rho), std::move(data.action.lambda));
}

}  // namespace leibniz
