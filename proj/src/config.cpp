#include "kmcat/config.hpp"

#include "kmcat/error.hpp"

#include <fstream>
#include <sstream>

namespace kmcat {

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& what) {
  throw Error(ErrorCode::Config, source + ": " + what);
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

int get_int(const Json& obj, const char* key, const std::string& where, const std::string& source) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) fail(source, where + ": '" + key + "' must be an integer");
  return obj[key].get<int>();
}

Rational get_rational(const Json& obj, const std::string& where, const std::string& source) {
  if (!obj.contains("value")) return Rational(1);
  const Json& v = obj["value"];
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) fail(source, where + ": 'value' must be a rational string");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::exception&) {
    fail(source, where + ": cannot parse rational '" + v.get<std::string>() + "'");
  }
}

}  // namespace

KLRParams parse_config(const std::string& text, const std::string& source) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    fail(source, "syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  if (!doc.is_object()) fail(source, "top level must be an object");
  for (const auto& [key, val] : doc.items())
    if (key != "cartan_matrix" && key != "t" && key != "s" && key != "name") fail(source, "unknown field '" + key + "'");
  if (!doc.contains("cartan_matrix") || !doc["cartan_matrix"].is_array()) fail(source, "missing 'cartan_matrix'");
  std::vector<std::vector<int>> rows;
  for (const Json& row : doc["cartan_matrix"]) {
    if (!row.is_array()) fail(source, "'cartan_matrix' rows must be arrays");
    std::vector<int> r;
    for (const Json& x : row) {
      if (!x.is_number_integer()) fail(source, "'cartan_matrix' entries must be integers");
      r.push_back(x.get<int>());
    }
    rows.push_back(std::move(r));
  }
  CartanDatum datum = validate_gcm(rows);
  const int n = datum.rank();
  auto index = [&](const Json& e, const char* key, const std::string& where) {
    const int v = get_int(e, key, where, source);
    if (v < 0 || v >= n) fail(source, where + ": index '" + key + "' out of range");
    return v;
  };

  std::map<std::pair<int, int>, Rational> t;
  if (doc.contains("t")) {
    if (!doc["t"].is_array()) fail(source, "'t' must be an array");
    int k = 0;
    for (const Json& e : doc["t"]) {
      const std::string where = "t[" + std::to_string(k++) + "]";
      if (!e.is_object()) fail(source, where + " must be an object");
      t[{index(e, "i", where), index(e, "j", where)}] = get_rational(e, where, source);
    }
  }
  std::vector<KLRParams::SEntry> s;
  if (doc.contains("s")) {
    if (!doc["s"].is_array()) fail(source, "'s' must be an array");
    int k = 0;
    for (const Json& e : doc["s"]) {
      const std::string where = "s[" + std::to_string(k++) + "]";
      if (!e.is_object()) fail(source, where + " must be an object");
      s.push_back({index(e, "i", where), index(e, "j", where), get_int(e, "p", where, source),
                   get_int(e, "q", where, source), get_rational(e, where, source)});
    }
  }
  return KLRParams(std::move(datum), t, s);
}

KLRParams load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Config, path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

Json config_json(const KLRParams& params) {
  const CartanDatum& d = params.datum();
  Json m = Json::array();
  for (int i = 0; i < d.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < d.rank(); ++j) row.push_back(d.a(i, j));
    m.push_back(row);
  }
  Json t = Json::array();
  for (int i = 0; i < d.rank(); ++i)
    for (int j = 0; j < d.rank(); ++j)
      if (i != j) t.push_back(Json{{"i", i}, {"j", j}, {"value", params.t(i, j).str()}});
  Json s = Json::array();
  for (const auto& e : params.s_entries())
    s.push_back(Json{{"i", e.i}, {"j", e.j}, {"p", e.p}, {"q", e.q}, {"value", e.value.str()}});
  return Json{{"cartan_matrix", m}, {"t", t}, {"s", s}};
}

}  // namespace kmcat
