#include "curalg/io.hpp"

#include <chrono>
#include <ctime>
#include <map>
#include <set>

namespace curalg {

InputError::InputError(const std::string& where, const std::string& what)
    : std::runtime_error(where + ": " + what), where_(where) {}

namespace {

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw InputError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where, "missing field \"" + key + "\"");
  return *it;
}

std::string text(const json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where, "expected a string");
  return j.get<std::string>();
}

Scalar scalar(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) return parse_scalar(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(where, e.what());
  }
  throw InputError(where, "expected a \"p/q\" string");
}

std::size_t lookup(const GradedSpace& s, const json& j, const std::string& where) {
  std::string l = text(j, where);
  auto i = s.find(l);
  if (!i) throw InputError(where, "unknown basis label \"" + l + "\"");
  return *i;
}

SpacePtr graded_basis(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where, "basis must be an array");
  std::vector<BasisElement> b;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string w = where + "/" + std::to_string(k);
    const json& e = j[k];
    if (e.is_string()) {
      b.push_back({e.get<std::string>(), 0});
    } else if (e.is_array() && e.size() == 2 && e[0].is_string() && e[1].is_number_integer()) {
      b.push_back({e[0].get<std::string>(), e[1].get<int>()});
    } else {
      throw InputError(w, "basis entries are labels or [label, degree]");
    }
  }
  try {
    return make_space(std::move(b));
  } catch (const std::invalid_argument& e) {
    throw InputError(where, e.what());
  }
}

json graded_basis_json(const GradedSpace& s) {
  json out = json::array();
  for (const auto& e : s.basis()) out.push_back(json::array({e.label, e.degree}));
  return out;
}

json plain_basis_json(const GradedSpace& s) {
  json out = json::array();
  for (const auto& e : s.basis()) out.push_back(e.label);
  return out;
}

// sign s with at(j, i) = s * at(i, j) under graded (anti)symmetry
using Symmetry = std::function<int(std::size_t, std::size_t)>;

json table_json(const GradedSpace& in, const GradedSpace& out, std::size_t n,
                const std::function<const Vec&(std::size_t, std::size_t)>& at, const Symmetry& sym) {
  json rows = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& v = at(i, j);
      bool keep = i < j ? !v.empty() || !at(j, i).empty() : i == j ? !v.empty() : !(v == at(j, i).scaled(sym(j, i)));
      if (keep) rows.push_back(json::array({in.label(i), in.label(j), vec_json(out, v)}));
    }
  return rows;
}

void table_from_json(const json& rows, const GradedSpace& in, const GradedSpace& out, const std::string& where,
                     const std::function<Vec&(std::size_t, std::size_t)>& at, const Symmetry& sym) {
  if (!rows.is_array()) throw InputError(where, "expected an array of [a, b, value]");
  std::set<std::pair<std::size_t, std::size_t>> given;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::string w = where + "/" + std::to_string(k);
    const json& r = rows[k];
    if (!r.is_array() || r.size() != 3) throw InputError(w, "expected [a, b, value]");
    std::size_t i = lookup(in, r[0], w + "/0"), j = lookup(in, r[1], w + "/1");
    if (!given.insert({i, j}).second) throw InputError(w, "duplicate entry");
    at(i, j) = vec_from_json(out, r[2], w + "/2");
  }
  for (const auto& [i, j] : given)
    if (i != j && !given.count({j, i})) at(j, i) = at(i, j).scaled(sym(i, j));
}

json map_json(const GradedMap& m) {
  json rows = json::array();
  for (std::size_t j = 0; j < m.source()->dim(); ++j)
    if (!m.column(j).empty()) rows.push_back(json::array({m.source()->label(j), vec_json(*m.target(), m.column(j))}));
  return rows;
}

GradedMap map_from_json(const json& rows, SpacePtr src, SpacePtr tgt, int degree, const std::string& where) {
  if (!rows.is_array()) throw InputError(where, "expected an array of [source, value]");
  GradedMap m(src, tgt, degree);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::string w = where + "/" + std::to_string(k);
    const json& r = rows[k];
    if (!r.is_array() || r.size() != 2) throw InputError(w, "expected [source, value]");
    m.set_column(lookup(*src, r[0], w + "/0"), vec_from_json(*tgt, r[1], w + "/1"));
  }
  for (const auto& [i, j] : m.degree_violations())
    throw InputError(where, "degree mismatch: " + src->label(j) + " -> " + tgt->label(i));
  return m;
}

json operators_json(const LieAlgebra& g, const std::vector<GradedMap>& ops) {
  json out = json::object();
  for (std::size_t x = 0; x < g.dim(); ++x) out[g.label(x)] = map_json(ops[x]);
  return out;
}

std::vector<GradedMap> operators_from_json(const json& j, const LieAlgebra& g, SpacePtr s, int degree,
                                           const std::string& where) {
  if (!j.is_object()) throw InputError(where, "expected {generator: [[source, value]]}");
  for (const auto& [k, v] : j.items())
    if (!g.space->find(k)) throw InputError(where + "/" + k, "unknown generator \"" + k + "\"");
  std::vector<GradedMap> ops;
  for (std::size_t x = 0; x < g.dim(); ++x) {
    auto it = j.find(g.label(x));
    ops.push_back(it == j.end() ? GradedMap(s, s, degree)
                                : map_from_json(*it, s, s, degree, where + "/" + g.label(x)));
  }
  return ops;
}

void expect_kind(const json& j, const std::string& kind, const std::string& where) {
  auto it = j.find("kind");
  if (it != j.end() && *it != kind) throw InputError(where, "expected kind \"" + kind + "\"");
}

std::string name_of(const json& j, const std::string& where) {
  auto it = j.find("name");
  return it == j.end() ? std::string{} : text(*it, where + "/name");
}

std::string vec_text(const json& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [label, c] : v.items()) {
    std::string s = c.get<std::string>();
    bool neg = s.front() == '-';
    if (neg) s = s.substr(1);
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    out += (s == "1" ? "" : s + " ") + label;
  }
  return out;
}

}  // namespace

std::string utc_timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json to_json(const Certificate& c) {
  json checks = json::array();
  for (const auto& k : c.checks) {
    json e = {{"name", k.name}, {"passed", k.passed}, {"cases", k.cases}};
    if (!k.witness.empty() && !k.passed) e["witness"] = k.witness;
    checks.push_back(std::move(e));
  }
  return {{"subject", c.subject}, {"passed", c.passed()}, {"checks", std::move(checks)}};
}

json to_json(const CriterionResult& r) {
  json known = json::array();
  for (const auto& [check, reason] : r.known) known.push_back({{"check", check}, {"reason", reason}});
  return {{"criterion", r.number},
          {"title", r.title},
          {"passed", r.passed()},
          {"only_documented_failures", !r.passed() && r.only_known_failures()},
          {"summary", summary_line(r)},
          {"documented", std::move(known)},
          {"certificate", to_json(r.cert)}};
}

json criteria_report(const std::vector<CriterionResult>& results, bool timestamp) {
  json out = {{"schema_version", schema_version}, {"kind", "certification"}};
  if (timestamp) out["timestamp"] = utc_timestamp();
  json items = json::array(), lines = json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    items.push_back(to_json(r));
    lines.push_back(summary_line(r));
    passed += r.passed();
  }
  out["criteria"] = std::move(items);
  out["summary"] = {{"passed", passed}, {"failed", results.size() - passed}, {"lines", std::move(lines)}};
  return out;
}

json vec_json(const GradedSpace& s, const Vec& v) {
  json out = json::object();
  for (const auto& [i, c] : v) out[s.label(i)] = to_string(c);
  return out;
}

Vec vec_from_json(const GradedSpace& s, const json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where, "vectors are {label: \"p/q\"} objects");
  Vec v;
  for (const auto& [label, c] : j.items()) {
    auto i = s.find(label);
    if (!i) throw InputError(where, "unknown basis label \"" + label + "\"");
    v.add(*i, scalar(c, where + "/" + label));
  }
  return v;
}

json export_lie(const LieAlgebra& g) {
  const GradedSpace& s = *g.space;
  return {{"kind", "lie_algebra"},
          {"name", g.name},
          {"basis", plain_basis_json(s)},
          {"brackets", table_json(s, s, g.dim(), [&](auto i, auto j) -> const Vec& { return g.bracket.at(i, j); },
                                  [](auto, auto) { return -1; })}};
}

json export_dgla(const Dgla& a) {
  const GradedSpace& s = *a.space;
  auto sym = [&](std::size_t i, std::size_t j) { return -koszul(long(s.degree(i)) * s.degree(j)); };
  return {{"kind", "dgla"},
          {"name", a.name},
          {"basis", graded_basis_json(s)},
          {"brackets", table_json(s, s, a.dim(), [&](auto i, auto j) -> const Vec& { return a.bracket.at(i, j); }, sym)},
          {"differential", map_json(a.d)}};
}

json export_cdga(const Cdga& c) {
  const GradedSpace& s = *c.space;
  auto sym = [&](std::size_t i, std::size_t j) { return koszul(long(s.degree(i)) * s.degree(j)); };
  return {{"kind", "cdga"},
          {"name", c.name},
          {"basis", graded_basis_json(s)},
          {"unit", s.label(c.unit)},
          {"products", table_json(s, s, c.dim(), [&](auto i, auto j) -> const Vec& { return c.product.at(i, j); }, sym)},
          {"differential", map_json(c.d)}};
}

json export_gdiff(const GDiffSpace& v) {
  return {{"kind", "gdiff"},
          {"name", v.name},
          {"lie", export_lie(v.g)},
          {"basis", graded_basis_json(*v.space)},
          {"differential", map_json(v.d)},
          {"L", operators_json(v.g, v.L)},
          {"I", operators_json(v.g, v.I)}};
}

json export_module(const LieModule& m) {
  json action = json::object();
  // the action is indexed like the base algebra, labelled by position here
  for (std::size_t x = 0; x < m.action.size(); ++x) action[std::to_string(x)] = map_json(m.action[x]);
  return {{"basis", plain_basis_json(*m.space)}, {"action", std::move(action)}};
}

json export_cocycle(const Cocycle2& c) {
  const GradedSpace& b = *c.base.space;
  json table =
      table_json(b, *c.module.space, c.dim(), [&](auto i, auto j) -> const Vec& { return c.at(i, j); },
                 [](auto, auto) { return -1; });
  return {{"kind", "cocycle"},
          {"name", c.name},
          {"base", export_lie(c.base)},
          {"module", export_module(c.module)},
          {"table", std::move(table)}};
}

LieAlgebra import_lie(const json& j, const std::string& where) {
  expect_kind(j, "lie_algebra", where);
  SpacePtr s = graded_basis(field(j, "basis", where), where + "/basis");
  std::vector<std::string> labels;
  for (const auto& e : s->basis()) {
    if (e.degree != 0) throw InputError(where + "/basis", "Lie algebra basis is in degree 0");
    labels.push_back(e.label);
  }
  LieAlgebra g(name_of(j, where), labels);
  auto it = j.find("brackets");
  if (it != j.end())
    table_from_json(*it, *g.space, *g.space, where + "/brackets",
                    [&](auto a, auto b) -> Vec& { return g.bracket.at(a, b); }, [](auto, auto) { return -1; });
  return g;
}

Dgla import_dgla(const json& j, const std::string& where) {
  expect_kind(j, "dgla", where);
  Dgla a(name_of(j, where), graded_basis(field(j, "basis", where), where + "/basis"));
  const GradedSpace& s = *a.space;
  auto it = j.find("brackets");
  if (it != j.end()) {
    table_from_json(*it, s, s, where + "/brackets", [&](auto x, auto y) -> Vec& { return a.bracket.at(x, y); },
                    [&](auto x, auto y) { return -koszul(long(s.degree(x)) * s.degree(y)); });
    for (std::size_t x = 0; x < a.dim(); ++x)
      for (std::size_t y = 0; y < a.dim(); ++y)
        if (auto deg = s.degree_of(a.bracket.at(x, y)); deg && *deg != s.degree(x) + s.degree(y))
          throw InputError(where + "/brackets", "degree mismatch in [" + s.label(x) + ", " + s.label(y) + "]");
  }
  it = j.find("differential");
  if (it != j.end()) a.d = map_from_json(*it, a.space, a.space, 1, where + "/differential");
  return a;
}

Cdga import_cdga(const json& j, const std::string& where) {
  expect_kind(j, "cdga", where);
  SpacePtr s = graded_basis(field(j, "basis", where), where + "/basis");
  std::string unit = text(field(j, "unit", where), where + "/unit");
  if (!s->find(unit)) throw InputError(where + "/unit", "unknown basis label \"" + unit + "\"");
  Cdga c(name_of(j, where), s, unit);
  c.set_unit_products();
  auto it = j.find("products");
  if (it != j.end())
    table_from_json(*it, *s, *s, where + "/products", [&](auto x, auto y) -> Vec& { return c.product.at(x, y); },
                    [&](auto x, auto y) { return koszul(long(s->degree(x)) * s->degree(y)); });
  it = j.find("differential");
  if (it != j.end()) c.d = map_from_json(*it, s, s, 1, where + "/differential");
  return c;
}

GDiffSpace import_gdiff(const json& j, const std::string& where,
                        const std::function<LieAlgebra(const std::string&)>& lie_lookup) {
  expect_kind(j, "gdiff", where);
  const json& lj = field(j, "lie", where);
  LieAlgebra g = lj.is_string() ? lie_lookup(lj.get<std::string>()) : import_lie(lj, where + "/lie");
  GDiffSpace v(name_of(j, where), g, graded_basis(field(j, "basis", where), where + "/basis"));
  auto it = j.find("differential");
  if (it != j.end()) v.d = map_from_json(*it, v.space, v.space, 1, where + "/differential");
  it = j.find("L");
  if (it != j.end()) v.L = operators_from_json(*it, g, v.space, 0, where + "/L");
  it = j.find("I");
  if (it != j.end()) v.I = operators_from_json(*it, g, v.space, -1, where + "/I");
  return v;
}

Cocycle2 import_cocycle(const json& j, const std::string& where) {
  expect_kind(j, "cocycle", where);
  LieAlgebra base = import_lie(field(j, "base", where), where + "/base");
  const json& mj = field(j, "module", where);
  LieModule m;
  m.space = graded_basis(field(mj, "basis", where + "/module"), where + "/module/basis");
  const json& action = field(mj, "action", where + "/module");
  for (std::size_t x = 0; x < base.dim(); ++x) {
    auto it = action.find(std::to_string(x));
    m.action.push_back(it == action.end()
                           ? GradedMap(m.space, m.space, 0)
                           : map_from_json(*it, m.space, m.space, 0, where + "/module/action/" + std::to_string(x)));
  }
  Cocycle2 c(name_of(j, where), base, m);
  table_from_json(field(j, "table", where), *base.space, *m.space, where + "/table",
                  [&](auto a, auto b) -> Vec& { return c.at(a, b); }, [](auto, auto) { return -1; });
  return c;
}

std::string text_table(const json& doc) {
  const std::string kind = doc.value("kind", "");
  std::string out = doc.value("name", "") + " (" + kind + ")\n";
  auto table = [&](const char* key, const std::string& open, const std::string& sep, const std::string& close) {
    if (!doc.contains(key)) return;
    for (const auto& r : doc[key])
      out += "  " + open + r[0].get<std::string>() + sep + r[1].get<std::string>() + close + " = " + vec_text(r[2]) +
             "\n";
  };
  auto maps = [&](const json& rows, const std::string& op) {
    for (const auto& r : rows) out += "  " + op + " " + r[0].get<std::string>() + " = " + vec_text(r[1]) + "\n";
  };
  if (doc.contains("basis")) {
    out += "  basis:";
    for (const auto& b : doc["basis"])
      out += b.is_array() ? " " + b[0].get<std::string>() + "[" + std::to_string(b[1].get<int>()) + "]"
                          : " " + b.get<std::string>();
    out += "\n";
  }
  if (kind == "cdga") {
    out += "  unit: " + doc["unit"].get<std::string>() + "\n";
    table("products", "", " . ", "");
  } else if (kind == "cocycle") {
    out += "  base: " + doc["base"]["name"].get<std::string>() + "\n";
    table("table", "sigma(", ", ", ")");
  } else {
    table("brackets", "[", ", ", "]");
  }
  if (doc.contains("differential")) maps(doc["differential"], "d");
  for (const char* op : {"L", "I"})
    if (doc.contains(op))
      for (const auto& [x, rows] : doc[op].items()) maps(rows, std::string(op) + "(" + x + ")");
  return out;
}

}  // namespace curalg
