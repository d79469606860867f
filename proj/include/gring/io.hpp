#pragma once

// Definition documents: JSON text describing a field, a groupoid and one of
// a crossed system, a field tower or a graded algebra. Rationals are
// strings "num/den", polynomials are ascending coefficient lists, arrows
// are referred to by name. Parsing then emitting reproduces the canonical
// text byte for byte.

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gring/crossed.hpp"
#include "gring/separability.hpp"
#include "gring/tower.hpp"

namespace gring {

using Json = nlohmann::json;

/// Malformed document: the CLI maps this to exit status 2.
class InputError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kFormatVersion = 1;

// ---------------------------------------------------------------------------
// Fields and elements.

inline Json field_to_json(const Field& f) {
  if (f.is_rational()) return "rational";
  if (f.is_prime()) return Json{{"prime", f.p()}};
  Json ext{{"base", field_to_json(f.base())}, {"modulus", Json::array()}};
  for (const auto& c : f.modulus()) ext["modulus"].push_back(f.base().format(c));
  if (f.irreducibility() == Irreducibility::asserted) ext["irreducible"] = "asserted";
  return Json{{"extension", ext}};
}

inline Json elem_to_json(const Field& f, const Elem& a) {
  if (!f.is_extension()) return f.format(a);
  Json out = Json::array();
  for (const auto& c : f.coefficients(a)) out.push_back(elem_to_json(f.base(), c));
  return out;
}

inline Elem elem_from_json(const Field& f, const Json& j) {
  if (f.is_extension()) {
    if (!j.is_array() || j.size() > f.degree()) throw InputError("extension element must be a coefficient list");
    Poly c;
    for (const auto& x : j) c.push_back(elem_from_json(f.base(), x));
    return f.from_coefficients(std::move(c));
  }
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (!j.is_string()) throw InputError("scalar must be a string");
  Rational q;
  if (q.set_str(j.get<std::string>(), 10) != 0) throw InputError("bad scalar \"" + j.get<std::string>() + "\"");
  q.canonicalize();
  if (f.is_rational()) return f.from_rational(q);
  if (q.get_den() != 1) throw InputError("fractions are not allowed over " + f.describe());
  return f.from_integer(q.get_num());
}

inline Json vec_to_json(const Field& f, const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(elem_to_json(f, x));
  return out;
}

inline Vec vec_from_json(const Field& f, const Json& j, std::optional<std::size_t> size = std::nullopt) {
  if (!j.is_array()) throw InputError("vector must be a list");
  if (size && j.size() != *size) {
    throw InputError("vector has " + std::to_string(j.size()) + " entries, expected " + std::to_string(*size));
  }
  Vec out;
  for (const auto& x : j) out.push_back(elem_from_json(f, x));
  return out;
}

inline Json poly_to_json(const Field& f, const Poly& p) { return vec_to_json(f, p); }

inline Poly poly_from_json(const Field& f, const Json& j) {
  Poly p = vec_from_json(f, j);
  poly::trim(f, p);
  return p;
}

inline Field field_from_json(const Json& j) {
  if (j == "rational") return Field::rational();
  if (j.is_object() && j.contains("prime")) {
    if (!j["prime"].is_number_unsigned()) throw InputError("prime must be a positive integer");
    const auto p = j["prime"].get<std::uint64_t>();
    if (!is_prime_number(p)) throw InputError(std::to_string(p) + " is not prime");
    return Field::prime(p);
  }
  if (j.is_object() && j.contains("extension")) {
    const auto& e = j["extension"];
    if (!e.contains("base") || !e.contains("modulus")) throw InputError("extension needs base and modulus");
    const Field base = field_from_json(e["base"]);
    const bool asserted = e.contains("irreducible") && e["irreducible"] == "asserted";
    return extension_field(base, poly_from_json(base, e["modulus"]), asserted);
  }
  throw InputError("unknown field block");
}

// ---------------------------------------------------------------------------
// Groupoid blocks.

struct GroupSpec {
  enum class Kind { cyclic, klein_four, table } kind = Kind::cyclic;
  std::size_t n = 1;
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::string> names;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct GroupoidSpec {
  enum class Kind { pair, group, union_of, arrows } kind = Kind::pair;
  std::size_t n = 1;
  GroupSpec group;
  std::vector<GroupoidSpec> parts;
  std::optional<FiniteGroupoid> explicit_table;
  friend bool operator==(const GroupoidSpec&, const GroupoidSpec&) = default;
};

inline std::vector<std::vector<std::size_t>> group_table(const GroupSpec& g) {
  switch (g.kind) {
    case GroupSpec::Kind::cyclic: return cyclic_table(g.n);
    case GroupSpec::Kind::klein_four: {
      std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) t[a][b] = a ^ b;
      return t;
    }
    case GroupSpec::Kind::table: return g.table;
  }
  return {};
}

inline FiniteGroupoid build_group(const GroupSpec& g) {
  switch (g.kind) {
    case GroupSpec::Kind::cyclic: return cyclic_group(g.n);
    case GroupSpec::Kind::klein_four: return klein_four_group();
    case GroupSpec::Kind::table: return group_as_groupoid(g.table, g.names);
  }
  throw Error("unknown group kind");
}

inline FiniteGroupoid build_groupoid(const GroupoidSpec& s) {
  switch (s.kind) {
    case GroupoidSpec::Kind::pair: return pair_groupoid(s.n);
    case GroupoidSpec::Kind::group: return build_group(s.group);
    case GroupoidSpec::Kind::union_of: {
      std::vector<FiniteGroupoid> parts;
      for (const auto& p : s.parts) parts.push_back(build_groupoid(p));
      return disjoint_union(parts);
    }
    case GroupoidSpec::Kind::arrows: return *s.explicit_table;
  }
  throw Error("unknown groupoid kind");
}

inline Json group_to_json(const GroupSpec& g) {
  switch (g.kind) {
    case GroupSpec::Kind::cyclic: return Json{{"cyclic", g.n}};
    case GroupSpec::Kind::klein_four: return "klein-four";
    case GroupSpec::Kind::table: {
      Json out{{"table", g.table}};
      if (!g.names.empty()) out["names"] = g.names;
      return out;
    }
  }
  return nullptr;
}

inline GroupSpec group_from_json(const Json& j) {
  GroupSpec g;
  if (j == "klein-four") {
    g.kind = GroupSpec::Kind::klein_four;
  } else if (j.is_object() && j.contains("cyclic")) {
    g.kind = GroupSpec::Kind::cyclic;
    g.n = j["cyclic"].get<std::size_t>();
    if (g.n == 0) throw InputError("cyclic group needs order >= 1");
  } else if (j.is_object() && j.contains("table")) {
    g.kind = GroupSpec::Kind::table;
    g.table = j["table"].get<std::vector<std::vector<std::size_t>>>();
    if (j.contains("names")) g.names = j["names"].get<std::vector<std::string>>();
  } else {
    throw InputError("unknown group block");
  }
  return g;
}

inline Json groupoid_table_to_json(const FiniteGroupoid& g) {
  Json comp = Json::array();
  for (const auto& [k, v] : g.composition()) comp.push_back({g.name(k.first), g.name(k.second), g.name(v)});
  Json objects = Json::array(), inverse = Json::array(), source = Json::array(), target = Json::array();
  for (Arrow e : g.objects()) objects.push_back(g.name(e));
  for (Arrow a = 0; a < g.size(); ++a) {
    inverse.push_back(g.name(g.inv(a)));
    source.push_back(g.name(g.src(a)));
    target.push_back(g.name(g.dst(a)));
  }
  return Json{{"names", g.names()}, {"objects", objects}, {"inverse", inverse},
              {"source", source},   {"target", target},   {"composition", comp}};
}

inline FiniteGroupoid groupoid_table_from_json(const Json& j) {
  for (const char* key : {"names", "objects", "inverse", "source", "target", "composition"}) {
    if (!j.contains(key)) throw InputError(std::string("arrow table lacks \"") + key + "\"");
  }
  const auto names = j["names"].get<std::vector<std::string>>();
  std::map<std::string, Arrow> index;
  for (Arrow a = 0; a < names.size(); ++a) {
    if (!index.emplace(names[a], a).second) throw InputError("duplicate arrow name " + names[a]);
  }
  auto look = [&](const Json& x) {
    auto it = index.find(x.get<std::string>());
    if (it == index.end()) throw InputError("unknown arrow " + x.get<std::string>());
    return it->second;
  };
  auto list = [&](const char* key) {
    std::vector<Arrow> out;
    for (const auto& x : j[key]) out.push_back(look(x));
    return out;
  };
  CompositionTable comp;
  for (const auto& row : j["composition"]) {
    if (!row.is_array() || row.size() != 3) throw InputError("composition rows are [a, b, ab]");
    comp[{look(row[0]), look(row[1])}] = look(row[2]);
  }
  try {
    return FiniteGroupoid(names, list("inverse"), list("source"), list("target"), list("objects"), comp);
  } catch (const StructuralError& e) {
    throw InputError(e.what());
  }
}

inline Json groupoid_to_json(const GroupoidSpec& s) {
  switch (s.kind) {
    case GroupoidSpec::Kind::pair: return Json{{"pair", s.n}};
    case GroupoidSpec::Kind::group: return Json{{"group", group_to_json(s.group)}};
    case GroupoidSpec::Kind::union_of: {
      Json parts = Json::array();
      for (const auto& p : s.parts) parts.push_back(groupoid_to_json(p));
      return Json{{"union", parts}};
    }
    case GroupoidSpec::Kind::arrows: return Json{{"arrows", groupoid_table_to_json(*s.explicit_table)}};
  }
  return nullptr;
}

inline GroupoidSpec groupoid_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) throw InputError("groupoid block must have exactly one tag");
  GroupoidSpec s;
  if (j.contains("pair")) {
    s.kind = GroupoidSpec::Kind::pair;
    s.n = j["pair"].get<std::size_t>();
    if (s.n == 0) throw InputError("pair groupoid needs n >= 1");
  } else if (j.contains("group")) {
    s.kind = GroupoidSpec::Kind::group;
    s.group = group_from_json(j["group"]);
  } else if (j.contains("union")) {
    s.kind = GroupoidSpec::Kind::union_of;
    for (const auto& p : j["union"]) s.parts.push_back(groupoid_from_json(p));
    if (s.parts.empty()) throw InputError("union of no groupoids");
  } else if (j.contains("arrows")) {
    s.kind = GroupoidSpec::Kind::arrows;
    s.explicit_table = groupoid_table_from_json(j["arrows"]);
  } else {
    throw InputError("unknown groupoid tag " + j.begin().key());
  }
  return s;
}

// ---------------------------------------------------------------------------
// Algebra blocks.

struct AlgebraSpec {
  enum class Kind { constants, matrix, group_algebra, field_as_algebra, polynomial_quotient } kind = Kind::constants;
  std::size_t n = 0;
  GroupSpec group;
  Poly modulus;
  std::optional<StructureConstantAlgebra> table;
  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.kind == b.kind && a.n == b.n && a.group == b.group && a.modulus == b.modulus && a.table == b.table;
  }
};

inline StructureConstantAlgebra build_algebra(const Field& f, const AlgebraSpec& s) {
  switch (s.kind) {
    case AlgebraSpec::Kind::constants: return *s.table;
    case AlgebraSpec::Kind::matrix: return matrix_algebra(f, s.n);
    case AlgebraSpec::Kind::group_algebra: return group_algebra(f, group_table(s.group));
    case AlgebraSpec::Kind::field_as_algebra:
      if (s.modulus.size() <= 2) return field_as_algebra(f);
      return field_as_algebra(extension_field(f, s.modulus));
    case AlgebraSpec::Kind::polynomial_quotient: return polynomial_quotient_algebra(f, s.modulus);
  }
  throw Error("unknown algebra kind");
}

inline Json constants_to_json(const StructureConstantAlgebra& a) {
  const Field& f = a.field();
  Json triples = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& t : a.table().product(i, j)) triples.push_back({i, j, t.index, elem_to_json(f, t.coeff)});
  return Json{{"dim", a.dim()}, {"constants", triples}, {"unit", vec_to_json(f, a.one())}};
}

inline StructureConstantAlgebra constants_from_json(const Field& f, const Json& j) {
  if (!j.contains("dim") || !j.contains("constants") || !j.contains("unit")) {
    throw InputError("algebra block needs dim, constants and unit");
  }
  const auto d = j["dim"].get<std::size_t>();
  StructureConstants t(f, d);
  for (const auto& row : j["constants"]) {
    if (!row.is_array() || row.size() != 4) throw InputError("structure constants are [i, j, k, c]");
    const auto i = row[0].get<std::size_t>(), jj = row[1].get<std::size_t>(), k = row[2].get<std::size_t>();
    if (i >= d || jj >= d || k >= d) throw InputError("structure constant index out of range");
    t.add_term(i, jj, k, elem_from_json(f, row[3]));
  }
  return {std::move(t), vec_from_json(f, j["unit"], d)};
}

inline Json algebra_to_json(const Field& f, const AlgebraSpec& s) {
  switch (s.kind) {
    case AlgebraSpec::Kind::constants: return constants_to_json(*s.table);
    case AlgebraSpec::Kind::matrix: return Json{{"matrix", s.n}};
    case AlgebraSpec::Kind::group_algebra: return Json{{"group_algebra", group_to_json(s.group)}};
    case AlgebraSpec::Kind::field_as_algebra: return Json{{"field_as_algebra", poly_to_json(f, s.modulus)}};
    case AlgebraSpec::Kind::polynomial_quotient: return Json{{"polynomial_quotient", poly_to_json(f, s.modulus)}};
  }
  return nullptr;
}

inline AlgebraSpec algebra_from_json(const Field& f, const Json& j) {
  if (!j.is_object()) throw InputError("algebra block must be an object");
  AlgebraSpec s;
  if (j.contains("matrix")) {
    s.kind = AlgebraSpec::Kind::matrix;
    s.n = j["matrix"].get<std::size_t>();
    if (s.n == 0) throw InputError("matrix algebra needs n >= 1");
  } else if (j.contains("group_algebra")) {
    s.kind = AlgebraSpec::Kind::group_algebra;
    s.group = group_from_json(j["group_algebra"]);
  } else if (j.contains("field_as_algebra")) {
    s.kind = AlgebraSpec::Kind::field_as_algebra;
    s.modulus = poly_from_json(f, j["field_as_algebra"]);
  } else if (j.contains("polynomial_quotient")) {
    s.kind = AlgebraSpec::Kind::polynomial_quotient;
    s.modulus = poly_from_json(f, j["polynomial_quotient"]);
  } else {
    s.kind = AlgebraSpec::Kind::constants;
    s.table = constants_from_json(f, j);
  }
  return s;
}

inline AlgebraSpec constants_spec(const StructureConstantAlgebra& a) {
  AlgebraSpec s;
  s.kind = AlgebraSpec::Kind::constants;
  s.table = a;
  return s;
}

// ---------------------------------------------------------------------------
// Document.

/// `specialize` selects the shortcuts: groupoid-ring (one fiber, no action,
/// no cocycle), skew (no cocycle), twisted (one fiber, no action).
struct SystemSpec {
  std::string specialize;                                   // empty, "groupoid-ring", "skew", "twisted"
  std::optional<AlgebraSpec> fiber;                         // constant fiber
  std::map<std::string, AlgebraSpec> fibers;                // per object name
  std::map<std::string, Matrix> action;                     // non-identity arrows
  std::vector<std::pair<std::pair<std::string, std::string>, Vec>> cocycle;  // pairs off the identities
};

struct GradedSpec {
  AlgebraSpec algebra;
  std::vector<std::string> degrees;  // arrow name per basis vector
};

struct CasimirEntry {
  std::string object;
  std::vector<std::pair<std::pair<std::string, std::string>, Vec>> terms;
};

struct DefinitionDocument {
  std::string name;
  Field field = Field::rational();
  std::optional<GroupoidSpec> groupoid;  // absent for towers
  std::variant<SystemSpec, TowerSpec, GradedSpec> content;
  std::vector<CasimirEntry> casimir;

  bool is_system() const { return std::holds_alternative<SystemSpec>(content); }
  bool is_tower() const { return std::holds_alternative<TowerSpec>(content); }
  bool is_graded() const { return std::holds_alternative<GradedSpec>(content); }
};

namespace detail {

inline Arrow arrow_named(const FiniteGroupoid& g, const std::string& n) {
  auto a = g.find(n);
  if (!a) throw InputError("unknown arrow " + n);
  return *a;
}

inline Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.field(), m.row(i)));
  return rows;
}

inline Matrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw InputError("action matrix has the wrong number of rows");
  std::vector<Vec> r;
  for (const auto& row : j) r.push_back(vec_from_json(f, row, cols));
  return Matrix::from_rows(f, r, cols);
}

}  // namespace detail

inline Json tower_to_json(const Field& f, const TowerSpec& t) {
  Json out{{"modulus", poly_to_json(f, t.modulus)}, {"automorphisms", Json::array()}, {"conjugates", Json::array()}};
  if (t.asserted_irreducible) out["irreducible"] = "asserted";
  for (const auto& a : t.automorphisms) out["automorphisms"].push_back(poly_to_json(f, a));
  for (const auto& c : t.conjugates) {
    Json span = Json::array();
    for (const auto& p : c) span.push_back(poly_to_json(f, p));
    out["conjugates"].push_back(span);
  }
  return out;
}

inline TowerSpec tower_from_json(const Field& f, const Json& j) {
  for (const char* key : {"modulus", "automorphisms", "conjugates"}) {
    if (!j.contains(key)) throw InputError(std::string("tower block lacks \"") + key + "\"");
  }
  TowerSpec t;
  t.modulus = poly_from_json(f, j["modulus"]);
  t.asserted_irreducible = j.contains("irreducible") && j["irreducible"] == "asserted";
  for (const auto& a : j["automorphisms"]) t.automorphisms.push_back(poly_from_json(f, a));
  for (const auto& c : j["conjugates"]) {
    std::vector<Poly> span;
    for (const auto& p : c) span.push_back(poly_from_json(f, p));
    t.conjugates.push_back(std::move(span));
  }
  return t;
}

namespace detail {

inline Json pair_terms_to_json(const Field& f, const std::vector<std::pair<std::pair<std::string, std::string>, Vec>>& t,
                               const char* value_key) {
  Json out = Json::array();
  for (const auto& [k, v] : t) out.push_back(Json{{"pair", {k.first, k.second}}, {value_key, vec_to_json(f, v)}});
  return out;
}

inline std::vector<std::pair<std::pair<std::string, std::string>, Vec>> pair_terms_from_json(const Field& f,
                                                                                            const Json& j,
                                                                                            const char* value_key) {
  if (!j.is_array()) throw InputError("expected a list of pair entries");
  std::vector<std::pair<std::pair<std::string, std::string>, Vec>> out;
  for (const auto& e : j) {
    if (!e.contains("pair") || !e.contains(value_key) || e["pair"].size() != 2) {
      throw InputError(std::string("pair entries are {\"pair\": [s, t], \"") + value_key + "\": [...]}");
    }
    out.push_back({{e["pair"][0].get<std::string>(), e["pair"][1].get<std::string>()}, vec_from_json(f, e[value_key])});
  }
  return out;
}

}  // namespace detail

inline Json document_to_json(const DefinitionDocument& d) {
  Json out{{"format", "gring-definition"}, {"version", kFormatVersion}, {"name", d.name}, {"field", field_to_json(d.field)}};
  if (d.groupoid) out["groupoid"] = groupoid_to_json(*d.groupoid);
  const Field& f = d.field;
  if (const auto* s = std::get_if<SystemSpec>(&d.content)) {
    Json sys = Json::object();
    if (!s->specialize.empty()) sys["specialize"] = s->specialize;
    if (s->fiber) sys["fiber"] = algebra_to_json(f, *s->fiber);
    if (!s->fibers.empty()) {
      sys["fibers"] = Json::object();
      for (const auto& [k, v] : s->fibers) sys["fibers"][k] = algebra_to_json(f, v);
    }
    if (!s->action.empty()) {
      sys["action"] = Json::object();
      for (const auto& [k, m] : s->action) sys["action"][k] = detail::matrix_to_json(m);
    }
    if (!s->cocycle.empty()) sys["cocycle"] = detail::pair_terms_to_json(f, s->cocycle, "value");
    out["system"] = sys;
  } else if (const auto* t = std::get_if<TowerSpec>(&d.content)) {
    out["tower"] = tower_to_json(f, *t);
  } else {
    const auto& g = std::get<GradedSpec>(d.content);
    out["graded"] = Json{{"algebra", algebra_to_json(f, g.algebra)}, {"degrees", g.degrees}};
  }
  if (!d.casimir.empty()) {
    Json c = Json::array();
    for (const auto& e : d.casimir) c.push_back(Json{{"object", e.object}, {"terms", detail::pair_terms_to_json(f, e.terms, "coeff")}});
    out["casimir"] = c;
  }
  return out;
}

inline DefinitionDocument document_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("document must be an object");
  if (j.value("format", "") != "gring-definition") throw InputError("missing or wrong \"format\" tag");
  if (j.value("version", 0) != kFormatVersion) throw InputError("unsupported document version");
  static const std::vector<std::string> known{"format", "version", "name", "field", "groupoid",
                                              "system",  "tower",   "graded", "casimir"};
  for (const auto& [k, v] : j.items()) {
    if (std::find(known.begin(), known.end(), k) == known.end()) throw InputError("unknown key \"" + k + "\"");
  }
  DefinitionDocument d;
  d.name = j.value("name", "");
  if (!j.contains("field")) throw InputError("document lacks a field block");
  d.field = field_from_json(j["field"]);
  const Field& f = d.field;
  const int bodies = int(j.contains("system")) + int(j.contains("tower")) + int(j.contains("graded"));
  if (bodies != 1) throw InputError("document needs exactly one of system, tower, graded");
  if (j.contains("tower")) {
    if (j.contains("groupoid")) throw InputError("tower documents derive their groupoid");
    d.content = tower_from_json(f, j["tower"]);
  } else {
    if (!j.contains("groupoid")) throw InputError("document lacks a groupoid block");
    d.groupoid = groupoid_from_json(j["groupoid"]);
  }
  if (j.contains("system")) {
    const auto& s = j["system"];
    SystemSpec sys;
    sys.specialize = s.value("specialize", "");
    if (!sys.specialize.empty() && sys.specialize != "groupoid-ring" && sys.specialize != "skew" &&
        sys.specialize != "twisted") {
      throw InputError("unknown specialization " + sys.specialize);
    }
    if (s.contains("fiber")) sys.fiber = algebra_from_json(f, s["fiber"]);
    if (s.contains("fibers")) {
      for (const auto& [k, v] : s["fibers"].items()) sys.fibers.emplace(k, algebra_from_json(f, v));
    }
    if (sys.fiber.has_value() == !sys.fibers.empty()) throw InputError("system needs exactly one of fiber, fibers");
    if (s.contains("action")) {
      if (!s["action"].is_object()) throw InputError("action block maps arrow names to matrices");
      for (const auto& [k, v] : s["action"].items()) {
        if (!v.is_array() || v.empty()) throw InputError("action matrix for " + k + " is empty");
        sys.action.emplace(k, detail::matrix_from_json(f, v, v.size(), v[0].size()));
      }
    }
    if (s.contains("cocycle")) sys.cocycle = detail::pair_terms_from_json(f, s["cocycle"], "value");
    if ((sys.specialize == "groupoid-ring" || sys.specialize == "twisted") && (!sys.fiber || !sys.action.empty())) {
      throw InputError(sys.specialize + " takes one fiber and no action");
    }
    if ((sys.specialize == "groupoid-ring" || sys.specialize == "skew") && !sys.cocycle.empty()) {
      throw InputError(sys.specialize + " takes no cocycle");
    }
    d.content = std::move(sys);
  } else if (j.contains("graded")) {
    const auto& g = j["graded"];
    if (!g.contains("algebra") || !g.contains("degrees")) throw InputError("graded block needs algebra and degrees");
    d.content = GradedSpec{algebra_from_json(f, g["algebra"]), g["degrees"].get<std::vector<std::string>>()};
  }
  if (j.contains("casimir")) {
    for (const auto& e : j["casimir"]) {
      if (!e.contains("object") || !e.contains("terms")) throw InputError("casimir entries need object and terms");
      d.casimir.push_back({e["object"].get<std::string>(), detail::pair_terms_from_json(f, e["terms"], "coeff")});
    }
  }
  return d;
}

/// Canonical text: sorted keys, two-space indent, trailing newline.
inline std::string emit_document(const DefinitionDocument& d) { return document_to_json(d).dump(2) + "\n"; }

inline DefinitionDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("not valid JSON: ") + e.what());
  }
  try {
    return document_from_json(j);
  } catch (const Json::exception& e) {
    throw InputError(std::string("schema error: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Building the mathematical objects.

/// Fibers, action and cocycle of a system document over groupoid g. Identity
/// arrows act by the identity and pairs touching identities get cocycle 1.
inline CrossedSystem build_system(const Field& f, const FiniteGroupoid& g, const SystemSpec& s) {
  std::map<Arrow, StructureConstantAlgebra> fibers;
  if (s.fiber) {
    const auto a = build_algebra(f, *s.fiber);
    for (Arrow e : g.objects()) fibers.emplace(e, a);
  } else {
    for (const auto& [name, spec] : s.fibers) {
      const Arrow e = detail::arrow_named(g, name);
      if (!g.is_object(e)) throw InputError("fiber given for non-identity arrow " + name);
      fibers.emplace(e, build_algebra(f, spec));
    }
    for (Arrow e : g.objects()) {
      if (!fibers.count(e)) throw InputError("no fiber for object " + g.name(e));
    }
  }
  std::vector<Matrix> action;
  for (Arrow a = 0; a < g.size(); ++a) {
    const std::size_t rows = fibers.at(g.dst(a)).dim(), cols = fibers.at(g.src(a)).dim();
    auto it = s.action.find(g.name(a));
    if (it != s.action.end()) {
      if (g.is_object(a)) throw InputError("action given for identity arrow " + g.name(a));
      if (it->second.rows() != rows || it->second.cols() != cols) {
        throw InputError("action matrix for " + g.name(a) + " has the wrong shape");
      }
      action.push_back(it->second);
      continue;
    }
    const bool shortcut = s.specialize == "groupoid-ring" || s.specialize == "twisted";
    if (!g.is_object(a) && !shortcut) throw InputError("no action given for arrow " + g.name(a));
    action.push_back(Matrix::identity(f, rows));
  }
  for (const auto& [k, m] : s.action) detail::arrow_named(g, k);
  std::map<ArrowPair, Vec> beta;
  for (const auto& [a, b] : g.composable_pairs()) beta[{a, b}] = fibers.at(g.dst(a)).one();
  std::set<ArrowPair> given;
  for (const auto& [k, v] : s.cocycle) {
    const Arrow a = detail::arrow_named(g, k.first), b = detail::arrow_named(g, k.second);
    if (!g.composable(a, b)) throw InputError("cocycle given on non-composable pair (" + k.first + ", " + k.second + ")");
    if (g.is_object(a) || g.is_object(b)) throw InputError("cocycle on identity-touching pairs is fixed to 1");
    if (!given.insert({a, b}).second) throw InputError("cocycle pair given twice");
    if (v.size() != fibers.at(g.dst(a)).dim()) throw InputError("cocycle value has the wrong length");
    beta[{a, b}] = v;
  }
  if (s.specialize.empty() || s.specialize == "twisted") {
    for (const auto& [a, b] : g.composable_pairs()) {
      if (!g.is_object(a) && !g.is_object(b) && !given.count({a, b})) {
        throw InputError("no cocycle value for (" + g.name(a) + ", " + g.name(b) + ")");
      }
    }
  }
  try {
    return CrossedSystem(g, std::move(fibers), std::move(action), std::move(beta));
  } catch (const StructuralError& e) {
    throw InputError(e.what());
  }
}

inline GradedAlgebra build_graded(const Field& f, const FiniteGroupoid& g, const GradedSpec& s) {
  const auto a = build_algebra(f, s.algebra);
  if (s.degrees.size() != a.dim()) throw InputError("degrees list does not match the algebra dimension");
  std::vector<Arrow> deg;
  for (const auto& n : s.degrees) deg.push_back(detail::arrow_named(g, n));
  try {
    return GradedAlgebra(g, a.table(), deg);
  } catch (const StructuralError& e) {
    throw InputError(e.what());
  }
}

/// The groupoid a document talks about (derived for towers).
inline FiniteGroupoid document_groupoid(const DefinitionDocument& d) {
  if (d.is_tower()) return load_tower(d.field, std::get<TowerSpec>(d.content)).groupoid;
  return build_groupoid(*d.groupoid);
}

/// The crossed system of a system or tower document.
inline CrossedSystem document_system(const DefinitionDocument& d) {
  if (const auto* t = std::get_if<TowerSpec>(&d.content)) return tower_system(load_tower(d.field, *t));
  if (const auto* s = std::get_if<SystemSpec>(&d.content)) return build_system(d.field, build_groupoid(*d.groupoid), *s);
  throw PreconditionError("document does not describe a crossed system");
}

inline CasimirFamily casimir_from_document(const CrossedProductPresentation& p, const DefinitionDocument& d) {
  const auto& g = p.system.groupoid();
  CasimirFamily out;
  for (Arrow e : g.objects()) out[e];
  for (const auto& entry : d.casimir) {
    const Arrow e = detail::arrow_named(g, entry.object);
    if (!g.is_object(e)) throw InputError("Casimir entry at non-identity arrow " + entry.object);
    for (const auto& [k, v] : entry.terms) {
      const Arrow a = detail::arrow_named(g, k.first), b = detail::arrow_named(g, k.second);
      if (!g.composable(a, b)) throw InputError("Casimir term on non-composable pair");
      if (v.size() != p.system.fiber(g.dst(a)).dim()) throw InputError("Casimir coefficient has the wrong length");
      detail::tensor_accumulate(p, out[e], {a, b}, v);
    }
  }
  return out;
}

inline std::vector<CasimirEntry> casimir_to_entries(const CrossedProductPresentation& p, const CasimirFamily& x) {
  const auto& g = p.system.groupoid();
  std::vector<CasimirEntry> out;
  for (const auto& [e, t] : x) {
    CasimirEntry entry{g.name(e), {}};
    for (const auto& [k, v] : t.coeff) entry.terms.push_back({{g.name(k.first), g.name(k.second)}, v});
    out.push_back(std::move(entry));
  }
  return out;
}

/// Document describing S. The groupoid is written as an arrow table unless
/// `groupoid` gives a shorter constructor; shortcuts are chosen from the data.
inline DefinitionDocument system_document(const std::string& name, const CrossedSystem& S,
                                          std::optional<GroupoidSpec> groupoid = std::nullopt) {
  const auto& g = S.groupoid();
  DefinitionDocument d;
  d.name = name;
  d.field = S.field();
  if (!groupoid) {
    GroupoidSpec gs;
    gs.kind = GroupoidSpec::Kind::arrows;
    gs.explicit_table = g;
    groupoid = gs;
  }
  if (!(build_groupoid(*groupoid) == g)) throw Error("groupoid block does not reproduce the system's groupoid");
  d.groupoid = groupoid;
  SystemSpec s;
  const auto& first = S.fiber(g.objects().front());
  bool constant = true, identity_action = true, trivial = true;
  for (Arrow e : g.objects()) constant = constant && S.fiber(e) == first;
  for (Arrow a = 0; a < g.size(); ++a) {
    identity_action = identity_action && S.action(a).rows() == S.action(a).cols() &&
                      S.action(a) == Matrix::identity(S.field(), S.action(a).rows());
  }
  for (const auto& [k, v] : S.cocycle()) trivial = trivial && v == S.fiber(g.dst(k.first)).one();
  const bool one_fiber = constant && identity_action;
  if (one_fiber && trivial) {
    s.specialize = "groupoid-ring";
  } else if (trivial) {
    s.specialize = "skew";
  } else if (one_fiber) {
    s.specialize = "twisted";
  }
  if (constant) {
    s.fiber = constants_spec(first);
  } else {
    for (Arrow e : g.objects()) s.fibers.emplace(g.name(e), constants_spec(S.fiber(e)));
  }
  if (s.specialize != "groupoid-ring" && s.specialize != "twisted") {
    for (Arrow a = 0; a < g.size(); ++a)
      if (!g.is_object(a)) s.action.emplace(g.name(a), S.action(a));
  }
  if (!trivial) {
    for (const auto& [k, v] : S.cocycle()) {
      if (g.is_object(k.first) || g.is_object(k.second)) continue;
      s.cocycle.push_back({{g.name(k.first), g.name(k.second)}, v});
    }
  }
  d.content = std::move(s);
  return d;
}

inline DefinitionDocument graded_document(const std::string& name, const GradedAlgebra& r, const Vec& unit,
                                          std::optional<GroupoidSpec> groupoid = std::nullopt) {
  DefinitionDocument d;
  d.name = name;
  d.field = r.field();
  if (!groupoid) {
    GroupoidSpec gs;
    gs.kind = GroupoidSpec::Kind::arrows;
    gs.explicit_table = r.groupoid();
    groupoid = gs;
  }
  d.groupoid = groupoid;
  GradedSpec g{constants_spec(StructureConstantAlgebra(r.table(), unit)), {}};
  for (std::size_t i = 0; i < r.dim(); ++i) g.degrees.push_back(r.groupoid().name(r.degree(i)));
  d.content = std::move(g);
  return d;
}

}  // namespace gring
