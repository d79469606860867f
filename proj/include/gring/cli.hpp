#pragma once

// Commands behind the gring tool. Each takes a parsed document and returns
// a Report; argument parsing lives in tools/gring.cpp.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gring/corpus.hpp"
#include "gring/io.hpp"
#include "gring/separability.hpp"

namespace gring {

inline constexpr const char* kToolVersion = "1.0.0";

struct CheckEntry {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::vector<Violation> witnesses;
  Json details = Json::object();
  std::optional<double> timing_ms;
};

struct Report {
  std::string command;
  std::string input;
  std::uint64_t seed = 0;
  std::vector<CheckEntry> checks;

  /// 0 iff every check passes.
  int status() const {
    for (const auto& c : checks)
      if (c.verdict != Verdict::pass) return 1;
    return 0;
  }
};

struct RunOptions {
  std::uint64_t seed = 0;
  bool timings = true;
};

// ---------------------------------------------------------------------------
// Serialization.

inline Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::pass, Verdict::fail, Verdict::not_certified, Verdict::undecided})
    if (to_string(v) == s) return v;
  throw InputError("unknown verdict " + s);
}

inline Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json w = Json::array();
    for (const auto& v : c.witnesses) w.push_back(Json{{"axiom", v.axiom}, {"witness", v.witness}, {"message", v.message}});
    Json e{{"name", c.name}, {"verdict", std::string(to_string(c.verdict))}, {"witnesses", w}, {"details", c.details}};
    if (c.timing_ms) e["timing_ms"] = *c.timing_ms;
    checks.push_back(e);
  }
  return Json{{"tool", "gring"}, {"version", kToolVersion}, {"command", r.command}, {"input", r.input},
              {"seed", r.seed},  {"checks", checks},       {"status", r.status()}};
}

inline Report report_from_json(const Json& j) {
  try {
    if (j.value("tool", "") != "gring") throw InputError("not a gring report");
    Report r;
    r.command = j.at("command").get<std::string>();
    r.input = j.at("input").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& c : j.at("checks")) {
      CheckEntry e;
      e.name = c.at("name").get<std::string>();
      e.verdict = verdict_from_string(c.at("verdict").get<std::string>());
      for (const auto& w : c.at("witnesses")) {
        e.witnesses.push_back({w.at("axiom").get<std::string>(), w.at("witness").get<std::vector<std::size_t>>(),
                               w.at("message").get<std::string>()});
      }
      e.details = c.at("details");
      if (c.contains("timing_ms")) e.timing_ms = c["timing_ms"].get<double>();
      r.checks.push_back(std::move(e));
    }
    if (j.at("status").get<int>() != r.status()) throw InputError("report status disagrees with its checks");
    return r;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

inline std::string render_structured(const Report& r) { return report_to_json(r).dump(2) + "\n"; }

inline std::string render_text(const Report& r) {
  std::ostringstream out;
  out << r.command << " " << r.input << "\n";
  for (const auto& c : r.checks) {
    out << "  " << c.name << ": " << to_string(c.verdict);
    if (c.timing_ms) out << " (" << *c.timing_ms << " ms)";
    out << "\n";
    for (const auto& w : c.witnesses) {
      out << "    " << w.axiom << " [";
      for (std::size_t i = 0; i < w.witness.size(); ++i) out << (i ? ", " : "") << w.witness[i];
      out << "]";
      if (!w.message.empty()) out << " " << w.message;
      out << "\n";
    }
    if (!c.details.empty()) out << "    " << c.details.dump() << "\n";
  }
  out << "status " << r.status() << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Loading.

/// The ring a document describes, as a graded algebra, plus the
/// presentation when it comes from a crossed system.
struct LoadedRing {
  std::optional<CrossedProductPresentation> presentation;
  std::optional<GradedAlgebra> graded;
  const GradedAlgebra& ring() const { return presentation ? presentation->algebra : *graded; }
};

inline LoadedRing load_ring(const DefinitionDocument& d) {
  LoadedRing out;
  if (const auto* g = std::get_if<GradedSpec>(&d.content)) {
    out.graded = build_graded(d.field, document_groupoid(d), *g);
  } else {
    out.presentation = build_crossed_product(document_system(d));
  }
  return out;
}

namespace detail {

template <class F>
CheckEntry timed(const std::string& name, const RunOptions& opt, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckEntry e;
  e.name = name;
  try {
    body(e);
  } catch (const InputError&) {
    throw;
  } catch (const PreconditionError& ex) {
    e.verdict = Verdict::fail;
    e.details["error"] = ex.what();
  }
  if (opt.timings) {
    e.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return e;
}

inline void take(CheckEntry& e, const ValidationReport& r, std::string_view prefix = {}) {
  for (const auto& v : r.violations) e.witnesses.push_back({std::string(prefix) + v.axiom, v.witness, v.message});
  if (!r.ok()) e.verdict = Verdict::fail;
}

inline Json vec_json(const GradedAlgebra& r, const Vec& v) { return vec_to_json(r.field(), v); }

}  // namespace detail

// ---------------------------------------------------------------------------
// validate

inline Report cmd_validate(const DefinitionDocument& d, const std::string& input, const RunOptions& opt) {
  Report rep{"validate", input, opt.seed, {}};
  rep.checks.push_back(detail::timed("schema", opt, [](CheckEntry&) {}));
  if (const auto* t = std::get_if<TowerSpec>(&d.content)) {
    std::optional<FieldTowerData> tower;
    rep.checks.push_back(detail::timed("tower", opt, [&](CheckEntry& e) {
      try {
        tower.emplace(load_tower(d.field, *t));
        e.details["irreducibility"] = to_string(tower->big.irreducibility());
        e.details["arrows"] = tower->groupoid.size();
      } catch (const InputError&) {
        throw;
      } catch (const Error& ex) {
        e.verdict = Verdict::fail;
        e.details["error"] = ex.what();
      }
    }));
    if (!tower) return rep;
    rep.checks.push_back(detail::timed("groupoid", opt, [&](CheckEntry& e) { detail::take(e, validate_groupoid(tower->groupoid)); }));
    const auto s = tower_system(*tower);
    rep.checks.push_back(detail::timed("crossed-system", opt, [&](CheckEntry& e) { detail::take(e, validate_crossed_system(s)); }));
    return rep;
  }
  const auto g = document_groupoid(d);
  const auto gr = validate_groupoid(g);
  rep.checks.push_back(detail::timed("groupoid", opt, [&](CheckEntry& e) { detail::take(e, gr); }));
  if (!gr.ok()) return rep;
  if (const auto* gs = std::get_if<GradedSpec>(&d.content)) {
    const auto r = build_graded(d.field, g, *gs);
    rep.checks.push_back(detail::timed("algebra", opt, [&](CheckEntry& e) {
      ValidationReport a;
      check_associativity(r.table(), a);
      detail::take(e, a);
    }));
    rep.checks.push_back(detail::timed("grading", opt, [&](CheckEntry& e) { detail::take(e, check_grading(r)); }));
    return rep;
  }
  const auto s = document_system(d);
  rep.checks.push_back(detail::timed("fibers", opt, [&](CheckEntry& e) {
    for (Arrow obj : g.objects()) detail::take(e, validate_algebra(s.fiber(obj)), g.name(obj) + ":");
  }));
  rep.checks.push_back(detail::timed("crossed-system", opt, [&](CheckEntry& e) { detail::take(e, validate_crossed_system(s)); }));
  return rep;
}

// ---------------------------------------------------------------------------
// check

inline const std::vector<std::string>& check_properties() {
  static const std::vector<std::string> p{"grading", "object-unital", "strongly-graded", "crossed-product", "skew", "twisted"};
  return p;
}

inline Report cmd_check(const DefinitionDocument& d, const std::string& input, const std::string& property,
                        const RunOptions& opt) {
  const auto& known = check_properties();
  if (std::find(known.begin(), known.end(), property) == known.end()) throw InputError("unknown property " + property);
  Report rep{"check", input, opt.seed, {}};
  const auto loaded = load_ring(d);
  const auto& r = loaded.ring();
  const auto& g = r.groupoid();
  rep.checks.push_back(detail::timed(property, opt, [&](CheckEntry& e) {
    if (property == "grading") {
      detail::take(e, check_grading(r));
      return;
    }
    const auto units = object_units(r);
    if (property == "object-unital") {
      detail::take(e, units.report);
      if (!units.ok()) return;
      Json u = Json::object();
      for (Arrow obj : g.objects()) u[g.name(obj)] = detail::vec_json(r, units.at(obj));
      e.details["units"] = u;
      // 1 of the subring over every two-object set is the sum of the units.
      const auto& objs = g.objects();
      for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = i + 1; j < objs.size(); ++j) detail::take(e, check_unit_sum(r, units, {objs[i], objs[j]}));
      return;
    }
    if (!units.ok()) throw PreconditionError("ring is not object unital");
    if (property == "strongly-graded") {
      const auto s = is_strongly_graded(r, units);
      for (Arrow a : s.failing()) e.witnesses.push_back({"strongly-graded", {a}, "1 not in R_s R_s^-1 at " + g.name(a)});
      if (!s.ok()) e.verdict = Verdict::fail;
      return;
    }
    if (property == "crossed-product") {
      const auto c = is_object_crossed_product(r, units, opt.seed);
      e.verdict = c.verdict;
      Json u = Json::object();
      for (const auto& [a, x] : c.units) u[g.name(a)] = detail::vec_json(r, x);
      e.details["units"] = u;
      for (Arrow a : c.uncertified) e.witnesses.push_back({"crossed-product", {a}, "no object-invertible element found at " + g.name(a)});
      return;
    }
    // skew / twisted: on the presentation when there is one, otherwise on
    // a system extracted from certified units (the answer then depends on
    // the units found).
    std::optional<CrossedSystem> sys;
    if (loaded.presentation) {
      sys = loaded.presentation->system;
    } else {
      const auto c = is_object_crossed_product(r, units, opt.seed);
      if (c.verdict != Verdict::pass) {
        e.verdict = Verdict::undecided;
        e.details["reason"] = "no crossed-product presentation";
        return;
      }
      sys = extract_crossed_system(r, units, c.units, c.inverses).system;
      e.details["units"] = "certified";
    }
    const auto rep2 = property == "skew" ? check_skew(*sys) : check_twisted(*sys);
    detail::take(e, rep2);
    if (!rep2.ok() && !loaded.presentation) e.verdict = Verdict::undecided;
  }));
  return rep;
}

// ---------------------------------------------------------------------------
// separability

struct SeparabilityFlags {
  bool construct_casimir = false;
  bool verify_only = false;
  bool from_casimir = false;
};

inline Json casimir_json(const CrossedProductPresentation& p, const CasimirFamily& x) {
  Json out = Json::array();
  const Field& f = p.algebra.field();
  for (const auto& e : casimir_to_entries(p, x)) {
    Json terms = Json::array();
    for (const auto& [k, v] : e.terms) terms.push_back(Json{{"pair", {k.first, k.second}}, {"coeff", vec_to_json(f, v)}});
    out.push_back(Json{{"object", e.object}, {"terms", terms}});
  }
  return out;
}

inline Report cmd_separability(const DefinitionDocument& d, const std::string& input, const SeparabilityFlags& flags,
                               const RunOptions& opt) {
  Report rep{"separability", input, opt.seed, {}};
  const auto loaded = load_ring(d);
  const auto& r = loaded.ring();
  const auto& g = r.groupoid();
  if (!loaded.presentation && (flags.construct_casimir || flags.verify_only || flags.from_casimir)) {
    throw InputError("Casimir options need a crossed-system or tower document");
  }
  if (flags.verify_only) {
    if (d.casimir.empty()) throw InputError("--verify-only needs a casimir block in the document");
    const auto& p = *loaded.presentation;
    rep.checks.push_back(detail::timed("casimir-verify", opt, [&](CheckEntry& e) {
      detail::take(e, casimir_verify(p, casimir_from_document(p, d)));
    }));
    return rep;
  }
  std::optional<SeparabilityReport> sep;
  rep.checks.push_back(detail::timed("separability", opt, [&](CheckEntry& e) {
    sep = loaded.presentation ? separability_criterion(*loaded.presentation) : separability_criterion(r);
    e.verdict = sep->verdict;
    Json objects = Json::array();
    for (const auto& o : sep->objects) {
      Json j{{"object", g.name(o.object)}, {"isotropy", o.isotropy_size}, {"center_dimension", o.center_dimension},
             {"trace_rank", o.trace_rank}, {"verdict", std::string(to_string(o.verdict))}};
      if (o.trace_solution) j["trace_solution"] = detail::vec_json(r, *o.trace_solution);
      if (!o.witness.empty()) {
        j["witness"] = o.witness;
        e.witnesses.push_back({"separability", {o.object}, o.witness});
      }
      if (auto it = sep->exhibited.find(o.object); it != sep->exhibited.end()) {
        j["exhibited"] = vec_to_json(r.field(), it->second);
      }
      if (sep->isotropy_order_invertible) j["isotropy_order_invertible"] = sep->isotropy_order_invertible->at(o.object);
      objects.push_back(j);
    }
    e.details["objects"] = objects;
  }));
  if (!loaded.presentation || !sep) return rep;
  const auto& p = *loaded.presentation;
  std::optional<CasimirFamily> family;
  if (flags.construct_casimir || (flags.from_casimir && d.casimir.empty())) {
    rep.checks.push_back(detail::timed("casimir", opt, [&](CheckEntry& e) {
      family = casimir_construct(p, *sep);
      detail::take(e, casimir_verify(p, *family));
      e.details["family"] = casimir_json(p, *family);
    }));
  }
  if (flags.from_casimir) {
    if (!d.casimir.empty()) family = casimir_from_document(p, d);
    rep.checks.push_back(detail::timed("casimir-trace", opt, [&](CheckEntry& e) {
      if (!family) throw PreconditionError("no Casimir family");
      try {
        const auto t = trace_solution_from_casimir(p, *family, sep->section);
        Json dj = Json::object();
        for (const auto& [obj, v] : t.d) dj[g.name(obj)] = detail::vec_json(r, v);
        e.details["d"] = dj;
      } catch (const PreconditionError&) {
        throw;
      } catch (const Error& ex) {
        e.verdict = Verdict::fail;
        e.details["error"] = ex.what();
      }
    }));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// simplicity

inline Report cmd_simplicity(const DefinitionDocument& d, const std::string& input, const std::string& method,
                             const RunOptions& opt) {
  SimplicityOptions so;
  so.seed = opt.seed;
  if (method == "automatic") {
    so.method = SimplicityOptions::Method::automatic;
  } else if (method == "trace-form") {
    so.method = SimplicityOptions::Method::trace_form;
  } else if (method == "exhaustive") {
    so.method = SimplicityOptions::Method::exhaustive;
  } else {
    throw InputError("unknown simplicity method " + method);
  }
  Report rep{"simplicity", input, opt.seed, {}};
  const auto loaded = load_ring(d);
  const auto& r = loaded.ring();
  rep.checks.push_back(detail::timed("simplicity", opt, [&](CheckEntry& e) {
    const auto units = object_units(r);
    if (!units.ok()) throw PreconditionError("ring is not object unital");
    const auto a = as_unital_algebra(r, units);
    const auto s = is_simple(a, so);
    e.verdict = s.verdict;
    e.details["method"] = s.method;
    e.details["reason"] = s.reason;
    if (s.ideal_generator) {
      e.details["ideal_generator"] = vec_to_json(a.field(), *s.ideal_generator);
      e.details["ideal_dimension"] = s.ideal_dimension;
      e.witnesses.push_back({"proper-ideal", {s.ideal_dimension}, "generator spans a proper ideal"});
    }
    if (s.method == "trace-form" && s.verdict != Verdict::undecided) {
      e.details["radical_dimension"] = s.radical_dimension;
      if (s.radical_dimension == 0) e.details["center_dimension"] = s.center_dimension;
    }
    if (!s.irreducibility_method.empty()) e.details["irreducibility"] = s.irreducibility_method;
  }));
  return rep;
}

}  // namespace gring
