#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "gring/cli.hpp"

using namespace gring;

namespace {

const RunOptions kQuiet{7, false};

DefinitionDocument corrupted_quaternion() {
  auto d = example_document("quaternion");
  auto& s = std::get<SystemSpec>(d.content);
  auto& entry = s.cocycle.front();
  entry.second = vec_scale(d.field, d.field.from_int(-1), entry.second);
  return d;
}

// Re-evaluates one crossed-system axiom at a witness straight from the
// system's tables.
bool replays(const CrossedSystem& S, const Violation& v) {
  const auto& g = S.groupoid();
  const auto& w = v.witness;
  if (v.axiom == "cocycle-condition") {
    const auto [s, t, u] = std::tuple{w.at(0), w.at(1), w.at(2)};
    const auto& a = S.fiber(g.dst(s));
    return a.mul(S.beta(s, t), S.beta(g.mul(s, t), u)) != a.mul(S.alpha(s, S.beta(t, u)), S.beta(s, g.mul(t, u)));
  }
  if (v.axiom == "twisted-action") {
    const auto [s, t, i] = std::tuple{w.at(0), w.at(1), w.at(2)};
    const auto& a = S.fiber(g.dst(s));
    const Vec x = S.fiber(g.src(t)).basis(i);
    return a.mul(S.alpha(s, S.alpha(t, x)), S.beta(s, t)) != a.mul(S.beta(s, t), S.alpha(g.mul(s, t), x));
  }
  if (v.axiom == "normalization-right") return S.beta(w.at(0), g.src(w.at(0))) != S.fiber(g.dst(w.at(0))).one();
  if (v.axiom == "normalization-left") return S.beta(g.dst(w.at(0)), w.at(0)) != S.fiber(g.dst(w.at(0))).one();
  if (v.axiom == "cocycle-invertible") return !invert(S.fiber(g.dst(w.at(0))), S.beta(w.at(0), w.at(1)));
  return false;
}

}  // namespace

TEST(Validate, QuaternionPasses) {
  const auto r = cmd_validate(example_document("quaternion"), "quaternion", kQuiet);
  EXPECT_EQ(r.status(), 0);
  EXPECT_EQ(r.checks.back().name, "crossed-system");
}

TEST(Validate, CorruptedCocycleGivesReplayableTripleWitness) {
  const auto d = corrupted_quaternion();
  const auto r = cmd_validate(d, "bad", kQuiet);
  EXPECT_EQ(r.status(), 1);
  const auto& c = r.checks.back();
  ASSERT_EQ(c.verdict, Verdict::fail);
  ASSERT_FALSE(c.witnesses.empty());
  const auto s = document_system(d);
  bool triple = false;
  for (const auto& w : c.witnesses) {
    EXPECT_TRUE(replays(s, w)) << w.axiom;
    triple = triple || (w.axiom == "cocycle-condition" && w.witness.size() == 3);
  }
  EXPECT_TRUE(triple);
}

TEST(Validate, TruncatedFileIsInputError) {
  const std::string text = emit_document(example_document("quaternion"));
  EXPECT_THROW(parse_document(text.substr(0, text.size() - 20)), InputError);
}

TEST(Validate, EveryEmittedExampleRevalidates) {
  for (const auto& name : example_names()) {
    const auto d = parse_document(emit_document(example_document(name)));
    EXPECT_EQ(cmd_validate(d, name, kQuiet).status(), 0) << name;
  }
}

TEST(Validate, BrokenTowerFailsWithoutThrowing) {
  auto d = example_document("cbrt2");
  auto& t = std::get<TowerSpec>(d.content);
  t.automorphisms[1] = t.automorphisms[0];
  t.automorphisms[1].back() = d.field.from_int(2);
  const auto r = cmd_validate(d, "bad", kQuiet);
  EXPECT_EQ(r.status(), 1);
  EXPECT_EQ(r.checks.back().name, "tower");
}

TEST(Check, NonStrongFailsAtG) {
  const auto r = cmd_check(example_document("non-strong"), "ns", "strongly-graded", kQuiet);
  EXPECT_EQ(r.status(), 1);
  ASSERT_EQ(r.checks[0].witnesses.size(), 1u);
  EXPECT_EQ(r.checks[0].witnesses[0].witness, std::vector<std::size_t>{1});
  // Replay: 1_{R_e} is not in R_g R_g^-1.
  const auto ring = gen_non_strong();
  EXPECT_FALSE(unit_decomposition(ring, object_units(ring), 1).has_value());
}

TEST(Check, Matrix3CrossedProductListsUnits) {
  const auto r = cmd_check(example_document("matrix-3"), "m3", "crossed-product", kQuiet);
  EXPECT_EQ(r.status(), 0);
  EXPECT_EQ(r.checks[0].details.at("units").size(), 9u);
}

TEST(Check, KleinGaloisObjectUnital) {
  const auto r = cmd_check(example_document("klein-galois"), "kg", "object-unital", kQuiet);
  EXPECT_EQ(r.status(), 0);
}

TEST(Check, SkewAndTwisted) {
  EXPECT_EQ(cmd_check(example_document("ff-skew-2-2"), "f", "skew", kQuiet).status(), 0);
  EXPECT_EQ(cmd_check(example_document("ff-skew-2-2"), "f", "twisted", kQuiet).status(), 1);
  EXPECT_EQ(cmd_check(example_document("quaternion"), "q", "twisted", kQuiet).status(), 0);
  EXPECT_EQ(cmd_check(example_document("quaternion"), "q", "skew", kQuiet).status(), 1);
  EXPECT_EQ(cmd_check(example_document("cbrt2"), "c", "skew", kQuiet).status(), 0);
}

TEST(Check, GradingOnGradedDocument) {
  EXPECT_EQ(cmd_check(example_document("zero-fiber-union"), "z", "grading", kQuiet).status(), 0);
}

TEST(Check, UnknownPropertyIsInputError) {
  EXPECT_THROW(cmd_check(example_document("matrix-2"), "m", "commutative", kQuiet), InputError);
}

TEST(Separability, Matrix3Separable) {
  EXPECT_EQ(cmd_separability(example_document("matrix-3"), "m3", {}, kQuiet).status(), 0);
}

TEST(Separability, Gf2C2WitnessReplays) {
  const auto r = cmd_separability(example_document("gf2-c2"), "g", {}, kQuiet);
  EXPECT_EQ(r.status(), 1);
  ASSERT_EQ(r.checks[0].witnesses.size(), 1u);
  EXPECT_EQ(r.checks[0].witnesses[0].message, "trace image = 0");
  // Replay: the trace kills the whole center.
  const auto p = gen_cyclic_group_ring(2, Field::prime(2));
  const auto section = canonical_section(p);
  const auto units = p.object_units();
  for (const auto& z : component_center(p.algebra, units, 0)) {
    EXPECT_TRUE(is_zero_vec(p.algebra.field(), trace(p.algebra, section, 0, z)));
  }
}

TEST(Separability, Cbrt2TrivialIsotropyWithCasimir) {
  SeparabilityFlags f;
  f.construct_casimir = true;
  f.from_casimir = true;
  const auto r = cmd_separability(example_document("cbrt2"), "c", f, kQuiet);
  EXPECT_EQ(r.status(), 0);
  ASSERT_EQ(r.checks.size(), 3u);
  for (const auto& o : r.checks[0].details.at("objects")) EXPECT_EQ(o.at("isotropy"), 1);
}

TEST(Separability, VerifyOnlyUsesDocumentFamily) {
  const auto p = gen_cyclic_group_ring(2);
  auto d = example_document("q-c2");
  d.casimir = casimir_to_entries(p, casimir_construct(p, separability_criterion(p)));
  SeparabilityFlags f;
  f.verify_only = true;
  EXPECT_EQ(cmd_separability(d, "q", f, kQuiet).status(), 0);
  // u_g (x) u_g has the right product but does not commute with u_g.
  TensorElement bad;
  bad.coeff.emplace(ArrowPair{1, 1}, Vec{Field::rational().one()});
  d.casimir = casimir_to_entries(p, CasimirFamily{{0, bad}});
  const auto r = cmd_separability(d, "q", f, kQuiet);
  EXPECT_EQ(r.status(), 1);
  ASSERT_FALSE(r.checks[0].witnesses.empty());
  EXPECT_EQ(r.checks[0].witnesses[0].axiom, "casimir-commutation");
  f.verify_only = false;
  f.from_casimir = true;
  EXPECT_EQ(cmd_separability(d, "q", f, kQuiet).status(), 1);
  d.casimir.clear();
  EXPECT_THROW(cmd_separability(d, "q", SeparabilityFlags{false, true, false}, kQuiet), InputError);
}

TEST(Simplicity, MethodsAndVerdicts) {
  EXPECT_EQ(cmd_simplicity(example_document("quaternion"), "q", "automatic", kQuiet).status(), 0);
  const auto r = cmd_simplicity(example_document("q-c2"), "c", "trace-form", kQuiet);
  EXPECT_EQ(r.status(), 1);
  EXPECT_TRUE(r.checks[0].details.contains("ideal_generator"));
  EXPECT_EQ(cmd_simplicity(example_document("matrix-2-gf2"), "m", "exhaustive", kQuiet).status(), 0);
  EXPECT_THROW(cmd_simplicity(example_document("q-c2"), "c", "guess", kQuiet), InputError);
}

TEST(Report, StructuredRoundTripIsLossless) {
  const std::vector<Report> reports{
      cmd_validate(corrupted_quaternion(), "bad", RunOptions{3, true}),
      cmd_separability(example_document("gf2-c2"), "g", {}, RunOptions{3, true}),
      cmd_check(example_document("matrix-2"), "m", "crossed-product", kQuiet),
  };
  for (const auto& r : reports) {
    const std::string text = render_structured(r);
    const auto back = report_from_json(Json::parse(text));
    EXPECT_EQ(render_structured(back), text);
    EXPECT_EQ(render_text(back), render_text(r));
    EXPECT_EQ(back.status(), r.status());
  }
  EXPECT_THROW(report_from_json(Json::parse(R"({"tool":"other"})")), InputError);
}

TEST(Report, DeterministicWithoutTimings) {
  for (const char* name : {"cbrt2", "q-klein", "non-strong"}) {
    const auto d = example_document(name);
    SeparabilityFlags f;
    f.construct_casimir = !d.is_graded();
    const auto a = render_structured(cmd_separability(d, name, f, kQuiet));
    const auto b = render_structured(cmd_separability(parse_document(emit_document(d)), name, f, kQuiet));
    EXPECT_EQ(a, b) << name;
  }
}

#ifdef GRING_TOOL
namespace {

int run_tool(const std::string& args) {
  const int raw = std::system((std::string(GRING_TOOL) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

TEST(Tool, ExitCodes) {
  const auto dir = std::filesystem::temp_directory_path() / "gring_cli_test";
  std::filesystem::create_directories(dir);
  const std::string q = (dir / "quaternion.json").string();
  const std::string ns = (dir / "non-strong.json").string();
  const std::string rep = (dir / "report.json").string();
  ASSERT_EQ(run_tool("example quaternion --emit " + q), 0);
  ASSERT_EQ(run_tool("example non-strong --emit " + ns), 0);
  EXPECT_EQ(run_tool("validate " + q), 0);
  EXPECT_EQ(run_tool("check " + ns + " --property strongly-graded"), 1);
  EXPECT_EQ(run_tool("check " + q + " --property nonsense"), 2);
  EXPECT_EQ(run_tool("example no-such-example"), 2);
  EXPECT_EQ(run_tool("validate " + (dir / "missing.json").string()), 2);
  {
    std::ifstream in(q);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    std::ofstream out(dir / "trunc.json");
    out << text.substr(0, text.size() / 3);
  }
  EXPECT_EQ(run_tool("validate " + (dir / "trunc.json").string()), 2);
  EXPECT_EQ(run_tool("separability " + q + " --construct-casimir --format structured -o " + rep), 0);
  EXPECT_EQ(run_tool("report " + rep), 0);
  std::filesystem::remove_all(dir);
}
#endif
