#include <gtest/gtest.h>

#include "gring/corpus.hpp"
#include "gring/io.hpp"

using namespace gring;

TEST(Io, BundledDataIsCanonical) {
  for (const char* text : {data::cbrt2, data::klein_galois}) {
    EXPECT_EQ(emit_document(parse_document(text)), std::string(text));
  }
}

TEST(Io, EmittedExamplesRoundTripBitExactly) {
  for (const auto& name : example_names()) {
    const std::string once = emit_document(example_document(name));
    EXPECT_EQ(emit_document(parse_document(once)), once) << name;
  }
}

TEST(Io, RationalsAsStrings) {
  const Field qq = Field::rational();
  const Elem x = qq.from_rational(Rational(-3, 4));
  EXPECT_EQ(elem_to_json(qq, x), Json("-3/4"));
  EXPECT_EQ(elem_from_json(qq, Json("-6/8")), x);
  EXPECT_EQ(elem_from_json(qq, Json(5)), qq.from_int(5));
  EXPECT_THROW(elem_from_json(qq, Json("1/0x")), InputError);
  EXPECT_THROW(elem_from_json(Field::prime(5), Json("1/2")), InputError);
}

TEST(Io, ExtensionFieldElements) {
  const Field gf2 = Field::prime(2);
  const Field gf4 = extension_field(gf2, find_irreducible(gf2, 2));
  const Elem w = gf4.generator();
  EXPECT_EQ(elem_to_json(gf4, w), Json::parse(R"(["0","1"])"));
  EXPECT_EQ(elem_from_json(gf4, elem_to_json(gf4, w)), w);
  const Json fj = field_to_json(gf4);
  EXPECT_TRUE(field_from_json(fj) == gf4);
}

TEST(Io, MalformedDocumentsRejected) {
  EXPECT_THROW(parse_document("{"), InputError);
  EXPECT_THROW(parse_document("[]"), InputError);
  EXPECT_THROW(parse_document(R"({"format":"gring-definition","version":1,"field":"rational"})"), InputError);
  EXPECT_THROW(parse_document(R"({"format":"gring-definition","version":2,"field":"rational"})"), InputError);
  EXPECT_THROW(parse_document(R"({"format":"gring-definition","version":1,"field":{"prime":4},
      "groupoid":{"pair":2},"system":{"specialize":"groupoid-ring","fiber":{"matrix":1}}})"),
               InputError);
  EXPECT_THROW(parse_document(R"({"format":"gring-definition","version":1,"field":"rational",
      "groupoid":{"pair":2},"system":{"specialize":"groupoid-ring","fiber":{"matrix":1}},"extra":1})"),
               InputError);
  const std::string text = emit_document(example_document("quaternion"));
  EXPECT_THROW(parse_document(text.substr(0, text.size() / 2)), InputError);
}

TEST(Io, CrossReferencesResolve) {
  auto d = parse_document(R"({"format":"gring-definition","version":1,"field":"rational",
      "groupoid":{"group":{"cyclic":2}},
      "system":{"specialize":"twisted","fiber":{"matrix":1},
                "cocycle":[{"pair":["g","h"],"value":["-1"]}]}})");
  EXPECT_THROW(document_system(d), InputError);
  d = parse_document(R"({"format":"gring-definition","version":1,"field":"rational",
      "groupoid":{"group":{"cyclic":2}},
      "system":{"specialize":"twisted","fiber":{"matrix":1},
                "cocycle":[{"pair":["g","g"],"value":["-1"]}]}})");
  const auto s = document_system(d);
  EXPECT_EQ(s.beta(1, 1), Vec{Field::rational().from_int(-1)});
  EXPECT_EQ(s.beta(0, 1), Vec{Field::rational().one()});
}

TEST(Io, MissingCocycleEntriesRejected) {
  const auto d = parse_document(R"({"format":"gring-definition","version":1,"field":"rational",
      "groupoid":{"group":"klein-four"},
      "system":{"specialize":"twisted","fiber":{"matrix":1},
                "cocycle":[{"pair":["a","a"],"value":["-1"]}]}})");
  EXPECT_THROW(document_system(d), InputError);
}

TEST(Io, ExplicitArrowTablesRoundTrip) {
  const auto g = disjoint_union({cyclic_group(2), pair_groupoid(2)});
  GroupoidSpec s;
  s.kind = GroupoidSpec::Kind::arrows;
  s.explicit_table = g;
  const auto back = groupoid_from_json(groupoid_to_json(s));
  EXPECT_TRUE(build_groupoid(back) == g);
}

TEST(Io, CasimirBlockRoundTrips) {
  const auto p = gen_cyclic_group_ring(2);
  auto d = example_document("q-c2");
  CasimirFamily x;
  TensorElement t;
  t.coeff.emplace(ArrowPair{0, 0}, Vec{Field::rational().from_rational(Rational(1, 2))});
  t.coeff.emplace(ArrowPair{1, 1}, Vec{Field::rational().from_rational(Rational(1, 2))});
  x.emplace(0, t);
  d.casimir = casimir_to_entries(p, x);
  const auto back = parse_document(emit_document(d));
  EXPECT_EQ(casimir_from_document(p, back), x);
}

TEST(Io, GradedDocuments) {
  const auto d = example_document("non-strong");
  const auto r = build_graded(d.field, document_groupoid(d), std::get<GradedSpec>(d.content));
  EXPECT_EQ(r.degree(1), 1u);
  EXPECT_EQ(r.dim(), 2u);
}
