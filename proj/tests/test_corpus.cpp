#include <gtest/gtest.h>

#include "gring/corpus.hpp"
#include "gring/separability.hpp"

using namespace gring;

namespace {

const Field QQ = Field::rational();

Elem q(long n, long d = 1) { return QQ.from_rational(Rational(n, d)); }

Poly rat_poly(std::initializer_list<std::pair<long, long>> c) {
  Poly p;
  for (auto [n, d] : c) p.push_back(q(n, d));
  return p;
}

TowerSpec cbrt2_spec() { return std::get<TowerSpec>(bundled_document("cbrt2").content); }

}  // namespace

TEST(Generators, MatrixSizes) {
  EXPECT_EQ(gen_matrix(1).algebra.dim(), 1u);
  EXPECT_EQ(gen_matrix(2).algebra.dim(), 4u);
  EXPECT_EQ(gen_matrix(3, Field::prime(2)).algebra.dim(), 9u);
  EXPECT_THROW(gen_matrix(0), Error);
}

TEST(Generators, FiniteFieldSkewSizes) {
  EXPECT_EQ(gen_finite_field_skew(2, 2).algebra.dim(), 4u);
  EXPECT_EQ(gen_finite_field_skew(3, 1).algebra.dim(), 1u);
  EXPECT_EQ(gen_finite_field_skew(2, 3).algebra.dim(), 9u);
  EXPECT_THROW(gen_finite_field_skew(4, 2), Error);
  EXPECT_THROW(gen_finite_field_skew(2, 17), Error);
}

TEST(Generators, QuaternionFacts) {
  const auto p = gen_quaternion();
  const auto a = as_unital_algebra(p.algebra, p.object_units());
  // basis order e, a, b, c = 1, i, j, k
  EXPECT_EQ(a.mul(a.basis(1), a.basis(1)), vec_scale(QQ, q(-1), a.one()));
  EXPECT_EQ(center(a).dimension(), 1u);
  EXPECT_EQ(is_simple(a).verdict, Verdict::pass);
}

TEST(Generators, NonStrong) {
  const auto r = gen_non_strong();
  const auto units = object_units(r);
  EXPECT_TRUE(units.ok());
  const auto strong = is_strongly_graded(r, units);
  EXPECT_EQ(strong.failing(), std::vector<Arrow>{1});
  EXPECT_EQ(is_object_crossed_product(r, units).verdict, Verdict::not_certified);
}

TEST(Tower, Cbrt2Structure) {
  const auto t = bundled_tower("cbrt2");
  EXPECT_TRUE(t.report.ok());
  EXPECT_EQ(t.big.irreducibility(), Irreducibility::yes);
  ASSERT_EQ(t.groupoid.size(), 9u);
  // Same arrow layout as the pair groupoid on three points.
  const auto pair = pair_groupoid(3);
  for (Arrow a = 0; a < 9; ++a) {
    EXPECT_EQ(t.groupoid.src(a), pair.src(a));
    EXPECT_EQ(t.groupoid.dst(a), pair.dst(a));
    EXPECT_EQ(t.groupoid.inv(a), pair.inv(a));
  }
  EXPECT_EQ(t.groupoid.composition(), pair.composition());
  for (const auto& f : t.subfields) EXPECT_EQ(f.dim(), 3u);
}

TEST(Tower, Cbrt2GeneratorsCubeToTwo) {
  // Direct arithmetic in N, independent of the tower loader.
  const Field n = extension_field(QQ, int_poly(QQ, {108, 0, 0, 0, 0, 0, 1}));
  const std::vector<Poly> thetas{rat_poly({{0, 1}, {0, 1}, {0, 1}, {0, 1}, {1, 18}}),
                                 rat_poly({{0, 1}, {-1, 2}, {0, 1}, {0, 1}, {-1, 36}}),
                                 rat_poly({{0, 1}, {1, 2}, {0, 1}, {0, 1}, {-1, 36}})};
  for (auto th : thetas) {
    th.resize(6, QQ.zero());
    const Elem t = n.from_coefficients(th);
    EXPECT_EQ(n.mul(t, n.mul(t, t)), n.from_int(2));
  }
  const auto spec = cbrt2_spec();
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(spec.conjugates[i][1], [&] {
      Poly p = thetas[i];
      poly::trim(QQ, p);
      return p;
    }());
}

TEST(Tower, Cbrt2Crossed) {
  const auto p = gen_cbrt2();
  EXPECT_EQ(p.algebra.dim(), 27u);
  const auto rep = separability_criterion(p);
  EXPECT_EQ(rep.verdict, Verdict::pass);
  for (const auto& o : rep.objects) EXPECT_EQ(o.isotropy_size, 1u);
}

TEST(Tower, KleinGalois) {
  const auto t = bundled_tower("klein-galois");
  EXPECT_EQ(t.big.irreducibility(), Irreducibility::asserted);
  EXPECT_EQ(t.groupoid.size(), 4u);
  EXPECT_EQ(t.groupoid.objects().size(), 1u);
  const auto p = gen_klein_galois();
  EXPECT_EQ(p.algebra.dim(), 16u);
  const auto a = as_unital_algebra(p.algebra, p.object_units());
  const auto z = center(a);
  EXPECT_EQ(z.dimension(), 1u);
  EXPECT_EQ(z.basis()[0], [&] {
    Vec one = a.one();
    return vec_scale(QQ, QQ.inv(one[0]), one);
  }());
  EXPECT_EQ(separability_criterion(p).verdict, Verdict::pass);
}

TEST(Tower, UnassertedUncertifiableModulusRejected) {
  auto spec = std::get<TowerSpec>(bundled_document("klein-galois").content);
  spec.asserted_irreducible = false;
  EXPECT_THROW(load_tower(QQ, spec), Error);
}

TEST(Tower, BadAutomorphismRejected) {
  auto spec = cbrt2_spec();
  spec.automorphisms[1] = rat_poly({{0, 1}, {2, 1}});  // x -> 2x
  try {
    load_tower(QQ, spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("automorphism"), std::string::npos);
  }
}

TEST(Tower, NonClosedSpanRejected) {
  auto spec = cbrt2_spec();
  spec.conjugates[0][2] = rat_poly({{0, 1}, {1, 1}});  // x does not belong with theta_0
  try {
    load_tower(QQ, spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("subfield-closure"), std::string::npos);
  }
}

TEST(Tower, MissingAutomorphismBreaksGroupoid) {
  auto spec = cbrt2_spec();
  // Keep only identity and x -> zeta x: restrictions no longer reach every pair
  // with inverses.
  spec.automorphisms = {spec.automorphisms[0], spec.automorphisms[2]};
  EXPECT_THROW(load_tower(QQ, spec), Error);
}

TEST(Examples, EveryNamedExampleValidates) {
  for (const auto& name : example_names()) {
    const auto d = example_document(name);
    if (d.is_graded()) {
      const auto r = build_graded(d.field, document_groupoid(d), std::get<GradedSpec>(d.content));
      EXPECT_TRUE(check_grading(r).ok()) << name;
    } else {
      EXPECT_TRUE(validate_crossed_system(document_system(d)).ok()) << name;
    }
  }
}

TEST(Examples, UnknownNamesRejected) {
  for (const char* bad : {"matrix-0", "matrix-x", "ff-skew-4-2", "q-c", "gf4-c2", "nothing"}) {
    EXPECT_THROW(example_document(bad), InputError) << bad;
  }
}

TEST(Examples, DocumentsRebuildTheGenerators) {
  EXPECT_TRUE(document_system(example_document("matrix-3")) == gen_matrix(3).system);
  EXPECT_TRUE(document_system(example_document("ff-skew-2-3")) == finite_field_skew_system(2, 3));
  EXPECT_TRUE(document_system(example_document("quaternion")) == quaternion_system());
  EXPECT_TRUE(document_system(example_document("gf2-c2")) == gen_cyclic_group_ring(2, Field::prime(2)).system);
}
