#include <gtest/gtest.h>

#include "gring/corpus.hpp"
#include "gring/graded.hpp"

using namespace gring;

namespace {

const Field QQ = Field::rational();

Vec scaled(const Field& f, long num, long den, const Vec& x) {
  return vec_scale(f, f.from_rational(Rational(num, den)), x);
}

}  // namespace

TEST(Grading, DualNumbersOverC2) {
  const auto r = gen_non_strong();
  EXPECT_TRUE(check_grading(r).ok());
  // deg(1) = deg(x) = e is the trivial grading and also valid.
  const auto a = polynomial_quotient_algebra(QQ, int_poly(QQ, {0, 0, 1}));
  EXPECT_TRUE(check_grading(GradedAlgebra(cyclic_group(2), a.table(), {0, 0})).ok());
  // deg(1) = g: 1*1 = 1 should have degree g*g = e.
  const auto bad = check_grading(GradedAlgebra(cyclic_group(2), a.table(), {1, 0}));
  ASSERT_FALSE(bad.ok());
  EXPECT_EQ(bad.violations.front().axiom, "grading");
  EXPECT_EQ(bad.violations.front().witness, (std::vector<std::size_t>{0, 0}));
}

TEST(Grading, NonComposableProductMustVanish) {
  // M_2 graded by two disjoint objects: E11 and E22 at different objects
  // but E12 forced into one of them makes E11*E12 cross components.
  const auto m = matrix_algebra(QQ, 2);
  const auto g = disjoint_union({cyclic_group(1), cyclic_group(1)});
  const auto r = check_grading(GradedAlgebra(g, m.table(), {0, 0, 1, 1}));
  EXPECT_TRUE(r.has("grading"));
  EXPECT_THROW(GradedAlgebra(g, m.table(), {0, 0, 1, 5}), StructuralError);
  EXPECT_THROW(GradedAlgebra(g, m.table(), {0, 0, 1}), StructuralError);
}

TEST(Grading, CrossedProductsAreGraded) {
  EXPECT_TRUE(check_grading(gen_matrix(3).algebra).ok());
  EXPECT_TRUE(check_grading(gen_quaternion().algebra).ok());
  EXPECT_TRUE(check_grading(gen_finite_field_skew(2, 2).algebra).ok());
}

TEST(ObjectUnits, MatrixUnits) {
  const auto p = gen_matrix(3);
  const auto& r = p.algebra;
  const auto units = object_units(r);
  ASSERT_TRUE(units.ok());
  const auto& g = r.groupoid();
  for (Arrow e : g.objects()) EXPECT_EQ(units.at(e), r.basis(e));  // E_ee sits at index of (e,e)
  const std::vector<Arrow> first_two{g.objects()[0], g.objects()[1]};
  EXPECT_TRUE(check_unit_sum(r, units, first_two).ok());
  // Oracle: the partial identity diag(1, 1, 0) in matrix-unit coordinates.
  const auto sub = restrict_to_objects(g, first_two);
  Vec expected = r.zero();
  expected[0] = expected[4] = QQ.one();
  EXPECT_EQ(*subring_identity(r, sub.embedding), expected);
  EXPECT_EQ(p.object_units().units, units.units);
}

TEST(ObjectUnits, CrossedProductFiberUnits) {
  const auto p = gen_finite_field_skew(2, 2);
  const auto units = object_units(p.algebra);
  ASSERT_TRUE(units.ok());
  EXPECT_EQ(units.at(0), p.u(0));
}

TEST(ObjectUnits, ZeroComponentIsNamed) {
  const auto r = gen_zero_fiber_union();
  const auto units = object_units(r);
  EXPECT_FALSE(units.ok());
  const auto* v = units.report.find("zero-component");
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->witness, std::vector<std::size_t>{r.groupoid().objects()[1]});
}

TEST(ObjectUnits, NonUnitalComponent) {
  // Q with zero multiplication at the single object.
  StructureConstants t(QQ, 1);
  const auto units = object_units(GradedAlgebra(cyclic_group(1), t, {0}));
  EXPECT_TRUE(units.report.has("unital-component"));
}

TEST(Support, WideWhenAllUnitsNonzero) {
  const auto p = gen_matrix(2);
  const auto s = support_subgroupoid(p.algebra, object_units(p.algebra));
  EXPECT_TRUE(s.wide());
  EXPECT_EQ(s.support.groupoid, p.algebra.groupoid());
}

TEST(Support, UnionWithZeroFiber) {
  const auto r = gen_zero_fiber_union();
  const auto units = object_units(r);
  const auto s = support_subgroupoid(r, units);
  EXPECT_TRUE(s.report.ok());
  EXPECT_EQ(s.dropped_objects, std::vector<Arrow>{2});
  EXPECT_EQ(s.support.embedding, (std::vector<Arrow>{0, 1}));
  const auto restricted = restrict_to_support(r, units);
  EXPECT_EQ(restricted.warnings.size(), 1u);
  EXPECT_EQ(restricted.algebra.groupoid().composition(), cyclic_group(2).composition());
  EXPECT_TRUE(object_units(restricted.algebra).ok());
}

TEST(Support, PairGroupoidWithZeroFiber) {
  const auto r = gen_pair_with_zero_fiber();
  const auto s = support_subgroupoid(r, object_units(r));
  EXPECT_EQ(s.support.groupoid, pair_groupoid(2));
  EXPECT_EQ(s.dropped_objects, std::vector<Arrow>{8});
}

TEST(StrongGrading, Examples) {
  const auto p = gen_quaternion();
  const auto sq = is_strongly_graded(p.algebra, p.object_units());
  EXPECT_TRUE(sq.ok());
  const auto ns = gen_non_strong();
  const auto sn = is_strongly_graded(ns, object_units(ns));
  EXPECT_FALSE(sn.ok());
  EXPECT_EQ(sn.failing(), std::vector<Arrow>{1});
  const auto c2 = gen_cyclic_group_ring(2);
  EXPECT_TRUE(is_strongly_graded(c2.algebra, c2.object_units()).ok());
  const auto uf = gen_unit_free_strong();
  EXPECT_TRUE(is_strongly_graded(uf, object_units(uf)).ok());
}

TEST(StrongGrading, SectionSumsToUnit) {
  const auto p = gen_matrix(3);
  const auto units = p.object_units();
  const auto res = is_strongly_graded(p.algebra, units);
  for (Arrow s = 0; s < p.algebra.groupoid().size(); ++s) {
    Vec sum = p.algebra.zero();
    for (const auto& pr : res.section.at(s)) {
      EXPECT_TRUE(p.algebra.is_homogeneous_of(pr.u, s));
      EXPECT_TRUE(p.algebra.is_homogeneous_of(pr.v, p.algebra.groupoid().inv(s)));
      sum = vec_add(QQ, sum, p.algebra.mul(pr.u, pr.v));
    }
    EXPECT_EQ(sum, units.at(p.algebra.groupoid().dst(s)));
  }
}

TEST(ObjectInverse, Examples) {
  const auto p = gen_matrix(2);
  const auto& r = p.algebra;
  const auto units = p.object_units();
  for (Arrow e : r.groupoid().objects()) EXPECT_EQ(*object_inverse(r, units, units.at(e), e), units.at(e));
  EXPECT_EQ(*object_inverse(r, units, r.basis(1), 1), r.basis(2));

  const auto q = gen_quaternion();
  const auto qu = q.object_units();
  for (Arrow s = 0; s < 4; ++s) {
    const Vec v1 = *object_inverse(q.algebra, qu, q.u(s), s);
    const Vec two_u = scaled(QQ, 2, 1, q.u(s));
    EXPECT_EQ(*object_inverse(q.algebra, qu, two_u, s), scaled(QQ, 1, 2, v1));
  }
  EXPECT_THROW(object_inverse(r, units, r.basis(1), 2), PreconditionError);
  EXPECT_FALSE(object_inverse(r, units, r.zero(), 1).has_value());
}

TEST(ObjectCrossedProduct, MatrixUnits) {
  const auto p = gen_matrix(3);
  const auto cert = is_object_crossed_product(p.algebra, p.object_units());
  EXPECT_EQ(cert.verdict, Verdict::pass);
  for (Arrow s = 0; s < 9; ++s) EXPECT_EQ(cert.units.at(s), p.algebra.basis(s));
}

TEST(ObjectCrossedProduct, CorpusFindsCanonicalUnits) {
  for (const auto& p : {gen_quaternion(), gen_finite_field_skew(2, 2), gen_finite_field_skew(3, 2)}) {
    const auto cert = is_object_crossed_product(p.algebra, p.object_units());
    EXPECT_EQ(cert.verdict, Verdict::pass);
    for (Arrow s = 0; s < p.algebra.groupoid().size(); ++s) EXPECT_EQ(cert.units.at(s), p.u(s));
  }
}

TEST(ObjectCrossedProduct, UnitFreeIsNotCertified) {
  const auto r = gen_unit_free_strong();
  const auto cert = is_object_crossed_product(r, object_units(r), 1, 64);
  EXPECT_EQ(cert.verdict, Verdict::not_certified);
  EXPECT_EQ(cert.uncertified, std::vector<Arrow>{1});
  const auto ns = gen_non_strong();
  EXPECT_EQ(is_object_crossed_product(ns, object_units(ns), 1, 64).verdict, Verdict::not_certified);
}

TEST(Projection, DegreeZeroPart) {
  const auto p = gen_quaternion();
  const auto& r = p.algebra;
  EXPECT_EQ(project_to_R0(r, p.u(1)), r.zero());
  EXPECT_EQ(project_to_R0(r, p.u(0)), p.u(0));
  Vec mixed = vec_add(QQ, scaled(QQ, 3, 1, p.u(0)), p.u(2));
  EXPECT_EQ(project_to_R0(r, mixed), scaled(QQ, 3, 1, p.u(0)));
  EXPECT_TRUE(verify_R0_splitting(r).ok());
  EXPECT_TRUE(verify_R0_splitting(gen_matrix(3).algebra).ok());
}

// ---------------------------------------------------------------------------

TEST(GradedProperties, DegreesMultiplyAndUnitsAreOrthogonal) {
  for (const auto& p : {gen_matrix(3), gen_quaternion(), gen_finite_field_skew(2, 3)}) {
    const auto& r = p.algebra;
    const auto& g = r.groupoid();
    for (std::size_t i = 0; i < r.dim(); ++i) {
      for (std::size_t j = 0; j < r.dim(); ++j) {
        const Vec prod = r.mul(r.basis(i), r.basis(j));
        if (!g.composable(r.degree(i), r.degree(j))) {
          EXPECT_TRUE(is_zero_vec(r.field(), prod));
        } else {
          EXPECT_TRUE(r.is_homogeneous_of(prod, g.mul(r.degree(i), r.degree(j))));
        }
      }
    }
    const auto units = object_units(r);
    for (Arrow e : g.objects()) {
      for (Arrow f : g.objects()) {
        const Vec ef = r.mul(units.at(e), units.at(f));
        EXPECT_EQ(ef, e == f ? units.at(e) : r.zero());
      }
    }
  }
}

TEST(GradedProperties, StrongGradingGivesFullComponentProducts) {
  for (const auto& p : {gen_matrix(3), gen_quaternion(), gen_finite_field_skew(3, 2)}) {
    const auto& r = p.algebra;
    const auto& g = r.groupoid();
    ASSERT_TRUE(is_strongly_graded(r, p.object_units()).ok());
    for (const auto& [s, t] : g.composable_pairs()) {
      std::vector<Vec> prods;
      for (auto i : r.component(s))
        for (auto j : r.component(t)) prods.push_back(r.mul(r.basis(i), r.basis(j)));
      EXPECT_EQ(echelon_basis(r.field(), prods, r.dim()).size(), r.component(g.mul(s, t)).size());
    }
  }
}

TEST(GradedProperties, DegreeIsHomomorphismOnCertifiedUnits) {
  const auto p = gen_finite_field_skew(2, 3);
  const auto& r = p.algebra;
  const auto& g = r.groupoid();
  const auto units = p.object_units();
  const auto cert = is_object_crossed_product(r, units, 3);
  ASSERT_EQ(cert.verdict, Verdict::pass);
  for (const auto& [s, t] : g.composable_pairs()) {
    const Vec prod = r.mul(cert.units.at(s), cert.units.at(t));
    EXPECT_TRUE(r.is_homogeneous_of(prod, g.mul(s, t)));
    EXPECT_TRUE(object_inverse(r, units, prod, g.mul(s, t)).has_value());
  }
  // Kernel: object-invertible elements of degree zero are the units of R_e.
  for (Arrow e : g.objects()) {
    for (auto i : r.component(e)) {
      const auto inv = object_inverse(r, units, r.basis(i), e);
      const auto fiber_inv = invert(component_algebra(r, e, units.at(e)), r.local(e, r.basis(i)));
      EXPECT_EQ(inv.has_value(), fiber_inv.has_value());
    }
  }
}
