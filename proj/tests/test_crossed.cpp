#include <gtest/gtest.h>

#include "gring/corpus.hpp"
#include "gring/crossed.hpp"

using namespace gring;

namespace {

const Field QQ = Field::rational();

// Corrupts one cocycle entry and returns the modified system.
CrossedSystem with_beta(const CrossedSystem& s, ArrowPair at, Vec value) {
  auto beta = s.cocycle();
  beta[at] = std::move(value);
  return CrossedSystem(s.groupoid(), s.fibers(), s.action(), beta);
}

// Independent cocycle check: evaluates the cocycle identity directly on
// +-1 scalars for all 64 triples of the Klein four group.
std::vector<std::vector<std::size_t>> scalar_cocycle_failures(const int beta[4][4]) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t t = 0; t < 4; ++t)
      for (std::size_t u = 0; u < 4; ++u) {
        if (beta[s][t] * beta[s ^ t][u] != beta[t][u] * beta[s][t ^ u]) out.push_back({s, t, u});
      }
  return out;
}

// Hamilton's table for 1, i, j, k written out by hand.
StructureConstants hamilton() {
  const char* table[4][4] = {{"1", "i", "j", "k"}, {"i", "-1", "k", "-j"}, {"j", "-k", "-1", "i"}, {"k", "j", "-i", "-1"}};
  const std::string names = "1ijk";
  StructureConstants t(QQ, 4);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) {
      const std::string e = table[x][y];
      const bool neg = e[0] == '-';
      t.add_term(x, y, names.find(e.back()), QQ.from_int(neg ? -1 : 1));
    }
  return t;
}

}  // namespace

TEST(CrossedSystem, FrobeniusOnGf4Validates) {
  const auto s = finite_field_skew_system(2, 2);
  EXPECT_TRUE(validate_crossed_system(s).ok());
  // alpha_g: 1 -> 1, w -> w^2 = w + 1.
  const Field gf2 = Field::prime(2);
  Matrix expected(gf2, 2, 2);
  expected(0, 0) = gf2.one();
  expected(0, 1) = gf2.one();
  expected(1, 1) = gf2.one();
  EXPECT_EQ(s.action(1), expected);
}

TEST(CrossedSystem, QuaternionCocycleValidates) {
  const int beta[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  EXPECT_TRUE(scalar_cocycle_failures(beta).empty());
  const auto s = quaternion_system();
  EXPECT_TRUE(validate_crossed_system(s).ok());
  EXPECT_EQ(s.groupoid().composable_triples().size(), 64u);
}

TEST(CrossedSystem, FlippedQuaternionSignIsReported) {
  int beta[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  beta[1][2] = -1;  // beta(a, b)
  const auto expected = scalar_cocycle_failures(beta);
  ASSERT_FALSE(expected.empty());
  const auto s = with_beta(quaternion_system(), {1, 2}, Vec{QQ.from_int(-1)});
  const auto r = validate_crossed_system(s);
  std::vector<std::vector<std::size_t>> reported;
  for (const auto& v : r.violations) {
    EXPECT_EQ(v.axiom, "cocycle-condition");
    reported.push_back(v.witness);
  }
  EXPECT_EQ(reported, expected);
}

TEST(CrossedSystem, ShapeErrorsAreStructural) {
  const auto s = quaternion_system();
  auto beta = s.cocycle();
  beta[{1, 2}] = Vec{QQ.one(), QQ.one()};
  EXPECT_THROW(CrossedSystem(s.groupoid(), s.fibers(), s.action(), beta), StructuralError);
  auto action = s.action();
  action.pop_back();
  EXPECT_THROW(CrossedSystem(s.groupoid(), s.fibers(), action, s.cocycle()), StructuralError);
  auto missing = s.cocycle();
  missing.erase({1, 2});
  EXPECT_THROW(CrossedSystem(s.groupoid(), s.fibers(), s.action(), missing), StructuralError);
  // Normalised entries are filled in.
  std::map<ArrowPair, Vec> core;
  for (const auto& [k, v] : s.cocycle())
    if (!s.groupoid().is_object(k.first) && !s.groupoid().is_object(k.second)) core[k] = v;
  EXPECT_EQ(CrossedSystem(s.groupoid(), s.fibers(), s.action(), core), s);
  EXPECT_THROW(s.beta(0, 9), std::exception);
}

TEST(CrossedSystem, NonComposableBetaLookupIsAnError) {
  const auto s = groupoid_ring(pair_groupoid(2), field_as_algebra(QQ));
  EXPECT_THROW(s.beta(1, 1), PreconditionError);  // (1,2)(1,2) undefined
}

TEST(CrossedProduct, MatrixRingTable) {
  const auto s = groupoid_ring(pair_groupoid(3), field_as_algebra(QQ));
  const auto p = build_crossed_product(s);
  EXPECT_EQ(p.algebra.dim(), 9u);
  EXPECT_EQ(p.algebra.table(), matrix_algebra(QQ, 3).table());
}

TEST(CrossedProduct, QuaternionRelations) {
  const auto p = gen_quaternion();
  const auto& r = p.algebra;
  const Vec i = p.u(1), j = p.u(2), k = p.u(3), one = p.u(0);
  const Vec minus_one = vec_scale(QQ, QQ.from_int(-1), one);
  EXPECT_EQ(r.mul(i, i), minus_one);
  EXPECT_EQ(r.mul(j, j), minus_one);
  EXPECT_EQ(r.mul(k, k), minus_one);
  EXPECT_EQ(r.mul(i, j), k);
  EXPECT_EQ(r.mul(j, i), vec_scale(QQ, QQ.from_int(-1), k));
  EXPECT_EQ(r.mul(r.mul(i, j), k), minus_one);
}

TEST(CrossedProduct, SkewGf4TableMatchesDirectArithmetic) {
  // Oracle: elements a + b u of GF(4) x C2 multiplied with field arithmetic,
  // u c = c^2 u and u^2 = 1.
  const Field gf2 = Field::prime(2);
  const auto p = gen_finite_field_skew(2, 2);
  const Field gf4 = extension_field(gf2, find_irreducible(gf2, 2));
  auto to_field = [&](const Vec& coords) { return gf4.from_coefficients(Poly{coords[0], coords[1]}); };
  auto frob = [&](const Elem& c) { return gf4.mul(c, c); };
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = 0; y < 4; ++y) {
      const Arrow s = x / 2, t = y / 2;
      const Elem a = to_field(unit_vec(gf2, 2, x % 2));
      const Elem b = to_field(unit_vec(gf2, 2, y % 2));
      const Elem c = gf4.mul(a, s ? frob(b) : b);
      const Arrow st = s ^ t;
      const Vec built = p.algebra.mul(p.algebra.basis(x), p.algebra.basis(y));
      Vec expected = p.algebra.zero();
      const Poly cc = gf4.coefficients(c);
      for (std::size_t k = 0; k < cc.size(); ++k) expected[2 * st + k] = cc[k];
      EXPECT_EQ(built, expected) << x << "," << y;
    }
  }
  EXPECT_EQ(p.algebra.dim(), 4u);
}

TEST(CrossedProduct, RefusesInvalidSystem) {
  const auto s = with_beta(quaternion_system(), {1, 2}, Vec{QQ.from_int(-1)});
  EXPECT_THROW(build_crossed_product(s), PreconditionError);
}

TEST(Specialize, GroupoidRingIsTrivial) {
  const auto s = groupoid_ring(pair_groupoid(3), field_as_algebra(QQ));
  for (Arrow a = 0; a < 9; ++a) EXPECT_EQ(s.action(a), Matrix::identity(QQ, 1));
  for (const auto& [k, v] : s.cocycle()) EXPECT_EQ(v, Vec{QQ.one()});
}

TEST(Specialize, TwistedRejectsNonCentralCocycle) {
  const auto m2 = matrix_algebra(QQ, 2);
  std::map<ArrowPair, Vec> beta;
  beta[{1, 1}] = vec_add(QQ, m2.basis(1), m2.basis(2));
  try {
    twisted_system(cyclic_group(2), m2, beta);
    FAIL() << "accepted a non-central cocycle";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("(g, g)"), std::string::npos);
  }
  EXPECT_NO_THROW(twisted_system(klein_four_group(), field_as_algebra(QQ), quaternion_cocycle()));
}

TEST(Extraction, MatrixUnits) {
  const auto m = matrix_algebra(QQ, 2);
  const GradedAlgebra r(pair_groupoid(2), m.table(), {0, 1, 2, 3});
  const auto units = object_units(r);
  std::map<Arrow, Vec> u, v;
  for (Arrow s = 0; s < 4; ++s) {
    u[s] = r.basis(s);
    v[s] = r.basis(r.groupoid().inv(s));
  }
  const auto res = extract_crossed_system(r, units, u, v);
  EXPECT_EQ(res.system, groupoid_ring(pair_groupoid(2), field_as_algebra(QQ)));
  EXPECT_EQ(res.product.algebra.table(), m.table());
}

TEST(Extraction, QuaternionsWithIJ) {
  // Rational quaternions from their Hamilton table, graded by Klein four.
  const GradedAlgebra r(klein_four_group(), hamilton(), {0, 1, 2, 3});
  const auto units = object_units(r);
  std::map<Arrow, Vec> u, v;
  for (Arrow s = 0; s < 4; ++s) {
    u[s] = r.basis(s);
    v[s] = *object_inverse(r, units, u[s], s);
  }
  const auto res = extract_crossed_system(r, units, u, v);
  EXPECT_EQ(res.system.cocycle(), quaternion_cocycle());
}

TEST(Extraction, RecoversBuiltSystem) {
  for (const auto& s : {quaternion_system(), finite_field_skew_system(2, 3), finite_field_skew_system(3, 2)}) {
    const auto p = build_crossed_product(s);
    std::map<Arrow, Vec> u, v;
    const auto units = p.object_units();
    for (Arrow a = 0; a < s.groupoid().size(); ++a) {
      u[a] = p.u(a);
      v[a] = *object_inverse(p.algebra, units, u[a], a);
    }
    const auto res = extract_crossed_system(p.algebra, units, u, v);
    EXPECT_EQ(res.system.action(), s.action());
    EXPECT_EQ(res.system.cocycle(), s.cocycle());
  }
}

TEST(Extraction, RejectsNonInvertibleUnit) {
  const auto p = gen_cyclic_group_ring(2);
  const auto units = p.object_units();
  std::map<Arrow, Vec> u{{0, p.u(0)}, {1, p.algebra.zero()}}, v{{0, p.u(0)}, {1, p.u(1)}};
  EXPECT_THROW(extract_crossed_system(p.algebra, units, u, v), PreconditionError);
}

TEST(Coboundary, TrivialTwistIsIdentity) {
  const auto s = finite_field_skew_system(2, 2);
  EXPECT_EQ(coboundary_twist(s, {}), s);
}

TEST(Coboundary, SignTwistOnC2) {
  const auto s = groupoid_ring(cyclic_group(2), field_as_algebra(QQ));
  const auto t = coboundary_twist(s, {{1, Vec{QQ.from_int(-1)}}});
  EXPECT_TRUE(validate_crossed_system(t).ok());
  EXPECT_EQ(t.beta(1, 1), Vec{QQ.one()});
}

TEST(Coboundary, MatchesCoboundaryFormula) {
  // beta'_{s,t} = c_s alpha_s(c_t) beta_{s,t} c_st^-1 and
  // alpha'_s(a) = c_s alpha_s(a) c_s^-1.
  const auto s = finite_field_skew_system(2, 2);
  const auto& a = s.fiber(0);
  const Vec omega = a.basis(1);
  const std::map<Arrow, Vec> c{{0, a.one()}, {1, omega}};
  const auto t = coboundary_twist(s, c);
  EXPECT_TRUE(validate_crossed_system(t).ok());
  for (const auto& [x, y] : s.groupoid().composable_pairs()) {
    const Arrow xy = s.groupoid().mul(x, y);
    const Vec expected = a.mul(a.mul(a.mul(c.at(x), s.alpha(x, c.at(y))), s.beta(x, y)), *invert(a, c.at(xy)));
    EXPECT_EQ(t.beta(x, y), expected);
  }
  for (Arrow x = 0; x < 2; ++x)
    for (std::size_t i = 0; i < 2; ++i) {
      const Vec expected = a.mul(a.mul(c.at(x), s.alpha(x, a.basis(i))), *invert(a, c.at(x)));
      EXPECT_EQ(t.alpha(x, a.basis(i)), expected);
    }
  EXPECT_THROW(coboundary_twist(s, {{1, a.zero()}}), PreconditionError);
}

// ---------------------------------------------------------------------------

TEST(CrossedProperties, BuiltProductsAreStronglyGradedObjectUnital) {
  for (const auto& s : {quaternion_system(), finite_field_skew_system(2, 2), finite_field_skew_system(3, 2),
                        groupoid_ring(pair_groupoid(3), field_as_algebra(Field::prime(2)))}) {
    const auto p = build_crossed_product(s);
    EXPECT_TRUE(check_grading(p.algebra).ok());
    const auto units = object_units(p.algebra);
    ASSERT_TRUE(units.ok());
    EXPECT_EQ(units.units, p.object_units().units);
    EXPECT_TRUE(is_strongly_graded(p.algebra, units).ok());
  }
}

TEST(CrossedProperties, CorruptedCocycleBreaksAssociativity) {
  const auto s = with_beta(quaternion_system(), {1, 2}, Vec{QQ.from_int(-1)});
  const auto p = build_crossed_product_unchecked(s);
  EXPECT_TRUE(check_grading(p.algebra).has("associativity"));
  const auto s2 = with_beta(finite_field_skew_system(3, 2), {1, 1}, Vec{Field::prime(3).zero(), Field::prime(3).one()});
  EXPECT_TRUE(validate_crossed_system(s2).has("cocycle-condition"));
  EXPECT_TRUE(check_grading(build_crossed_product_unchecked(s2).algebra).has("associativity"));
}

TEST(CrossedProperties, SkewUnitsMultiply) {
  for (const auto& s : {finite_field_skew_system(2, 3), groupoid_ring(pair_groupoid(3), field_as_algebra(QQ))}) {
    const auto p = build_crossed_product(s);
    for (const auto& [x, y] : s.groupoid().composable_pairs()) {
      EXPECT_EQ(p.algebra.mul(p.u(x), p.u(y)), p.u(s.groupoid().mul(x, y)));
    }
  }
}

TEST(CrossedProperties, TwistedUnitsCommuteWithScalars) {
  // B = M_2(Q) with a central cocycle on C2: b^{r(s)} u_s = u_s b^{d(s)}.
  const auto m2 = matrix_algebra(QQ, 2);
  std::map<ArrowPair, Vec> beta{{{1, 1}, vec_scale(QQ, QQ.from_int(-3), m2.one())}};
  const auto s = twisted_system(cyclic_group(2), m2, beta);
  ASSERT_TRUE(validate_crossed_system(s).ok());
  const auto p = build_crossed_product(s);
  for (Arrow x = 0; x < 2; ++x)
    for (std::size_t i = 0; i < 4; ++i) {
      const Vec b = m2.basis(i);
      EXPECT_EQ(p.algebra.mul(p.element(0, b), p.u(x)), p.algebra.mul(p.u(x), p.element(0, b)));
    }
}
