#include <gtest/gtest.h>

#include "gring/field_hom.hpp"
#include "gring/irreducible.hpp"
#include "gring/linalg.hpp"
#include "gring/scalar.hpp"

using namespace gring;

namespace {

Field q_sqrt2() { return extension_field(Field::rational(), int_poly(Field::rational(), {-2, 0, 1})); }
Field gf4() { return extension_field(Field::prime(2), int_poly(Field::prime(2), {1, 1, 1})); }

}  // namespace

TEST(FieldArith, InverseOfSqrt2Generator) {
  const Field f = q_sqrt2();
  const Elem x = f.generator();
  const Elem half_x = f.mul(f.from_rational(Rational(1, 2)), x);
  EXPECT_EQ(f.inv(x), half_x);
  EXPECT_TRUE(f.is_one(f.mul(x, half_x)));
}

TEST(FieldArith, Gf4OmegaTimesOmegaPlusOne) {
  const Field f = gf4();
  const Elem w = f.generator();
  EXPECT_TRUE(f.is_one(f.mul(w, f.add(w, f.one()))));
  // w^2 = w + 1
  EXPECT_EQ(f.mul(w, w), f.add(w, f.one()));
}

TEST(FieldArith, Gf5InverseOfTwo) {
  const Field f = Field::prime(5);
  EXPECT_EQ(f.inv(f.from_int(2)), f.from_int(3));
}

TEST(FieldArith, DivisionByZeroThrows) {
  EXPECT_THROW(Field::rational().inv(Field::rational().zero()), DivisionByZero);
  EXPECT_THROW(Field::prime(7).inv(Field::prime(7).zero()), DivisionByZero);
  EXPECT_THROW(gf4().inv(gf4().zero()), DivisionByZero);
  EXPECT_THROW(Field::prime(3).from_rational(Rational(1, 3)), DivisionByZero);
}

TEST(FieldArith, SpecMismatchOnMixedOperands) {
  const FieldElement a(Field::prime(5), Field::prime(5).from_int(2));
  const FieldElement b(Field::prime(7), Field::prime(7).from_int(2));
  EXPECT_THROW(a + b, SpecMismatch);
  EXPECT_THROW(a * b, SpecMismatch);
  const FieldElement c(Field::prime(5), Field::prime(5).from_int(3));
  EXPECT_EQ((a * c).to_string(), "1");
  EXPECT_EQ(a.inverse(), c);
}

TEST(FieldArith, NonCanonicalValueRejected) {
  EXPECT_THROW(FieldElement(Field::prime(5), Elem{std::uint64_t{7}}), SpecMismatch);
  EXPECT_THROW(FieldElement(Field::prime(5), Field::rational().one()), SpecMismatch);
}

TEST(FieldArith, FieldAxiomsOnRandomTriples) {
  const std::vector<Field> fields = {Field::rational(), Field::prime(2), Field::prime(7), gf4(), q_sqrt2(),
                                     extension_field(Field::prime(3), int_poly(Field::prime(3), {2, 2, 1})),
                                     extension_field(gf4(), Poly{gf4().generator(), gf4().one(), gf4().one()})};
  Rng rng(2024);
  for (const auto& f : fields) {
    for (int trial = 0; trial < 60; ++trial) {
      const Elem a = f.random_small(rng), b = f.random_small(rng), c = f.random_small(rng);
      EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))) << f.describe();
      EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      EXPECT_TRUE(f.is_zero(f.add(a, f.neg(a))));
      if (!f.is_zero(a)) EXPECT_TRUE(f.is_one(f.mul(a, f.inv(a)))) << f.describe() << " " << f.format(a);
    }
  }
}

TEST(FieldArith, FiniteEnumerationIsBijective) {
  const Field f = extension_field(Field::prime(3), int_poly(Field::prime(3), {2, 2, 1}));
  ASSERT_EQ(f.order(), 9u);
  for (std::uint64_t i = 0; i < 9; ++i) EXPECT_EQ(f.index_of(f.element_at(i)), i);
}

TEST(FieldHomTest, FrobeniusOnGf4IsValid) {
  const Field f = gf4();
  const FieldHom frob(f, f, f.mul(f.generator(), f.generator()));
  EXPECT_TRUE(verify_field_hom(frob).ok());
  for (std::uint64_t i = 0; i < 4; ++i) {
    const Elem a = f.element_at(i);
    EXPECT_EQ(frob.apply(a), f.mul(a, a));
  }
}

TEST(FieldHomTest, ConjugationOnSqrt2IsValid) {
  const Field f = q_sqrt2();
  EXPECT_TRUE(verify_field_hom(FieldHom(f, f, f.neg(f.generator()))).ok());
}

TEST(FieldHomTest, ShiftOnSqrt2IsRejected) {
  const Field f = q_sqrt2();
  const auto report = verify_field_hom(FieldHom(f, f, f.add(f.generator(), f.one())));
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations[0].axiom, "modulus-at-image");
  // (x+1)^2 - 2 = 2x + 1 (mod x^2 - 2)
  const Elem expected = f.add(f.mul(f.from_int(2), f.generator()), f.one());
  EXPECT_EQ(report.violations[0].message, "modulus evaluated at the generator image is " + f.format(expected));
}

TEST(FieldHomTest, DifferentBasesMismatch) {
  EXPECT_THROW(verify_field_hom(FieldHom(q_sqrt2(), gf4(), gf4().one())), SpecMismatch);
}

TEST(LinearAlgebra, IdentitySystem) {
  const Field q = Field::rational();
  const Vec b = {q.from_int(3), q.from_rational(Rational(-1, 2)), q.from_int(7)};
  const auto x = solve_linear(Matrix::identity(q, 3), b);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, b);
}

TEST(LinearAlgebra, UnderdeterminedOverGf2) {
  const Field f = Field::prime(2);
  Matrix a(f, 1, 2);
  a(0, 0) = f.one();
  a(0, 1) = f.one();
  const auto s = solve_affine(a, {f.one()});
  ASSERT_TRUE(s);
  EXPECT_EQ(a.apply(s->particular), Vec{f.one()});
  ASSERT_EQ(s->kernel.size(), 1u);
  EXPECT_TRUE(is_zero_vec(f, a.apply(s->kernel[0])));
}

TEST(LinearAlgebra, InconsistentSingularSystem) {
  const Field q = Field::rational();
  Matrix a(q, 2, 2);
  a(0, 0) = q.one();
  a(0, 1) = q.one();
  a(1, 0) = q.from_int(2);
  a(1, 1) = q.from_int(2);
  EXPECT_FALSE(solve_linear(a, {q.one(), q.one()}));
}

TEST(LinearAlgebra, DimensionMismatchThrows) {
  const Field q = Field::rational();
  EXPECT_THROW(solve_linear(Matrix::identity(q, 2), {q.one()}), StructuralError);
}

TEST(LinearAlgebra, RandomSystemsBackSubstitute) {
  Rng rng(7);
  for (const Field& f : {Field::rational(), Field::prime(3), gf4()}) {
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
      Matrix a(f, rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = f.random_small(rng);
      const auto ker = kernel(a);
      EXPECT_EQ(ker.size() + rank(a), cols);
      for (const auto& k : ker) EXPECT_TRUE(is_zero_vec(f, a.apply(k)));
      Vec x0(cols);
      for (auto& v : x0) v = f.random_small(rng);
      const Vec b = a.apply(x0);
      const auto x = solve_linear(a, b);
      ASSERT_TRUE(x);
      EXPECT_EQ(a.apply(*x), b);
    }
  }
}

TEST(Irreducible, QuadraticOverGf2) {
  EXPECT_EQ(poly_irreducible(Field::prime(2), int_poly(Field::prime(2), {1, 1, 1})), Irreducibility::yes);
  EXPECT_EQ(poly_irreducible(Field::prime(2), int_poly(Field::prime(2), {1, 0, 1})), Irreducibility::no);
}

TEST(Irreducible, XSquaredMinusTwoOverQ) {
  const auto cert = irreducibility_certificate(Field::rational(), int_poly(Field::rational(), {-2, 0, 1}));
  EXPECT_EQ(cert.status, Irreducibility::yes);
  EXPECT_EQ(cert.method, "rational root test");
}

TEST(Irreducible, RationalRootGivesFactor) {
  const Field q = Field::rational();
  const auto cert = irreducibility_certificate(q, int_poly(q, {-1, 0, 1}));
  ASSERT_EQ(cert.status, Irreducibility::no);
  ASSERT_TRUE(cert.factor);
  EXPECT_TRUE(poly::mod(q, int_poly(q, {-1, 0, 1}), *cert.factor).empty());
}

// x^6 + 108 factors as 2+2+2 mod 5 and 3+3 mod 7 (trial division below);
// no proper degree is a subset sum of both patterns.
TEST(Irreducible, SexticCertifiedByFactorPatterns) {
  auto pattern = [](std::uint64_t p) {
    const Field gf = Field::prime(p);
    Poly f = int_poly(gf, {108, 0, 0, 0, 0, 0, 1});
    std::vector<std::size_t> degs;
    for (std::size_t d = 1; d <= 6 && poly::degree(gf, f) > 0; ++d) {
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < d; ++i) count *= p;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly g;
        std::uint64_t r = idx;
        for (std::size_t i = 0; i < d; ++i) { g.push_back(gf.element_at(r % p)); r /= p; }
        g.push_back(gf.one());
        while (poly::degree(gf, f) >= static_cast<long>(d) && poly::mod(gf, f, g).empty()) {
          degs.push_back(d);
          f = poly::divmod(gf, f, g).first;
        }
      }
    }
    return degs;
  };
  EXPECT_EQ(pattern(5), (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_EQ(pattern(7), (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(detail::factor_degrees_mod_p(Field::prime(5), int_poly(Field::prime(5), {108, 0, 0, 0, 0, 0, 1})),
            (std::vector<std::size_t>{2, 2, 2}));

  const auto cert = irreducibility_certificate(Field::rational(), int_poly(Field::rational(), {108, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(cert.status, Irreducibility::yes);
  EXPECT_NE(cert.method.find("modular factor-degree certificate"), std::string::npos);
}

TEST(Irreducible, NonMonicRejected) {
  EXPECT_THROW(poly_irreducible(Field::rational(), int_poly(Field::rational(), {1, 2})), Error);
  EXPECT_THROW(poly_irreducible(Field::rational(), int_poly(Field::rational(), {1, 0, 2})), Error);
}

TEST(Irreducible, ExtensionRequiresCertificateOrAssertion) {
  const Field q = Field::rational();
  EXPECT_THROW(extension_field(q, int_poly(q, {-1, 0, 1})), Error);
  // x^4 + 1 is reducible modulo every prime, so no modular certificate exists.
  const Poly f = int_poly(q, {1, 0, 0, 0, 1});
  EXPECT_EQ(poly_irreducible(q, f), Irreducibility::asserted);
  EXPECT_THROW(extension_field(q, f), Error);
  const Field k = extension_field(q, f, true);
  EXPECT_TRUE(k.has_asserted_modulus());
}
