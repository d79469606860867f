#pragma once

// Built-in example rings. Every generator validates its output before
// returning it.

#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gring/corpus_data.hpp"
#include "gring/crossed.hpp"
#include "gring/field_hom.hpp"
#include "gring/io.hpp"
#include "gring/tower.hpp"

namespace gring {

namespace detail {

inline void require_valid(const CrossedSystem& s, const std::string& what) {
  const auto r = validate_crossed_system(s);
  if (!r.ok()) throw Error(what + " fails " + r.violations.front().axiom);
}

inline StructureConstantAlgebra scalar_algebra(const Field& f) { return field_as_algebra(f); }

}  // namespace detail

/// Groupoid ring of the pair groupoid on n points over f; compared with the
/// n x n matrix-unit table.
inline CrossedProductPresentation gen_matrix(std::size_t n, const Field& f = Field::rational()) {
  if (n == 0) throw Error("gen_matrix needs n >= 1");
  const auto s = groupoid_ring(pair_groupoid(n), detail::scalar_algebra(f));
  detail::require_valid(s, "matrix ring");
  auto p = build_crossed_product(s);
  if (!(p.algebra.table() == matrix_algebra(f, n).table())) throw Error("matrix ring table differs from matrix units");
  return p;
}

/// Group ring f[C_n].
inline CrossedProductPresentation gen_cyclic_group_ring(std::size_t n, const Field& f = Field::rational()) {
  if (n == 0) throw Error("cyclic group ring needs n >= 1");
  const auto s = groupoid_ring(cyclic_group(n), detail::scalar_algebra(f));
  detail::require_valid(s, "group ring");
  return build_crossed_product(s);
}

/// Frobenius x -> x^(p^k) on GF(p)[x]/(m) as a matrix over GF(p).
inline Matrix frobenius_power_matrix(const Field& gf, const Poly& m, std::size_t k) {
  const std::size_t n = static_cast<std::size_t>(poly::degree(gf, m));
  Integer q = 1;
  for (std::size_t i = 0; i < k; ++i) q *= static_cast<unsigned long>(gf.p());
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < n; ++j) {
    Poly xj(j + 1, gf.zero());
    xj[j] = gf.one();
    Poly img = n == 1 ? xj : poly::powmod(gf, poly::mod(gf, xj, m), q, m);
    img.resize(n, gf.zero());
    cols.push_back(img);
  }
  return Matrix::from_columns(gf, cols, n);
}

/// The skew group ring GF(p^n) x C_n with C_n generated by Frobenius and
/// trivial cocycle, over GF(p).
inline CrossedSystem finite_field_skew_system(std::uint64_t p, std::size_t n) {
  if (!is_prime_number(p)) throw Error("ff-skew needs a prime characteristic");
  if (n == 0) throw Error("ff-skew needs n >= 1");
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    order *= p;
    if (order > (1u << 16)) throw Error("ff-skew field too large to tabulate");
  }
  const Field gf = Field::prime(p);
  StructureConstantAlgebra a = detail::scalar_algebra(gf);
  Poly m{gf.zero(), gf.one()};
  if (n > 1) {
    m = find_irreducible(gf, n);
    const Field big = extension_field(gf, m);
    a = field_as_algebra(big);
    const FieldHom frob(big, big, big.pow(big.generator(), p));
    if (!verify_field_hom(frob).ok()) throw Error("Frobenius failed verification");
  }
  const auto g = cyclic_group(n);
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < n; ++k) action.push_back(frobenius_power_matrix(gf, m, k));
  std::map<Arrow, StructureConstantAlgebra> fibers{{0, a}};
  auto s = skew_system(g, std::move(fibers), std::move(action));
  detail::require_valid(s, "ff-skew");
  return s;
}

inline CrossedProductPresentation gen_finite_field_skew(std::uint64_t p, std::size_t n) {
  return build_crossed_product(finite_field_skew_system(p, n));
}

/// beta on the Klein four group {e, a, b, c} read off i, j, k: a^2 = b^2 =
/// c^2 = -1, ab = c, ba = -c, and so on.
inline std::map<ArrowPair, Vec> quaternion_cocycle(const Field& f = Field::rational()) {
  // Products of i=a, j=b, k=c: x*y = sign * (x xor y).
  const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::map<ArrowPair, Vec> beta;
  for (Arrow x = 0; x < 4; ++x)
    for (Arrow y = 0; y < 4; ++y) beta[{x, y}] = Vec{f.from_int(sign[x][y])};
  return beta;
}

inline CrossedSystem quaternion_system() {
  const Field qq = Field::rational();
  auto s = twisted_system(klein_four_group(), detail::scalar_algebra(qq), quaternion_cocycle(qq));
  detail::require_valid(s, "quaternion");
  return s;
}

inline CrossedProductPresentation gen_quaternion() { return build_crossed_product(quaternion_system()); }

/// Q[x]/(x^2) graded by C2 with deg(1) = e, deg(x) = g.
inline GradedAlgebra gen_non_strong() {
  const Field qq = Field::rational();
  const auto a = polynomial_quotient_algebra(qq, int_poly(qq, {0, 0, 1}));
  GradedAlgebra r(cyclic_group(2), a.table(), {0, 1});
  if (!check_grading(r).ok()) throw Error("non-strong example is not graded");
  return r;
}

/// Q[C2] on the first summand of C2 + C3 and nothing over C3, so the object
/// of C3 carries a zero fiber.
inline GradedAlgebra gen_zero_fiber_union() {
  const Field qq = Field::rational();
  const auto g = disjoint_union({cyclic_group(2), cyclic_group(3)});
  const auto c2 = group_algebra(qq, cyclic_table(2));
  GradedAlgebra r(g, c2.table(), {0, 1});
  if (!check_grading(r).ok()) throw Error("zero-fiber example is not graded");
  return r;
}

/// M_2(Q) on the arrows among the first two of three objects of a pair
/// groupoid; the third object has a zero fiber.
inline GradedAlgebra gen_pair_with_zero_fiber() {
  const Field qq = Field::rational();
  const auto g = pair_groupoid(3);
  const auto m = matrix_algebra(qq, 2);
  // E_ij (i, j in {1, 2}) sits at arrow (i, j) = index (i-1)*3 + (j-1).
  GradedAlgebra r(g, m.table(), {0, 1, 3, 4});
  if (!check_grading(r).ok()) throw Error("zero-fiber example is not graded");
  return r;
}

/// M_3(Q) graded by C2 with R_e the block diagonal M_2 x M_1 and R_g the
/// off-diagonal blocks: strongly graded, but every element of R_g has rank
/// at most 2, so there is no object-invertible element of degree g.
inline GradedAlgebra gen_unit_free_strong() {
  const Field qq = Field::rational();
  const auto m = matrix_algebra(qq, 3);
  std::vector<Arrow> deg(9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) deg[i * 3 + j] = ((i == 2) != (j == 2)) ? 1 : 0;
  GradedAlgebra r(cyclic_group(2), m.table(), deg);
  if (!check_grading(r).ok()) throw Error("unit-free example is not graded");
  return r;
}

// ---------------------------------------------------------------------------
// Field towers.

inline DefinitionDocument bundled_document(const std::string& name) {
  if (name == "cbrt2") return parse_document(data::cbrt2);
  if (name == "klein-galois") return parse_document(data::klein_galois);
  throw Error("no bundled document named " + name);
}

inline FieldTowerData bundled_tower(const std::string& name) {
  const auto d = bundled_document(name);
  return load_tower(d.field, std::get<TowerSpec>(d.content));
}

/// Three conjugates of Q(cbrt 2) inside the splitting field of x^6 + 108,
/// the nine restricted isomorphisms, trivial cocycle.
inline CrossedProductPresentation gen_cbrt2() {
  const auto s = tower_system(bundled_tower("cbrt2"));
  detail::require_valid(s, "cbrt2");
  return build_crossed_product(s);
}

/// Q(sqrt2, sqrt3) with its Galois group C2 x C2, trivial cocycle.
inline CrossedProductPresentation gen_klein_galois() {
  const auto s = tower_system(bundled_tower("klein-galois"));
  detail::require_valid(s, "klein-galois");
  return build_crossed_product(s);
}

// ---------------------------------------------------------------------------
// Named examples.

namespace detail {

inline GroupoidSpec pair_spec(std::size_t n) {
  GroupoidSpec s;
  s.kind = GroupoidSpec::Kind::pair;
  s.n = n;
  return s;
}

inline GroupoidSpec cyclic_spec(std::size_t n) {
  GroupoidSpec s;
  s.kind = GroupoidSpec::Kind::group;
  s.group.kind = GroupSpec::Kind::cyclic;
  s.group.n = n;
  return s;
}

inline GroupoidSpec klein_spec() {
  GroupoidSpec s;
  s.kind = GroupoidSpec::Kind::group;
  s.group.kind = GroupSpec::Kind::klein_four;
  return s;
}

inline GroupoidSpec union_spec(std::vector<GroupoidSpec> parts) {
  GroupoidSpec s;
  s.kind = GroupoidSpec::Kind::union_of;
  s.parts = std::move(parts);
  return s;
}

/// Parses "prefix-a-b..." into its numeric fields.
inline std::optional<std::vector<std::uint64_t>> numeric_suffix(const std::string& name, const std::string& prefix,
                                                                std::size_t count) {
  if (name.rfind(prefix, 0) != 0) return std::nullopt;
  std::vector<std::uint64_t> out;
  std::size_t pos = prefix.size();
  for (std::size_t i = 0; i < count; ++i) {
    if (pos >= name.size() || name[pos] != '-') return std::nullopt;
    ++pos;
    std::size_t end = pos;
    while (end < name.size() && std::isdigit(static_cast<unsigned char>(name[end]))) ++end;
    if (end == pos || end - pos > 6) return std::nullopt;
    out.push_back(std::stoull(name.substr(pos, end - pos)));
    pos = end;
  }
  if (pos != name.size()) return std::nullopt;
  return out;
}

}  // namespace detail

/// Names accepted by `example_document`, with one concrete instance for
/// each parametrised family.
inline std::vector<std::string> example_names() {
  return {"matrix-2",   "matrix-3",     "matrix-4",        "matrix-2-gf2",    "matrix-3-gf2",     "matrix-4-gf2",
          "ff-skew-2-2", "ff-skew-2-3", "ff-skew-3-2",     "quaternion",      "cbrt2",            "klein-galois",
          "non-strong", "gf2-c2",       "gf3-c3",          "q-c2",            "q-c3",             "q-c4",
          "q-klein",    "zero-fiber-union", "pair-zero-fiber", "unit-free-strong"};
}

/// Definition document for a named example:
///   matrix-n, matrix-n-gfp   groupoid ring of the pair groupoid on n points
///   ff-skew-p-n              GF(p^n) x C_n by Frobenius
///   quaternion, cbrt2, klein-galois, non-strong
///   gf2-c2, gfp-cn, q-cn     cyclic group rings
///   q-klein                  Q[C2 x C2]
///   zero-fiber-union, pair-zero-fiber, unit-free-strong   graded negative controls
inline DefinitionDocument example_document(const std::string& name) {
  if (name == "cbrt2" || name == "klein-galois") return bundled_document(name);
  if (name == "quaternion") return system_document(name, quaternion_system(), detail::klein_spec());
  if (name == "q-klein") {
    return system_document(name, groupoid_ring(klein_four_group(), detail::scalar_algebra(Field::rational())),
                           detail::klein_spec());
  }
  if (name == "non-strong") {
    const auto r = gen_non_strong();
    return graded_document(name, r, polynomial_quotient_algebra(r.field(), int_poly(r.field(), {0, 0, 1})).one(),
                           detail::cyclic_spec(2));
  }
  if (name == "zero-fiber-union") {
    const auto r = gen_zero_fiber_union();
    return graded_document(name, r, group_algebra(r.field(), cyclic_table(2)).one(),
                           detail::union_spec({detail::cyclic_spec(2), detail::cyclic_spec(3)}));
  }
  if (name == "pair-zero-fiber") {
    const auto r = gen_pair_with_zero_fiber();
    return graded_document(name, r, matrix_algebra(r.field(), 2).one(), detail::pair_spec(3));
  }
  if (name == "unit-free-strong") {
    const auto r = gen_unit_free_strong();
    return graded_document(name, r, matrix_algebra(r.field(), 3).one(), detail::cyclic_spec(2));
  }
  if (auto v = detail::numeric_suffix(name, "matrix", 1); v && (*v)[0] >= 1 && (*v)[0] <= 12) {
    return system_document(name, gen_matrix((*v)[0]).system, detail::pair_spec((*v)[0]));
  }
  if (name.rfind("matrix-", 0) == 0) {
    const auto cut = name.rfind("-gf");
    if (cut != std::string::npos) {
      auto n = detail::numeric_suffix(name.substr(0, cut), "matrix", 1);
      auto p = detail::numeric_suffix("gf-" + name.substr(cut + 3), "gf", 1);
      if (n && p && (*n)[0] >= 1 && (*n)[0] <= 12 && is_prime_number((*p)[0])) {
        return system_document(name, gen_matrix((*n)[0], Field::prime((*p)[0])).system, detail::pair_spec((*n)[0]));
      }
    }
  }
  if (auto v = detail::numeric_suffix(name, "ff-skew", 2); v && is_prime_number((*v)[0]) && (*v)[1] >= 1 && (*v)[1] <= 16) {
    return system_document(name, finite_field_skew_system((*v)[0], (*v)[1]), detail::cyclic_spec((*v)[1]));
  }
  if (name.rfind("q-c", 0) == 0) {
    if (auto v = detail::numeric_suffix("q-" + name.substr(3), "q", 1); v && (*v)[0] >= 1 && (*v)[0] <= 64) {
      return system_document(name, gen_cyclic_group_ring((*v)[0]).system, detail::cyclic_spec((*v)[0]));
    }
  }
  if (name.rfind("gf", 0) == 0) {
    const auto cut = name.find("-c");
    if (cut != std::string::npos) {
      auto p = detail::numeric_suffix("gf-" + name.substr(2, cut - 2), "gf", 1);
      auto n = detail::numeric_suffix("c-" + name.substr(cut + 2), "c", 1);
      if (p && n && is_prime_number((*p)[0]) && (*n)[0] >= 1 && (*n)[0] <= 64) {
        return system_document(name, gen_cyclic_group_ring((*n)[0], Field::prime((*p)[0])).system,
                               detail::cyclic_spec((*n)[0]));
      }
    }
  }
  throw InputError("unknown example " + name);
}

}  // namespace gring
