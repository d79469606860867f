#pragma once

// Number-field towers given as data: a splitting field N = K[x]/(g), its
// automorphisms as images of x, and spanning sets of the conjugate
// subfields. Everything is re-verified when the crossed system is built.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gring/crossed.hpp"
#include "gring/field_hom.hpp"
#include "gring/irreducible.hpp"

namespace gring {

struct TowerSpec {
  Poly modulus;                                // ascending, over the base field
  bool asserted_irreducible = false;           // trust the modulus when it cannot be certified
  std::vector<Poly> automorphisms;             // image of x, as a polynomial in x
  std::vector<std::vector<Poly>> conjugates;   // spanning set of each conjugate subfield
  friend bool operator==(const TowerSpec&, const TowerSpec&) = default;
};

/// One arrow of the isomorphism groupoid: the restriction of an
/// automorphism to L_source, landing in L_target.
struct TowerArrow {
  std::size_t target = 0;
  std::size_t source = 0;
  std::size_t automorphism = 0;  // least automorphism inducing it
  Matrix matrix;                 // source basis -> target basis
};

struct FieldTowerData {
  explicit FieldTowerData(Field n) : big(std::move(n)) {}
  Field big;
  std::vector<FieldHom> automorphisms;
  std::vector<std::vector<Elem>> bases;  // independent subset of each spanning set
  std::vector<StructureConstantAlgebra> subfields;
  std::vector<TowerArrow> arrows;
  FiniteGroupoid groupoid;
  ValidationReport report;
};

namespace detail {

inline std::optional<Vec> span_coordinates(const Field& big, const std::vector<Elem>& basis, const Elem& x) {
  std::vector<Vec> cols;
  for (const auto& b : basis) {
    Vec c = big.coefficients(b);
    c.resize(big.degree(), big.base().zero());
    cols.push_back(c);
  }
  Vec target = big.coefficients(x);
  target.resize(big.degree(), big.base().zero());
  return coordinates(big.base(), cols, target);
}

inline Elem big_element(const Field& big, const Poly& p) {
  Poly r = poly::mod(big.base(), p, big.modulus());
  r.resize(big.degree(), big.base().zero());
  return big.from_coefficients(std::move(r));
}

}  // namespace detail

/// Builds and verifies the tower:
///   modulus            irreducibility not certified and not asserted
///   automorphism {k}   image k fails verify_field_hom or is not bijective
///   subfield-unit {i}  1 is not in the span of conjugate i
///   subfield-closure {i, a, b}  product of basis a and b leaves the span
///   groupoid-closure {s, t}     composite restriction not among the arrows
///   groupoid-inverse {s}        no arrow composes with s to an identity
///   groupoid           validate_groupoid on the result
/// Throws Error when a failure leaves nothing to build.
inline FieldTowerData load_tower(const Field& base, const TowerSpec& spec) {
  const auto cert = irreducibility_certificate(base, spec.modulus);
  if (cert.status == Irreducibility::no ||
      (cert.status == Irreducibility::asserted && !spec.asserted_irreducible)) {
    throw Error("tower modulus " + poly::to_string(base, spec.modulus) + " is not certified irreducible");
  }
  FieldTowerData out(Field::extension(base, spec.modulus, cert.status));
  auto& report = out.report;
  const Field& big = out.big;
  const Field& k = base;

  for (std::size_t a = 0; a < spec.automorphisms.size(); ++a) {
    FieldHom h(big, big, detail::big_element(big, spec.automorphisms[a]));
    if (!verify_field_hom(h).ok() || rank(h.matrix()) != big.degree()) report.add("automorphism", {a});
    out.automorphisms.push_back(std::move(h));
  }
  if (!report.ok()) throw Error("tower data fails " + report.violations.front().axiom);

  for (std::size_t i = 0; i < spec.conjugates.size(); ++i) {
    std::vector<Elem> basis;
    for (const auto& p : spec.conjugates[i]) {
      const Elem x = detail::big_element(big, p);
      if (!detail::span_coordinates(big, basis, x)) basis.push_back(x);
    }
    const std::size_t d = basis.size();
    StructureConstants t(k, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        auto c = detail::span_coordinates(big, basis, big.mul(basis[a], basis[b]));
        if (!c) {
          report.add("subfield-closure", {i, a, b});
          continue;
        }
        t.set(a, b, *c);
      }
    auto one = detail::span_coordinates(big, basis, big.one());
    if (!one) report.add("subfield-unit", {i});
    out.bases.push_back(basis);
    if (report.ok()) out.subfields.emplace_back(std::move(t), *one);
  }
  if (!report.ok()) throw Error("tower data fails " + report.violations.front().axiom);

  // Arrows ordered by (target, source, automorphism).
  const std::size_t n = spec.conjugates.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < out.automorphisms.size(); ++a) {
        const auto& src = out.bases[j];
        if (src.size() != out.bases[i].size()) continue;
        std::vector<Vec> cols;
        bool lands = true;
        for (const auto& b : src) {
          auto c = detail::span_coordinates(big, out.bases[i], out.automorphisms[a].apply(b));
          if (!c) {
            lands = false;
            break;
          }
          cols.push_back(*c);
        }
        if (!lands) continue;
        Matrix m = Matrix::from_columns(k, cols, out.bases[i].size());
        bool seen = false;
        for (const auto& arrow : out.arrows)
          seen = seen || (arrow.target == i && arrow.source == j && arrow.matrix == m);
        if (!seen) out.arrows.push_back({i, j, a, std::move(m)});
      }

  auto find_arrow = [&](std::size_t i, std::size_t j, const Matrix& m) -> std::optional<Arrow> {
    for (Arrow s = 0; s < out.arrows.size(); ++s) {
      const auto& x = out.arrows[s];
      if (x.target == i && x.source == j && x.matrix == m) return s;
    }
    return std::nullopt;
  };

  const std::size_t na = out.arrows.size();
  std::vector<Arrow> objects(n), inv(na, na), src(na), dst(na);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    auto id = find_arrow(i, i, Matrix::identity(k, out.bases[i].size()));
    if (!id) throw Error("no automorphism restricts to the identity on conjugate " + std::to_string(i));
    objects[i] = *id;
  }
  for (Arrow s = 0; s < na; ++s) {
    const auto& x = out.arrows[s];
    names.push_back("g" + std::to_string(x.automorphism) + ":L" + std::to_string(x.source) + "->L" +
                    std::to_string(x.target));
    src[s] = objects[x.source];
    dst[s] = objects[x.target];
  }
  CompositionTable comp;
  for (Arrow s = 0; s < na; ++s)
    for (Arrow t = 0; t < na; ++t) {
      const auto& x = out.arrows[s];
      const auto& y = out.arrows[t];
      if (x.source != y.target) continue;
      auto st = find_arrow(x.target, y.source, x.matrix * y.matrix);
      if (!st) {
        report.add("groupoid-closure", {s, t});
        continue;
      }
      comp[{s, t}] = *st;
      if (*st == objects[x.target] && y.source == x.target) inv[s] = t;
    }
  for (Arrow s = 0; s < na; ++s)
    if (inv[s] == na) report.add("groupoid-inverse", {s});
  if (!report.ok()) throw Error("tower data fails " + report.violations.front().axiom);
  out.groupoid = FiniteGroupoid(names, inv, src, dst, objects, comp);
  for (const auto& v : validate_groupoid(out.groupoid).violations) report.add("groupoid", v.witness, v.axiom);
  if (!report.ok()) throw Error("tower data fails " + report.violations.front().axiom);
  return out;
}

/// The object crossed product data of the tower with trivial cocycle.
inline CrossedSystem tower_system(const FieldTowerData& t) {
  std::map<Arrow, StructureConstantAlgebra> fibers;
  const auto& objects = t.groupoid.objects();
  for (std::size_t i = 0; i < objects.size(); ++i) fibers.emplace(objects[i], t.subfields[i]);
  std::vector<Matrix> action;
  for (const auto& a : t.arrows) action.push_back(a.matrix);
  return skew_system(t.groupoid, std::move(fibers), std::move(action));
}

}  // namespace gring
