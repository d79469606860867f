#pragma once

// Crossed systems (A, G, alpha, beta) over a groupoid, the crossed product
// A x_beta^alpha G, and the inverse passage from an object crossed product
// back to a system.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gring/graded.hpp"

namespace gring {

using ArrowPair = std::pair<Arrow, Arrow>;

/// Fibers A_e per object, alpha_s as a matrix A_{src s} -> A_{dst s} (columns
/// are images of basis vectors) and beta on composable pairs with values in
/// A_{dst s}.
class CrossedSystem {
 public:
  CrossedSystem(FiniteGroupoid groupoid, std::map<Arrow, StructureConstantAlgebra> fibers, std::vector<Matrix> action,
                std::map<ArrowPair, Vec> cocycle)
      : groupoid_(std::move(groupoid)), fibers_(std::move(fibers)), action_(std::move(action)), cocycle_(std::move(cocycle)) {
    const auto& g = groupoid_;
    if (g.size() == 0) throw StructuralError("crossed system over an empty groupoid");
    for (Arrow e : g.objects()) {
      if (!fibers_.count(e)) throw StructuralError("no fiber at object " + g.name(e));
    }
    if (fibers_.size() != g.objects().size()) throw StructuralError("fiber given at a non-object");
    const Field& f = fibers_.begin()->second.field();
    for (const auto& [e, a] : fibers_) {
      if (a.field() != f) throw StructuralError("fibers over different fields");
    }
    if (action_.size() != g.size()) throw StructuralError("action must give one matrix per arrow");
    for (Arrow s = 0; s < g.size(); ++s) {
      const auto& m = action_[s];
      if (m.rows() != fiber(g.dst(s)).dim() || m.cols() != fiber(g.src(s)).dim()) {
        throw StructuralError("action matrix of " + g.name(s) + " has the wrong shape");
      }
    }
    // Normalised entries may be omitted and are filled with 1.
    for (Arrow s = 0; s < g.size(); ++s) {
      cocycle_.try_emplace({s, g.src(s)}, fiber(g.dst(s)).one());
      cocycle_.try_emplace({g.dst(s), s}, fiber(g.dst(s)).one());
    }
    for (const auto& [key, value] : cocycle_) {
      if (key.first >= g.size() || key.second >= g.size() || !g.composable(key.first, key.second)) {
        throw StructuralError("cocycle given on a non-composable pair");
      }
      if (value.size() != fiber(g.dst(key.first)).dim()) {
        throw StructuralError("cocycle value at (" + g.name(key.first) + ", " + g.name(key.second) + ") has the wrong length");
      }
    }
    for (const auto& [s, t] : g.composable_pairs()) {
      if (!cocycle_.count({s, t})) {
        throw StructuralError("cocycle missing at (" + g.name(s) + ", " + g.name(t) + ")");
      }
    }
  }

  const FiniteGroupoid& groupoid() const { return groupoid_; }
  const Field& field() const { return fibers_.begin()->second.field(); }
  const std::map<Arrow, StructureConstantAlgebra>& fibers() const { return fibers_; }
  const StructureConstantAlgebra& fiber(Arrow e) const { return fibers_.at(e); }
  const std::vector<Matrix>& action() const { return action_; }
  const Matrix& action(Arrow s) const { return action_.at(s); }
  const std::map<ArrowPair, Vec>& cocycle() const { return cocycle_; }

  Vec alpha(Arrow s, const Vec& a) const { return action_.at(s).apply(a); }

  const Vec& beta(Arrow s, Arrow t) const {
    if (!groupoid_.composable(s, t)) {
      throw PreconditionError("cocycle is undefined on the non-composable pair (" + groupoid_.name(s) + ", " +
                              groupoid_.name(t) + ")");
    }
    return cocycle_.at({s, t});
  }

  friend bool operator==(const CrossedSystem&, const CrossedSystem&) = default;

 private:
  FiniteGroupoid groupoid_;
  std::map<Arrow, StructureConstantAlgebra> fibers_;
  std::vector<Matrix> action_;
  std::map<ArrowPair, Vec> cocycle_;
};

/// Axioms of a crossed system, each violation with a replayable witness:
///   fiber                   A_e is not a valid nonzero unital algebra      {e}
///   action-identity         alpha_e is not the identity                    {e}
///   action-unital           alpha_s(1) != 1                                {s}
///   action-multiplicative   alpha_s(b_i b_j) != alpha_s(b_i) alpha_s(b_j)  {s, i, j}
///   action-bijective        alpha_s is not invertible                      {s}
///   cocycle-invertible      beta_{s,t} is not a unit                       {s, t}
///   normalization-right     beta_{s,d(s)} != 1                             {s}
///   normalization-left      beta_{r(s),s} != 1                             {s}
///   twisted-action          alpha_s alpha_t (b_i) beta != beta alpha_st(b_i)  {s, t, i}
///   cocycle-condition       beta_{s,t} beta_{st,u} != alpha_s(beta_{t,u}) beta_{s,tu}  {s, t, u}
inline ValidationReport validate_crossed_system(const CrossedSystem& S) {
  ValidationReport report;
  const auto& g = S.groupoid();
  const Field& f = S.field();
  for (Arrow e : g.objects()) {
    if (!validate_algebra(S.fiber(e)).ok()) report.add("fiber", {e}, "fiber at " + g.name(e) + " is not a valid algebra");
    if (S.action(e) != Matrix::identity(f, S.fiber(e).dim())) {
      report.add("action-identity", {e}, "action of identity " + g.name(e) + " is not the identity");
    }
  }
  for (Arrow s = 0; s < g.size(); ++s) {
    const auto& src = S.fiber(g.src(s));
    const auto& dst = S.fiber(g.dst(s));
    if (S.alpha(s, src.one()) != dst.one()) report.add("action-unital", {s}, "action of " + g.name(s) + " moves 1");
    for (std::size_t i = 0; i < src.dim(); ++i) {
      for (std::size_t j = 0; j < src.dim(); ++j) {
        const Vec lhs = S.alpha(s, src.mul(src.basis(i), src.basis(j)));
        const Vec rhs = dst.mul(S.alpha(s, src.basis(i)), S.alpha(s, src.basis(j)));
        if (lhs != rhs) report.add("action-multiplicative", {s, i, j});
      }
    }
    if (src.dim() != dst.dim() || rank(S.action(s)) != src.dim()) {
      report.add("action-bijective", {s}, "action of " + g.name(s) + " is not bijective");
    }
  }
  for (const auto& [s, t] : g.composable_pairs()) {
    if (!invert(S.fiber(g.dst(s)), S.beta(s, t))) {
      report.add("cocycle-invertible", {s, t}, "beta(" + g.name(s) + ", " + g.name(t) + ") is not invertible");
    }
  }
  for (Arrow s = 0; s < g.size(); ++s) {
    const Vec& one = S.fiber(g.dst(s)).one();
    if (S.beta(s, g.src(s)) != one) report.add("normalization-right", {s});
    if (S.beta(g.dst(s), s) != one) report.add("normalization-left", {s});
  }
  for (const auto& [s, t] : g.composable_pairs()) {
    const Arrow st = g.mul(s, t);
    const auto& a_src = S.fiber(g.src(t));
    const auto& a_dst = S.fiber(g.dst(s));
    const Vec& b = S.beta(s, t);
    for (std::size_t i = 0; i < a_src.dim(); ++i) {
      const Vec x = a_src.basis(i);
      const Vec lhs = a_dst.mul(S.alpha(s, S.alpha(t, x)), b);
      const Vec rhs = a_dst.mul(b, S.alpha(st, x));
      if (lhs != rhs) report.add("twisted-action", {s, t, i});
    }
  }
  for (const auto& [s, t, u] : g.composable_triples()) {
    const auto& a = S.fiber(g.dst(s));
    const Arrow st = g.mul(s, t);
    const Arrow tu = g.mul(t, u);
    const Vec lhs = a.mul(S.beta(s, t), S.beta(st, u));
    const Vec rhs = a.mul(S.alpha(s, S.beta(t, u)), S.beta(s, tu));
    if (lhs != rhs) report.add("cocycle-condition", {s, t, u});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Crossed product.

/// The crossed product with basis b_k u_s (b_k running over the basis of
/// A_{dst s}); block s starts at offset(s).
struct CrossedProductPresentation {
  GradedAlgebra algebra;
  CrossedSystem system;
  std::vector<std::size_t> offsets;

  std::size_t offset(Arrow s) const { return offsets.at(s); }

  /// a u_s for a in A_{dst s}.
  Vec element(Arrow s, const Vec& a) const { return algebra.embed(s, a); }
  /// The A_{dst s}-coefficient of the degree-s part of x.
  Vec coefficient(const Vec& x, Arrow s) const { return algebra.local(s, x); }
  /// u_s = 1_{A_{dst s}} u_s.
  Vec u(Arrow s) const { return element(s, system.fiber(system.groupoid().dst(s)).one()); }

  ObjectUnits object_units() const {
    ObjectUnits out;
    for (Arrow e : system.groupoid().objects()) out.units.emplace(e, u(e));
    return out;
  }
};

/// Builds the product table without validating the system first.
inline CrossedProductPresentation build_crossed_product_unchecked(const CrossedSystem& S) {
  const auto& g = S.groupoid();
  std::vector<std::size_t> offsets(g.size());
  std::vector<Arrow> degree;
  std::size_t n = 0;
  for (Arrow s = 0; s < g.size(); ++s) {
    offsets[s] = n;
    const std::size_t d = S.fiber(g.dst(s)).dim();
    for (std::size_t k = 0; k < d; ++k) degree.push_back(s);
    n += d;
  }
  StructureConstants t(S.field(), n);
  for (const auto& [s, tt] : g.composable_pairs()) {
    const Arrow st = g.mul(s, tt);
    const auto& a = S.fiber(g.dst(s));
    const auto& b = S.fiber(g.dst(tt));
    const Vec& beta = S.beta(s, tt);
    for (std::size_t k = 0; k < a.dim(); ++k) {
      for (std::size_t l = 0; l < b.dim(); ++l) {
        // b_k u_s * b_l u_t = b_k alpha_s(b_l) beta_{s,t} u_st
        const Vec c = a.mul(a.mul(a.basis(k), S.alpha(s, b.basis(l))), beta);
        for (std::size_t m = 0; m < c.size(); ++m) {
          if (!S.field().is_zero(c[m])) t.add_term(offsets[s] + k, offsets[tt] + l, offsets[st] + m, c[m]);
        }
      }
    }
  }
  return {GradedAlgebra(g, std::move(t), std::move(degree)), S, std::move(offsets)};
}

/// Validates the system, builds the product and re-verifies associativity on
/// every basis triple.
inline CrossedProductPresentation build_crossed_product(const CrossedSystem& S) {
  const auto report = validate_crossed_system(S);
  if (!report.ok()) {
    throw PreconditionError("crossed system fails " + report.violations.front().axiom + "; refusing to build");
  }
  auto p = build_crossed_product_unchecked(S);
  ValidationReport assoc;
  check_associativity(p.algebra.table(), assoc);
  if (!assoc.ok()) throw Error("crossed product is not associative although the system validated");
  return p;
}

// ---------------------------------------------------------------------------
// Specialisations.

inline std::vector<Matrix> identity_action(const FiniteGroupoid& g, const StructureConstantAlgebra& b) {
  return std::vector<Matrix>(g.size(), Matrix::identity(b.field(), b.dim()));
}

inline std::map<Arrow, StructureConstantAlgebra> constant_fibers(const FiniteGroupoid& g, const StructureConstantAlgebra& b) {
  std::map<Arrow, StructureConstantAlgebra> out;
  for (Arrow e : g.objects()) out.emplace(e, b);
  return out;
}

inline std::map<ArrowPair, Vec> trivial_cocycle(const FiniteGroupoid& g, const std::map<Arrow, StructureConstantAlgebra>& fibers) {
  std::map<ArrowPair, Vec> out;
  for (const auto& [s, t] : g.composable_pairs()) out.emplace(ArrowPair{s, t}, fibers.at(g.dst(s)).one());
  return out;
}

/// Skew system: the cocycle is trivial.
inline CrossedSystem skew_system(FiniteGroupoid g, std::map<Arrow, StructureConstantAlgebra> fibers, std::vector<Matrix> action) {
  auto beta = trivial_cocycle(g, fibers);
  return CrossedSystem(std::move(g), std::move(fibers), std::move(action), std::move(beta));
}

/// Twisted system: one ring B at every object, trivial action, and a
/// cocycle with values in the units of Z(B). Throws naming the first pair
/// whose value is not central.
inline CrossedSystem twisted_system(FiniteGroupoid g, const StructureConstantAlgebra& b, std::map<ArrowPair, Vec> cocycle) {
  for (const auto& [key, value] : cocycle) {
    if (value.size() != b.dim()) throw StructuralError("cocycle value has the wrong length");
    for (std::size_t i = 0; i < b.dim(); ++i) {
      if (b.mul(value, b.basis(i)) != b.mul(b.basis(i), value)) {
        throw PreconditionError("twisted cocycle value at (" + g.name(key.first) + ", " + g.name(key.second) +
                                ") is not central");
      }
    }
  }
  auto fibers = constant_fibers(g, b);
  auto action = identity_action(g, b);
  return CrossedSystem(std::move(g), std::move(fibers), std::move(action), std::move(cocycle));
}

/// Groupoid ring B[G].
inline CrossedSystem groupoid_ring(FiniteGroupoid g, const StructureConstantAlgebra& b) {
  auto fibers = constant_fibers(g, b);
  auto action = identity_action(g, b);
  return skew_system(std::move(g), std::move(fibers), std::move(action));
}

// ---------------------------------------------------------------------------
// Extraction.

struct ExtractionResult {
  CrossedSystem system;
  CrossedProductPresentation product;
  Matrix iso;  // gamma: R -> product, columns are images of the basis of R
};

/// Reads (alpha, beta) off an object crossed product with chosen object
/// invertible u_s (and their object inverses v_s) and verifies that
/// r_s -> (r_s v_s) u_s is a degree-preserving ring isomorphism.
inline ExtractionResult extract_crossed_system(const GradedAlgebra& r, const ObjectUnits& units,
                                               const std::map<Arrow, Vec>& u, const std::map<Arrow, Vec>& v) {
  const auto& g = r.groupoid();
  const Field& f = r.field();
  for (Arrow s = 0; s < g.size(); ++s) {
    if (!u.count(s) || !v.count(s)) throw PreconditionError("no unit given for arrow " + g.name(s));
    if (!r.is_homogeneous_of(u.at(s), s) || !r.is_homogeneous_of(v.at(s), g.inv(s))) {
      throw PreconditionError("unit for " + g.name(s) + " has the wrong degree");
    }
    if (r.mul(u.at(s), v.at(s)) != units.at(g.dst(s)) || r.mul(v.at(s), u.at(s)) != units.at(g.src(s))) {
      throw PreconditionError("element given for " + g.name(s) + " is not object invertible with the given inverse");
    }
  }
  for (Arrow e : g.objects()) {
    if (u.at(e) != units.at(e)) throw PreconditionError("u at object " + g.name(e) + " must be the object unit");
  }
  std::map<Arrow, StructureConstantAlgebra> fibers;
  for (Arrow e : g.objects()) fibers.emplace(e, component_algebra(r, e, units.at(e)));
  std::vector<Matrix> action;
  for (Arrow t = 0; t < g.size(); ++t) {
    // alpha_t(a) = u_t a v_t
    const Arrow d = g.src(t);
    std::vector<Vec> cols;
    for (auto i : r.component(d)) cols.push_back(r.local(g.dst(t), r.mul(r.mul(u.at(t), r.basis(i)), v.at(t))));
    action.push_back(Matrix::from_columns(f, cols, r.component(g.dst(t)).size()));
  }
  std::map<ArrowPair, Vec> cocycle;
  for (const auto& [s, t] : g.composable_pairs()) {
    // beta_{s,t} = u_s u_t v_st
    const Vec b = r.mul(r.mul(u.at(s), u.at(t)), v.at(g.mul(s, t)));
    cocycle.emplace(ArrowPair{s, t}, r.local(g.dst(s), b));
  }
  CrossedSystem system(g, std::move(fibers), std::move(action), std::move(cocycle));
  const auto report = validate_crossed_system(system);
  if (!report.ok()) throw Error("extracted system fails " + report.violations.front().axiom);
  auto product = build_crossed_product(system);

  // Freeness: R_s = A_{r(s)} u_s with a -> a u_s injective.
  for (Arrow s = 0; s < g.size(); ++s) {
    const Arrow e = g.dst(s);
    if (r.component(s).size() != r.component(e).size()) {
      throw Error("component of " + g.name(s) + " is not free of rank one over its target fiber");
    }
    std::vector<Vec> cols;
    for (auto i : r.component(e)) cols.push_back(r.mul(r.basis(i), u.at(s)));
    if (rank(Matrix::from_columns(f, cols, r.dim())) != cols.size()) {
      throw Error("a -> a u has a kernel at " + g.name(s));
    }
  }
  Matrix iso(f, product.algebra.dim(), r.dim());
  std::vector<Vec> images(r.dim());
  for (std::size_t i = 0; i < r.dim(); ++i) {
    const Arrow s = r.degree(i);
    const Vec a = r.mul(r.basis(i), v.at(s));
    images[i] = product.element(s, r.local(g.dst(s), a));
    for (std::size_t k = 0; k < images[i].size(); ++k) iso(k, i) = images[i][k];
  }
  if (rank(iso) != r.dim() || product.algebra.dim() != r.dim()) throw Error("extraction map is not bijective");
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t j = 0; j < r.dim(); ++j) {
      const Vec lhs = iso.apply(r.table().basis_product(i, j));
      const Vec rhs = product.algebra.mul(images[i], images[j]);
      if (lhs != rhs) {
        throw Error("extraction map is not multiplicative at basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
  return {std::move(system), std::move(product), std::move(iso)};
}

/// Replaces u_s by c_s u_s in the built product and extracts again; the
/// result is an equivalent system with a different cocycle.
inline CrossedSystem coboundary_twist(const CrossedSystem& S, const std::map<Arrow, Vec>& c) {
  const auto& g = S.groupoid();
  const auto p = build_crossed_product(S);
  const auto units = p.object_units();
  std::map<Arrow, Vec> u, v;
  for (Arrow s = 0; s < g.size(); ++s) {
    const auto& a = S.fiber(g.dst(s));
    Vec cs = a.one();
    if (auto it = c.find(s); it != c.end()) cs = it->second;
    if (g.is_object(s) && cs != a.one()) throw PreconditionError("twist at an object must be 1");
    if (!invert(a, cs)) throw PreconditionError("twist value at " + g.name(s) + " is not invertible");
    u[s] = p.algebra.mul(p.element(g.dst(s), cs), p.u(s));
    auto inv = object_inverse(p.algebra, units, u[s], s);
    if (!inv) throw Error("twisted unit at " + g.name(s) + " is not object invertible");
    v[s] = std::move(*inv);
  }
  return extract_crossed_system(p.algebra, units, u, v).system;
}

/// Empty iff the cocycle is identically 1 ("skew" {s, t} for each other pair).
inline ValidationReport check_skew(const CrossedSystem& S) {
  ValidationReport report;
  const auto& g = S.groupoid();
  for (const auto& [k, v] : S.cocycle()) {
    if (v != S.fiber(g.dst(k.first)).one()) report.add("skew", {k.first, k.second}, "cocycle value is not 1");
  }
  return report;
}

/// Empty iff all fibers agree, every arrow acts by the identity and every
/// cocycle value is central:
///   twisted-fiber {e}, twisted-action {s}, twisted-central {s, t}
inline ValidationReport check_twisted(const CrossedSystem& S) {
  ValidationReport report;
  const auto& g = S.groupoid();
  const auto& first = S.fiber(g.objects().front());
  for (Arrow e : g.objects())
    if (!(S.fiber(e) == first)) report.add("twisted-fiber", {e});
  for (Arrow a = 0; a < g.size(); ++a) {
    const Matrix& m = S.action(a);
    if (m.rows() != m.cols() || m != Matrix::identity(S.field(), m.rows())) report.add("twisted-action", {a});
  }
  for (const auto& [k, v] : S.cocycle()) {
    const auto& a = S.fiber(g.dst(k.first));
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (a.mul(v, a.basis(i)) != a.mul(a.basis(i), v)) {
        report.add("twisted-central", {k.first, k.second}, "cocycle value is not central");
        break;
      }
    }
  }
  return report;
}

}  // namespace gring
