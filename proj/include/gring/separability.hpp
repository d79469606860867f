#pragma once

// Separability of R over its degree-zero part R_0: sections, the maps
// gamma_s and tr_e, the trace criterion, and Casimir elements in
// R (x)_{R_0} R for crossed-product presentations.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gring/crossed.hpp"

namespace gring {

// ---------------------------------------------------------------------------
// Sections.

/// 1_{R_{r(s)}} as a sum of products u v with u in R_s, v in R_{s^-1};
/// identities use the single pair (1_{R_e}, 1_{R_e}).
inline std::vector<SectionPair> find_section(const GradedAlgebra& r, const ObjectUnits& units, Arrow s) {
  if (r.groupoid().is_object(s)) return {{units.at(s), units.at(s)}};
  auto d = unit_decomposition(r, units, s);
  if (!d) throw PreconditionError("not strongly graded at " + r.groupoid().name(s));
  return *d;
}

inline SectionData generic_section(const GradedAlgebra& r, const ObjectUnits& units) {
  SectionData out;
  for (Arrow s = 0; s < r.groupoid().size(); ++s) out.pairs[s] = find_section(r, units, s);
  return out;
}

/// The single pair (beta_{s,s^-1}^-1 u_s, u_{s^-1}).
inline std::vector<SectionPair> canonical_section(const CrossedProductPresentation& p, Arrow s) {
  const auto& g = p.system.groupoid();
  const auto& a = p.system.fiber(g.dst(s));
  const auto binv = invert(a, p.system.beta(s, g.inv(s)));
  if (!binv) throw Error("cocycle value is not invertible");
  return {{p.element(s, *binv), p.u(g.inv(s))}};
}

inline SectionData canonical_section(const CrossedProductPresentation& p) {
  SectionData out;
  for (Arrow s = 0; s < p.system.groupoid().size(); ++s) out.pairs[s] = canonical_section(p, s);
  return out;
}

// ---------------------------------------------------------------------------
// Centers of the components and gamma.

/// Basis of Z(R_e) as vectors of R.
inline std::vector<Vec> component_center(const GradedAlgebra& r, const ObjectUnits& units, Arrow e) {
  std::vector<Vec> out;
  const Subspace z = center(component_algebra(r, e, units.at(e)));
  for (const auto& v : z.basis()) out.push_back(r.embed(e, v));
  return out;
}

/// x lies in Z(R_0): supported on identity degrees, each part central in R_e.
inline bool in_degree_zero_center(const GradedAlgebra& r, const Vec& x) {
  const auto& g = r.groupoid();
  for (Arrow s : r.support(x)) {
    if (!g.is_object(s)) return false;
  }
  for (Arrow e : g.objects()) {
    const Vec xe = r.part(x, e);
    for (auto i : r.component(e)) {
      if (r.mul(xe, r.basis(i)) != r.mul(r.basis(i), xe)) return false;
    }
  }
  return true;
}

inline bool central_in_component(const GradedAlgebra& r, Arrow e, const Vec& x) {
  if (!r.is_homogeneous_of(x, e)) return false;
  for (auto i : r.component(e)) {
    if (r.mul(x, r.basis(i)) != r.mul(r.basis(i), x)) return false;
  }
  return true;
}

/// sum_i u^(i) x v^(i) with no centrality requirement on x.
inline Vec gamma_raw(const GradedAlgebra& r, const SectionData& section, Arrow s, const Vec& x) {
  Vec out = r.zero();
  for (const auto& pr : section.at(s)) out = vec_add(r.field(), out, r.mul(r.mul(pr.u, x), pr.v));
  return out;
}

/// gamma_s on Z(R_0). The result is checked to be central in R_{r(s)}, and
/// recomputed with `alternate` when given (the value does not depend on the
/// section).
inline Vec gamma(const GradedAlgebra& r, const SectionData& section, Arrow s, const Vec& x,
                 const SectionData* alternate = nullptr) {
  if (!in_degree_zero_center(r, x)) throw PreconditionError("gamma needs an element of the center of R_0");
  Vec out = gamma_raw(r, section, s, x);
  if (!central_in_component(r, r.groupoid().dst(s), out)) throw Error("gamma value is not central");
  if (alternate && gamma_raw(r, *alternate, s, x) != out) throw Error("gamma depends on the section");
  return out;
}

/// tr_e(x) = sum over the isotropy group at e of gamma_s(x).
inline Vec trace(const GradedAlgebra& r, const SectionData& section, Arrow e, const Vec& x) {
  if (!central_in_component(r, e, x)) throw PreconditionError("trace needs an element of Z(R_e)");
  Vec out = r.zero();
  for (Arrow s : r.groupoid().isotropy_arrows(e)) out = vec_add(r.field(), out, gamma_raw(r, section, s, x));
  return out;
}

// ---------------------------------------------------------------------------
// The criterion.

struct ObjectSeparability {
  Arrow object = 0;
  std::size_t isotropy_size = 0;
  std::size_t center_dimension = 0;
  std::size_t trace_rank = 0;
  Verdict verdict = Verdict::fail;
  std::optional<Vec> trace_solution;  // z in Z(R_e) with tr_e(z) = 1_{R_e}
  std::string witness;
};

struct SeparabilityReport {
  std::vector<ObjectSeparability> objects;
  Verdict verdict = Verdict::fail;
  SectionData section;
  /// Crossed-product fast path: a in A_e with sum_{s in G(e)} alpha_s(a) = 1.
  std::map<Arrow, Vec> exhibited;
  /// Twisted fast path: whether |G(e)| is invertible in the base field.
  std::optional<std::map<Arrow, bool>> isotropy_order_invertible;

  const ObjectSeparability& at(Arrow e) const {
    for (const auto& o : objects)
      if (o.object == e) return o;
    throw Error("no separability entry for object");
  }
};

/// For each object: assemble tr_e on a basis of Z(R_e) and solve
/// tr_e(z) = 1_{R_e}.
inline SeparabilityReport separability_criterion(const GradedAlgebra& r, const ObjectUnits& units,
                                                 const SectionData& section) {
  SeparabilityReport out;
  out.section = section;
  const Field& f = r.field();
  bool all = true;
  for (Arrow e : r.groupoid().objects()) {
    ObjectSeparability o;
    o.object = e;
    o.isotropy_size = r.groupoid().isotropy_arrows(e).size();
    const auto zb = component_center(r, units, e);
    o.center_dimension = zb.size();
    std::vector<Vec> images;
    for (const auto& z : zb) images.push_back(trace(r, section, e, z));
    const Matrix m = Matrix::from_columns(f, images, r.dim());
    o.trace_rank = rank(m);
    if (auto c = solve_linear(m, units.at(e))) {
      Vec z = r.zero();
      for (std::size_t k = 0; k < zb.size(); ++k) vec_axpy(f, z, (*c)[k], zb[k]);
      if (trace(r, section, e, z) != units.at(e)) throw Error("trace solution does not verify");
      o.trace_solution = std::move(z);
      o.verdict = Verdict::pass;
    } else {
      o.witness = o.trace_rank == 0 ? "trace image = 0" : "1 not in trace image";
      all = false;
    }
    out.objects.push_back(std::move(o));
  }
  out.verdict = all ? Verdict::pass : Verdict::fail;
  return out;
}

/// Generic entry point: computes units and sections, rejecting rings that
/// are not strongly graded.
inline SeparabilityReport separability_criterion(const GradedAlgebra& r) {
  const auto units = object_units(r);
  if (!units.ok()) throw PreconditionError("ring is not object unital: " + units.report.violations.front().axiom);
  const auto strong = is_strongly_graded(r, units);
  if (!strong.ok()) {
    throw PreconditionError("ring is not strongly graded at " + r.groupoid().name(strong.failing().front()));
  }
  return separability_criterion(r, units, generic_section(r, units));
}

/// Fast path for crossed products: a in A_e with sum_{s in G(e)} alpha_s(a) = 1.
inline std::optional<Vec> crossed_product_trace_element(const CrossedSystem& s, Arrow e) {
  const auto& a = s.fiber(e);
  Matrix m(s.field(), a.dim(), a.dim());
  for (Arrow x : s.groupoid().isotropy_arrows(e)) {
    const Matrix& ax = s.action(x);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = s.field().add(m(i, j), ax(i, j));
  }
  return solve_linear(m, a.one());
}

/// Criterion for a crossed-product presentation with the canonical section,
/// cross-checked against the crossed-product fast path (and the twisted one
/// when the system is twisted). Disagreement is a defect and throws.
inline SeparabilityReport separability_criterion(const CrossedProductPresentation& p) {
  const auto units = p.object_units();
  auto out = separability_criterion(p.algebra, units, canonical_section(p));
  const auto& s = p.system;
  for (Arrow e : s.groupoid().objects()) {
    const auto a = crossed_product_trace_element(s, e);
    if (a.has_value() != (out.at(e).verdict == Verdict::pass)) {
      throw Error("crossed-product fast path disagrees with the trace criterion at " + s.groupoid().name(e));
    }
    if (a) out.exhibited.emplace(e, *a);
  }
  if (check_twisted(s).ok()) {
    std::map<Arrow, bool> inv;
    for (Arrow e : s.groupoid().objects()) {
      const bool unit = !s.field().is_zero(s.field().from_int(static_cast<long long>(s.groupoid().isotropy_arrows(e).size())));
      if (unit != (out.at(e).verdict == Verdict::pass)) {
        throw Error("twisted fast path disagrees with the trace criterion at " + s.groupoid().name(e));
      }
      inv.emplace(e, unit);
    }
    out.isotropy_order_invertible = std::move(inv);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tensors in normal form: sum over composable (s, t) of a_{s,t} u_s (x) u_t
// with a_{s,t} in A_{r(s)}.

struct TensorElement {
  std::map<ArrowPair, Vec> coeff;  // zero coefficients are never stored
  friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

namespace detail {

inline void tensor_accumulate(const CrossedProductPresentation& p, TensorElement& x, ArrowPair at, const Vec& c) {
  const Field& f = p.algebra.field();
  if (is_zero_vec(f, c)) return;
  auto [it, inserted] = x.coeff.try_emplace(at, c);
  if (!inserted) {
    it->second = vec_add(f, it->second, c);
    if (is_zero_vec(f, it->second)) x.coeff.erase(it);
  }
}

}  // namespace detail

inline TensorElement tensor_add(const CrossedProductPresentation& p, TensorElement x, const TensorElement& y) {
  for (const auto& [k, c] : y.coeff) detail::tensor_accumulate(p, x, k, c);
  return x;
}

/// The tensor r (x) s of two elements of R.
inline TensorElement tensor_of(const CrossedProductPresentation& p, const Vec& r, const Vec& s) {
  const auto& sys = p.system;
  const auto& g = sys.groupoid();
  TensorElement out;
  for (const auto& [x, y] : g.composable_pairs()) {
    // r_x u_x (x) s_y u_y = r_x alpha_x(s_y) u_x (x) u_y
    const Vec rx = p.coefficient(r, x);
    const Vec sy = p.coefficient(s, y);
    const auto& a = sys.fiber(g.dst(x));
    detail::tensor_accumulate(p, out, {x, y}, a.mul(rx, sys.alpha(x, sy)));
  }
  return out;
}

/// Multiplication map: c u_s (x) u_t -> c beta_{s,t} u_{st}.
inline Vec mu(const CrossedProductPresentation& p, const TensorElement& x) {
  const auto& sys = p.system;
  const auto& g = sys.groupoid();
  Vec out = p.algebra.zero();
  for (const auto& [k, c] : x.coeff) {
    const auto& a = sys.fiber(g.dst(k.first));
    out = vec_add(p.algebra.field(), out, p.element(g.mul(k.first, k.second), a.mul(c, sys.beta(k.first, k.second))));
  }
  return out;
}

/// r * x: (a u_q)(c u_s (x) u_t) = a alpha_q(c) beta_{q,s} u_{qs} (x) u_t.
inline TensorElement left_mul(const CrossedProductPresentation& p, const Vec& r, const TensorElement& x) {
  const auto& sys = p.system;
  const auto& g = sys.groupoid();
  TensorElement out;
  for (Arrow q = 0; q < g.size(); ++q) {
    const Vec aq = p.coefficient(r, q);
    if (is_zero_vec(p.algebra.field(), aq)) continue;
    const auto& a = sys.fiber(g.dst(q));
    for (const auto& [k, c] : x.coeff) {
      if (!g.composable(q, k.first)) continue;
      const Vec coeff = a.mul(a.mul(aq, sys.alpha(q, c)), sys.beta(q, k.first));
      detail::tensor_accumulate(p, out, {g.mul(q, k.first), k.second}, coeff);
    }
  }
  return out;
}

/// x * r: (c u_s (x) u_t)(a u_q) = c alpha_s(alpha_t(a) beta_{t,q}) u_s (x) u_{tq}.
inline TensorElement right_mul(const CrossedProductPresentation& p, const TensorElement& x, const Vec& r) {
  const auto& sys = p.system;
  const auto& g = sys.groupoid();
  TensorElement out;
  for (Arrow q = 0; q < g.size(); ++q) {
    const Vec aq = p.coefficient(r, q);
    if (is_zero_vec(p.algebra.field(), aq)) continue;
    for (const auto& [k, c] : x.coeff) {
      const auto [s, t] = k;
      if (!g.composable(t, q)) continue;
      const auto& at = sys.fiber(g.dst(t));
      const auto& as = sys.fiber(g.dst(s));
      const Vec inner = at.mul(sys.alpha(t, aq), sys.beta(t, q));
      detail::tensor_accumulate(p, out, {s, g.mul(t, q)}, as.mul(c, sys.alpha(s, inner)));
    }
  }
  return out;
}

/// w_s = sum_i u^(i) (x) v^(i).
inline TensorElement w_tensor(const CrossedProductPresentation& p, const SectionData& section, Arrow s) {
  TensorElement out;
  for (const auto& pr : section.at(s)) out = tensor_add(p, out, tensor_of(p, pr.u, pr.v));
  return out;
}

// ---------------------------------------------------------------------------
// Casimir families.

using CasimirFamily = std::map<Arrow, TensorElement>;

/// x_e = sum over s in G(w, e) of gamma_s(r_w) w_s, w the least object of the
/// class of e and r_w the stored trace solution at w.
inline CasimirFamily casimir_construct(const CrossedProductPresentation& p, const SeparabilityReport& report) {
  if (report.verdict != Verdict::pass) throw PreconditionError("Casimir construction needs a passing criterion");
  const auto& g = p.system.groupoid();
  const auto comps = connected_components(g);
  CasimirFamily out;
  for (Arrow e : g.objects()) {
    const Arrow w = comps.representative_of(e);
    const Vec& rw = *report.at(w).trace_solution;
    TensorElement x;
    for (Arrow s : g.arrows_between(w, e)) {
      const Vec coeff = gamma(p.algebra, report.section, s, rw);
      x = tensor_add(p, x, left_mul(p, coeff, w_tensor(p, report.section, s)));
    }
    out.emplace(e, std::move(x));
  }
  return out;
}

/// mu(x_e) = 1_{R_e} for every e, and x_e a = a x_f for every basis vector a
/// of degree s with r(s) = e and d(s) = f.
inline ValidationReport casimir_verify(const CrossedProductPresentation& p, const CasimirFamily& x) {
  ValidationReport report;
  const auto& g = p.system.groupoid();
  for (Arrow e : g.objects()) {
    auto it = x.find(e);
    if (it == x.end()) {
      report.add("casimir-missing", {e});
      continue;
    }
    if (mu(p, it->second) != p.u(e)) report.add("casimir-mu", {e}, "mu(x_e) differs from 1 at " + g.name(e));
  }
  for (std::size_t i = 0; i < p.algebra.dim(); ++i) {
    const Arrow s = p.algebra.degree(i);
    const Arrow e = g.dst(s), f = g.src(s);
    if (!x.count(e) || !x.count(f)) continue;
    const Vec a = p.algebra.basis(i);
    if (right_mul(p, x.at(e), a) != left_mul(p, a, x.at(f))) {
      report.add("casimir-commutation", {e, f, i}, "x_e a differs from a x_f");
    }
  }
  return report;
}

struct TraceFromCasimir {
  std::map<Arrow, Vec> d;  // d_e in Z(R_e) with tr_e(d_e) = 1_{R_e}
};

/// Reverse direction for Casimir families supported on pairs (s, s^-1):
/// c_s = mu(component at (s, s^-1)), d_e = sum over sources f of c_{s_f} with
/// s_f the least arrow from f to e.
inline TraceFromCasimir trace_solution_from_casimir(const CrossedProductPresentation& p, const CasimirFamily& x,
                                                    const SectionData& section) {
  const auto& g = p.system.groupoid();
  for (const auto& [e, xe] : x) {
    for (const auto& [k, coeff] : xe.coeff) {
      if (k.second != g.inv(k.first) || g.dst(k.first) != e) {
        throw Error("shape not handled: Casimir component at (" + g.name(k.first) + ", " + g.name(k.second) + ")");
      }
    }
  }
  if (!casimir_verify(p, x).ok()) throw PreconditionError("Casimir family does not verify");
  TraceFromCasimir out;
  for (Arrow e : g.objects()) {
    const auto& xe = x.at(e);
    std::map<Arrow, Vec> c;
    for (const auto& [k, coeff] : xe.coeff) {
      TensorElement single;
      single.coeff.emplace(k, coeff);
      c.emplace(k.first, mu(p, single));
    }
    for (const auto& [s, cs] : c) {
      if (!central_in_component(p.algebra, e, cs)) throw Error("Casimir coefficient is not central");
    }
    std::map<Arrow, Arrow> least_from;  // source object -> least arrow to e
    for (Arrow s = 0; s < g.size(); ++s) {
      if (g.dst(s) == e) least_from.try_emplace(g.src(s), s);
    }
    Vec d = p.algebra.zero();
    for (const auto& [f, s] : least_from) {
      if (auto it = c.find(s); it != c.end()) d = vec_add(p.algebra.field(), d, it->second);
    }
    if (trace(p.algebra, section, e, d) != p.u(e)) throw Error("derived trace element fails tr_e(d_e) = 1");
    out.d.emplace(e, std::move(d));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracles for the existence of a Casimir family.

/// Flat coordinates of a family: for every object e and composable pair
/// (s, t), the coefficient vector in A_{r(s)}.
struct TensorLayout {
  std::vector<std::pair<Arrow, ArrowPair>> slots;  // (object, pair)
  std::vector<std::size_t> offsets;
  std::size_t size = 0;
};

inline TensorLayout family_layout(const CrossedProductPresentation& p) {
  const auto& g = p.system.groupoid();
  TensorLayout l;
  for (Arrow e : g.objects()) {
    for (const auto& k : g.composable_pairs()) {
      l.slots.emplace_back(e, k);
      l.offsets.push_back(l.size);
      l.size += p.system.fiber(g.dst(k.first)).dim();
    }
  }
  return l;
}

inline CasimirFamily family_from_coordinates(const CrossedProductPresentation& p, const TensorLayout& l, const Vec& c) {
  CasimirFamily out;
  for (Arrow e : p.system.groupoid().objects()) out[e];
  for (std::size_t k = 0; k < l.slots.size(); ++k) {
    const auto& [e, pair] = l.slots[k];
    const std::size_t d = p.system.fiber(p.system.groupoid().dst(pair.first)).dim();
    Vec v(c.begin() + static_cast<long>(l.offsets[k]), c.begin() + static_cast<long>(l.offsets[k] + d));
    detail::tensor_accumulate(p, out[e], pair, v);
  }
  return out;
}

/// Existence of a Casimir family decided as one affine linear system in the
/// coordinates of all x_e.
inline std::optional<CasimirFamily> solve_casimir_linear(const CrossedProductPresentation& p) {
  const Field& f = p.algebra.field();
  const auto l = family_layout(p);
  // Evaluate the affine map coordinates -> (mu(x_e) - 1, x_e a - a x_f) on
  // the zero family and on every coordinate vector.
  auto evaluate = [&](const Vec& c) {
    const auto x = family_from_coordinates(p, l, c);
    Vec out;
    for (const auto& [e, xe] : x) {
      const Vec m = mu(p, xe);
      out.insert(out.end(), m.begin(), m.end());
    }
    const auto& g = p.system.groupoid();
    for (std::size_t i = 0; i < p.algebra.dim(); ++i) {
      const Arrow s = p.algebra.degree(i);
      const Vec a = p.algebra.basis(i);
      const auto lhs = right_mul(p, x.at(g.dst(s)), a);
      const auto rhs = left_mul(p, a, x.at(g.src(s)));
      // Flatten lhs - rhs in layout order (slots of object dst(s)).
      for (std::size_t k = 0; k < l.slots.size(); ++k) {
        if (l.slots[k].first != g.dst(s)) continue;
        const auto& pair = l.slots[k].second;
        const std::size_t d = p.system.fiber(g.dst(pair.first)).dim();
        Vec lv = zero_vec(f, d), rv = zero_vec(f, d);
        if (auto it = lhs.coeff.find(pair); it != lhs.coeff.end()) lv = it->second;
        if (auto it = rhs.coeff.find(pair); it != rhs.coeff.end()) rv = it->second;
        const Vec diff = vec_sub(f, lv, rv);
        out.insert(out.end(), diff.begin(), diff.end());
      }
    }
    return out;
  };
  const Vec base = evaluate(zero_vec(f, l.size));
  Vec target;
  for (Arrow e : p.system.groupoid().objects()) {
    const Vec u = p.u(e);
    target.insert(target.end(), u.begin(), u.end());
  }
  target.resize(base.size(), f.zero());
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < l.size; ++j) cols.push_back(vec_sub(f, evaluate(unit_vec(f, l.size, j)), base));
  const Vec rhs = vec_sub(f, target, base);
  auto sol = solve_linear(Matrix::from_columns(f, cols, rhs.size()), rhs);
  if (!sol) return std::nullopt;
  return family_from_coordinates(p, l, *sol);
}

/// Brute force over every family (finite fields only). Returns the number of
/// passing families, stopping after `stop_after` hits; nullopt when the
/// space exceeds `limit` elements.
inline std::optional<std::uint64_t> exhaustive_casimir_search(const CrossedProductPresentation& p,
                                                              std::uint64_t limit = 1u << 20,
                                                              std::uint64_t stop_after = ~std::uint64_t{0}) {
  const Field& f = p.algebra.field();
  if (!f.is_finite()) return std::nullopt;
  const auto l = family_layout(p);
  const std::uint64_t q = f.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < l.size; ++i) {
    if (total > limit / q) return std::nullopt;
    total *= q;
  }
  std::uint64_t hits = 0;
  for (std::uint64_t idx = 0; idx < total && hits < stop_after; ++idx) {
    Vec c(l.size);
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < l.size; ++i) {
      c[i] = f.element_at(rest % q);
      rest /= q;
    }
    if (casimir_verify(p, family_from_coordinates(p, l, c)).ok()) ++hits;
  }
  return hits;
}

/// Size of the tensor space searched by `exhaustive_casimir_search`.
inline std::optional<std::uint64_t> casimir_search_space(const CrossedProductPresentation& p) {
  const Field& f = p.algebra.field();
  if (!f.is_finite()) return std::nullopt;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < family_layout(p).size; ++i) total *= f.order();
  return total;
}

// ---------------------------------------------------------------------------
// Identities of the gamma maps, checked on full bases.

/// Reports:
///   gamma-composition   gamma_s(gamma_t(x)) against gamma_st(x_{d(t)}) 1_{r(s)}, or 0   {s, t, k}
///   center-isomorphism  gamma_s: Z(R_{d(s)}) -> Z(R_{r(s)}) unital, multiplicative, bijective  {s, ...}
///   commutation         a x = gamma_s(x) a for basis a of degree s                     {s, i, k}
///   uniqueness          the central t with t a = a x for all such a is gamma_s(x)      {s, k}
///   w-shuttle           a w_t = w_{st} a for basis a of degree s                       {s, t, i}
inline ValidationReport verify_gamma_identities(const CrossedProductPresentation& p, const SectionData& section) {
  ValidationReport report;
  const auto& r = p.algebra;
  const auto& g = r.groupoid();
  const Field& f = r.field();
  const auto units = p.object_units();
  std::map<Arrow, std::vector<Vec>> zc;
  std::vector<Vec> z0;  // basis of Z(R_0)
  std::vector<Arrow> z0_object;
  for (Arrow e : g.objects()) {
    zc[e] = component_center(r, units, e);
    for (const auto& z : zc[e]) {
      z0.push_back(z);
      z0_object.push_back(e);
    }
  }
  for (Arrow s = 0; s < g.size(); ++s) {
    for (Arrow t = 0; t < g.size(); ++t) {
      for (std::size_t k = 0; k < z0.size(); ++k) {
        const Vec lhs = gamma_raw(r, section, s, gamma_raw(r, section, t, z0[k]));
        Vec rhs = r.zero();
        if (g.composable(s, t)) {
          const Vec xd = r.part(z0[k], g.src(t));
          rhs = r.mul(gamma_raw(r, section, g.mul(s, t), xd), units.at(g.dst(s)));
        }
        if (lhs != rhs) report.add("gamma-composition", {s, t, k});
      }
    }
  }
  for (Arrow s = 0; s < g.size(); ++s) {
    const Arrow d = g.src(s), e = g.dst(s);
    const auto& src = zc[d];
    const auto& dst = zc[e];
    if (gamma_raw(r, section, s, units.at(d)) != units.at(e)) report.add("center-isomorphism", {s}, "not unital");
    std::vector<Vec> images;
    for (const auto& z : src) {
      const Vec img = gamma_raw(r, section, s, z);
      if (!central_in_component(r, e, img)) report.add("center-isomorphism", {s}, "image not central");
      images.push_back(img);
    }
    if (src.size() != dst.size() || (!images.empty() && rank(Matrix::from_columns(f, images, r.dim())) != dst.size())) {
      report.add("center-isomorphism", {s}, "not bijective");
    }
    for (std::size_t a = 0; a < src.size(); ++a)
      for (std::size_t b = 0; b < src.size(); ++b) {
        if (r.mul(images[a], images[b]) != gamma_raw(r, section, s, r.mul(src[a], src[b]))) {
          report.add("center-isomorphism", {s, a, b}, "not multiplicative");
        }
      }
    // Commutation and uniqueness on Z(R_{d(s)}).
    for (std::size_t k = 0; k < src.size(); ++k) {
      const Vec gx = gamma_raw(r, section, s, src[k]);
      for (auto i : r.component(s)) {
        const Vec a = r.basis(i);
        if (r.mul(a, src[k]) != r.mul(gx, a)) report.add("commutation", {s, i, k});
      }
      // Solve for t = sum c_j z_j in Z(R_e) with t a = a x for all basis a of R_s.
      std::vector<Vec> cols;
      for (const auto& z : dst) {
        Vec col;
        for (auto i : r.component(s)) {
          const Vec v = r.mul(z, r.basis(i));
          col.insert(col.end(), v.begin(), v.end());
        }
        cols.push_back(col);
      }
      Vec rhs;
      for (auto i : r.component(s)) {
        const Vec v = r.mul(r.basis(i), src[k]);
        rhs.insert(rhs.end(), v.begin(), v.end());
      }
      auto sol = cols.empty() ? std::nullopt : solve_affine(Matrix::from_columns(f, cols, rhs.size()), rhs);
      if (!sol || !sol->kernel.empty()) {
        report.add("uniqueness", {s, k}, "no unique central solution");
        continue;
      }
      Vec t = r.zero();
      for (std::size_t j = 0; j < dst.size(); ++j) vec_axpy(f, t, sol->particular[j], dst[j]);
      if (t != gx) report.add("uniqueness", {s, k}, "solution differs from gamma");
    }
  }
  for (const auto& [s, t] : g.composable_pairs()) {
    const TensorElement wt = w_tensor(p, section, t);
    const TensorElement wst = w_tensor(p, section, g.mul(s, t));
    for (auto i : r.component(s)) {
      const Vec a = r.basis(i);
      if (left_mul(p, a, wt) != right_mul(p, wst, a)) report.add("w-shuttle", {s, t, i});
    }
  }
  return report;
}

}  // namespace gring
