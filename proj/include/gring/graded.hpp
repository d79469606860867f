#pragma once

// Groupoid-graded algebras with a homogeneous basis.
//
// Each basis vector carries a degree (an arrow); the component R_s is the
// span of the basis vectors of degree s and is never recomputed from
// coefficients.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gring/algebra.hpp"
#include "gring/groupoid.hpp"

namespace gring {

class GradedAlgebra {
 public:
  GradedAlgebra(FiniteGroupoid groupoid, StructureConstants table, std::vector<Arrow> degree)
      : groupoid_(std::move(groupoid)), table_(std::move(table)), degree_(std::move(degree)) {
    if (degree_.size() != table_.dim()) throw StructuralError("degree map length differs from the algebra dimension");
    components_.assign(groupoid_.size(), {});
    for (std::size_t i = 0; i < degree_.size(); ++i) {
      if (degree_[i] >= groupoid_.size()) {
        throw StructuralError("degree of basis vector " + std::to_string(i) + " is not an arrow");
      }
      components_[degree_[i]].push_back(i);
    }
  }

  const FiniteGroupoid& groupoid() const { return groupoid_; }
  const StructureConstants& table() const { return table_; }
  const Field& field() const { return table_.field(); }
  std::size_t dim() const { return table_.dim(); }
  Arrow degree(std::size_t basis_index) const { return degree_.at(basis_index); }
  const std::vector<Arrow>& degrees() const { return degree_; }
  /// Basis indices spanning R_s.
  const std::vector<std::size_t>& component(Arrow s) const { return components_.at(s); }

  Vec zero() const { return zero_vec(field(), dim()); }
  Vec basis(std::size_t i) const { return unit_vec(field(), dim(), i); }
  Vec mul(const Vec& a, const Vec& b) const { return table_.mul(a, b); }

  /// Degrees carrying a nonzero coefficient of v.
  std::set<Arrow> support(const Vec& v) const {
    std::set<Arrow> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!field().is_zero(v[i])) out.insert(degree_[i]);
    }
    return out;
  }

  bool is_homogeneous_of(const Vec& v, Arrow s) const {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!field().is_zero(v[i]) && degree_[i] != s) return false;
    }
    return true;
  }

  /// The degree-s part of v.
  Vec part(const Vec& v, Arrow s) const {
    Vec out = zero();
    for (auto i : component(s)) out[i] = v[i];
    return out;
  }

  /// A vector supported on R_s from coordinates in the component basis.
  Vec embed(Arrow s, const Vec& local) const {
    Vec out = zero();
    const auto& c = component(s);
    if (local.size() != c.size()) throw StructuralError("component coordinates have the wrong length");
    for (std::size_t k = 0; k < c.size(); ++k) out[c[k]] = local[k];
    return out;
  }

  /// Coordinates of v (assumed in R_s) in the component basis.
  Vec local(Arrow s, const Vec& v) const {
    Vec out;
    for (auto i : component(s)) out.push_back(v[i]);
    return out;
  }

 private:
  FiniteGroupoid groupoid_;
  StructureConstants table_;
  std::vector<Arrow> degree_;
  std::vector<std::vector<std::size_t>> components_;
};

/// Grading law on every basis pair, plus associativity of the algebra.
inline ValidationReport check_grading(const GradedAlgebra& r) {
  ValidationReport report;
  const auto& g = r.groupoid();
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t j = 0; j < r.dim(); ++j) {
      const auto& prod = r.table().product(i, j);
      const Arrow s = r.degree(i), t = r.degree(j);
      if (!g.composable(s, t)) {
        if (!prod.empty()) report.add("grading", {i, j}, "product of non-composable degrees " + g.name(s) + ", " + g.name(t) + " is nonzero");
        continue;
      }
      const Arrow st = g.mul(s, t);
      for (const auto& term : prod) {
        if (r.degree(term.index) != st) {
          report.add("grading", {i, j}, "product leaves degree " + g.name(st));
          break;
        }
      }
    }
  }
  check_associativity(r.table(), report);
  return report;
}

/// Two-sided identity of the subring spanned by the given components, if any.
inline std::optional<Vec> subring_identity(const GradedAlgebra& r, const std::vector<Arrow>& arrows) {
  std::vector<std::size_t> idx;
  for (Arrow s : arrows)
    for (auto i : r.component(s)) idx.push_back(i);
  const Field& f = r.field();
  const std::size_t n = r.dim();
  if (idx.empty()) return r.zero();
  // Unknown x = sum_k x_k b_idx[k]; equations x b = b and b x = b for every
  // basis vector b of the subring.
  Matrix m(f, 2 * idx.size() * n, idx.size());
  Vec rhs = zero_vec(f, 2 * idx.size() * n);
  for (std::size_t q = 0; q < idx.size(); ++q) {
    const std::size_t b = idx[q];
    for (std::size_t k = 0; k < idx.size(); ++k) {
      for (const auto& term : r.table().product(idx[k], b)) m(2 * q * n + term.index, k) = term.coeff;
      for (const auto& term : r.table().product(b, idx[k])) m((2 * q + 1) * n + term.index, k) = term.coeff;
    }
    rhs[2 * q * n + b] = f.one();
    rhs[(2 * q + 1) * n + b] = f.one();
  }
  auto sol = solve_linear(m, rhs);
  if (!sol) return std::nullopt;
  Vec out = r.zero();
  for (std::size_t k = 0; k < idx.size(); ++k) out[idx[k]] = (*sol)[k];
  return out;
}

struct ObjectUnits {
  /// 1_{R_e} for every object e where R_e is unital (0 when R_e = 0).
  std::map<Arrow, Vec> units;
  ValidationReport report;
  bool ok() const { return report.ok(); }
  const Vec& at(Arrow e) const { return units.at(e); }
};

/// Identity of each R_e, then the object-unitality law on every homogeneous
/// basis vector. Zero components are recorded with unit 0 and reported.
inline ObjectUnits object_units(const GradedAlgebra& r) {
  ObjectUnits out;
  const auto& g = r.groupoid();
  for (Arrow e : g.objects()) {
    auto u = subring_identity(r, {e});
    if (!u) {
      out.report.add("unital-component", {e}, "component at " + g.name(e) + " has no identity");
      continue;
    }
    if (is_zero_vec(r.field(), *u)) out.report.add("zero-component", {e}, "component at " + g.name(e) + " is zero");
    out.units.emplace(e, std::move(*u));
  }
  for (std::size_t i = 0; i < r.dim(); ++i) {
    const Arrow s = r.degree(i);
    auto lu = out.units.find(g.dst(s));
    auto ru = out.units.find(g.src(s));
    if (lu == out.units.end() || ru == out.units.end()) continue;
    const Vec b = r.basis(i);
    if (r.mul(lu->second, b) != b || r.mul(b, ru->second) != b) {
      out.report.add("object-unitality", {i}, "object units do not fix basis vector of degree " + g.name(s));
    }
  }
  return out;
}

/// 1 of R_{G(E)} equals the sum of the 1_{R_e}, e in E.
inline ValidationReport check_unit_sum(const GradedAlgebra& r, const ObjectUnits& units,
                                       const std::vector<Arrow>& objects) {
  ValidationReport report;
  const auto sub = restrict_to_objects(r.groupoid(), objects);
  const auto id = subring_identity(r, sub.embedding);
  Vec sum = r.zero();
  for (Arrow e : objects) sum = vec_add(r.field(), sum, units.at(e));
  if (!id) {
    report.add("unit-sum", objects, "restricted subring has no identity");
  } else if (*id != sum) {
    report.add("unit-sum", objects, "identity of the restricted subring differs from the sum of object units");
  }
  return report;
}

/// The algebra with unit sum of all object units.
inline StructureConstantAlgebra as_unital_algebra(const GradedAlgebra& r, const ObjectUnits& units) {
  Vec one = r.zero();
  for (const auto& [e, u] : units.units) one = vec_add(r.field(), one, u);
  return {r.table(), one};
}

/// R_e as an algebra in its own right, in the component basis.
inline StructureConstantAlgebra component_algebra(const GradedAlgebra& r, Arrow e, const Vec& unit) {
  const auto& c = r.component(e);
  StructureConstants t(r.field(), c.size());
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = 0; b < c.size(); ++b) t.set(a, b, r.local(e, r.table().basis_product(c[a], c[b])));
  return {std::move(t), r.local(e, unit)};
}

// ---------------------------------------------------------------------------
// Support subgroupoid.

struct SupportResult {
  Subgroupoid support;
  std::vector<Arrow> dropped_objects;
  ValidationReport report;  // "direct-sum" when a dropped arrow has a nonzero component
  bool wide() const { return dropped_objects.empty(); }
};

inline SupportResult support_subgroupoid(const GradedAlgebra& r, const ObjectUnits& units) {
  const auto& g = r.groupoid();
  std::vector<Arrow> keep, dropped;
  for (Arrow e : g.objects()) {
    auto it = units.units.find(e);
    if (it != units.units.end() && !is_zero_vec(r.field(), it->second)) {
      keep.push_back(e);
    } else {
      dropped.push_back(e);
    }
  }
  SupportResult out{keep.empty() ? Subgroupoid{} : restrict_to_objects(g, keep), dropped, {}};
  std::vector<bool> in(g.size(), false);
  for (Arrow a : out.support.embedding) in[a] = true;
  for (Arrow a = 0; a < g.size(); ++a) {
    if (!in[a] && !r.component(a).empty()) {
      out.report.add("direct-sum", {a}, "arrow " + g.name(a) + " outside the support has a nonzero component");
    }
  }
  return out;
}

/// R regraded by its support subgroupoid. Used to pass to nonzero units
/// automatically; `warnings` lists what was dropped.
struct Restriction {
  GradedAlgebra algebra;
  std::vector<Arrow> embedding;  // arrows of the new groupoid in the old one
  std::vector<std::string> warnings;
};

inline Restriction restrict_to_support(const GradedAlgebra& r, const ObjectUnits& units) {
  auto s = support_subgroupoid(r, units);
  if (!s.report.ok()) throw StructuralError("algebra is not the direct sum over its support subgroupoid");
  if (s.support.embedding.empty()) throw StructuralError("every object component is zero");
  std::vector<std::string> warnings;
  for (Arrow e : s.dropped_objects) {
    warnings.push_back("object " + r.groupoid().name(e) + " has zero unit; restricted to the support subgroupoid");
  }
  std::vector<Arrow> local(r.groupoid().size(), r.groupoid().size());
  for (std::size_t k = 0; k < s.support.embedding.size(); ++k) local[s.support.embedding[k]] = k;
  std::vector<Arrow> deg;
  for (std::size_t i = 0; i < r.dim(); ++i) deg.push_back(local[r.degree(i)]);
  return {GradedAlgebra(s.support.groupoid, r.table(), deg), s.support.embedding, std::move(warnings)};
}

// ---------------------------------------------------------------------------
// Strong grading.

/// u^(i) in R_s and v^(i) in R_{s^-1} with sum u^(i) v^(i) = 1_{R_{r(s)}}.
struct SectionPair {
  Vec u;
  Vec v;
};

struct SectionData {
  std::map<Arrow, std::vector<SectionPair>> pairs;
  const std::vector<SectionPair>& at(Arrow s) const { return pairs.at(s); }
};

struct StrongGradingResult {
  std::map<Arrow, bool> per_arrow;
  SectionData section;
  bool ok() const {
    for (const auto& [s, v] : per_arrow)
      if (!v) return false;
    return true;
  }
  std::vector<Arrow> failing() const {
    std::vector<Arrow> out;
    for (const auto& [s, v] : per_arrow)
      if (!v) out.push_back(s);
    return out;
  }
};

/// Whether 1_{R_{r(s)}} lies in R_s R_{s^-1}; returns the decomposition.
inline std::optional<std::vector<SectionPair>> unit_decomposition(const GradedAlgebra& r, const ObjectUnits& units,
                                                                  Arrow s) {
  const auto& g = r.groupoid();
  const Arrow si = g.inv(s);
  const Vec& target = units.at(g.dst(s));
  std::vector<std::pair<std::size_t, std::size_t>> index;
  std::vector<Vec> cols;
  for (auto i : r.component(s)) {
    for (auto j : r.component(si)) {
      index.emplace_back(i, j);
      cols.push_back(r.table().basis_product(i, j));
    }
  }
  if (cols.empty()) {
    if (is_zero_vec(r.field(), target)) return std::vector<SectionPair>{};
    return std::nullopt;
  }
  auto sol = solve_linear(Matrix::from_columns(r.field(), cols, r.dim()), target);
  if (!sol) return std::nullopt;
  // Group the terms by the R_s factor: u = b_i, v = sum_j c_ij b_j.
  std::map<std::size_t, Vec> by_left;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (r.field().is_zero((*sol)[k])) continue;
    auto [it, inserted] = by_left.try_emplace(index[k].first, r.zero());
    it->second[index[k].second] = (*sol)[k];
  }
  std::vector<SectionPair> out;
  for (auto& [i, v] : by_left) out.push_back({r.basis(i), std::move(v)});
  return out;
}

inline StrongGradingResult is_strongly_graded(const GradedAlgebra& r, const ObjectUnits& units) {
  StrongGradingResult out;
  for (Arrow s = 0; s < r.groupoid().size(); ++s) {
    auto d = unit_decomposition(r, units, s);
    out.per_arrow[s] = d.has_value();
    if (d) out.section.pairs[s] = std::move(*d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Object invertibility.

/// The unique s in R_{deg^-1} with x s = 1_{R_{r(deg)}} and s x = 1_{R_{d(deg)}}.
/// Throws if the solution is not unique, which cannot happen in an
/// object-unital ring.
inline std::optional<Vec> object_inverse(const GradedAlgebra& r, const ObjectUnits& units, const Vec& x, Arrow deg) {
  if (!r.is_homogeneous_of(x, deg)) throw PreconditionError("object_inverse needs a homogeneous element of the given degree");
  const auto& g = r.groupoid();
  const Arrow di = g.inv(deg);
  const auto& comp = r.component(di);
  const std::size_t n = r.dim();
  const Field& f = r.field();
  const Vec& left_target = units.at(g.dst(deg));
  const Vec& right_target = units.at(g.src(deg));
  if (comp.empty()) {
    if (is_zero_vec(f, left_target) && is_zero_vec(f, right_target)) return r.zero();
    return std::nullopt;
  }
  Matrix m(f, 2 * n, comp.size());
  for (std::size_t k = 0; k < comp.size(); ++k) {
    const Vec b = r.basis(comp[k]);
    const Vec xb = r.mul(x, b);
    const Vec bx = r.mul(b, x);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, k) = xb[i];
      m(n + i, k) = bx[i];
    }
  }
  Vec rhs = left_target;
  rhs.insert(rhs.end(), right_target.begin(), right_target.end());
  auto sol = solve_affine(m, rhs);
  if (!sol) return std::nullopt;
  if (!sol->kernel.empty()) throw Error("object inverse is not unique; the ring is not object unital");
  return r.embed(di, sol->particular);
}

struct CrossedProductCertificate {
  Verdict verdict = Verdict::not_certified;
  std::map<Arrow, Vec> units;     // u_s
  std::map<Arrow, Vec> inverses;  // v_s, the object inverse of u_s
  std::vector<Arrow> uncertified;
};

/// Searches every R_s for an object-invertible element: basis vectors first,
/// then `random_trials` combinations with small coefficients. u_e = 1_{R_e}.
inline CrossedProductCertificate is_object_crossed_product(const GradedAlgebra& r, const ObjectUnits& units,
                                                           std::uint64_t seed = 0, std::size_t random_trials = 256) {
  CrossedProductCertificate out;
  const auto& g = r.groupoid();
  const Field& f = r.field();
  Rng rng(seed);
  for (Arrow s = 0; s < g.size(); ++s) {
    if (g.is_object(s)) {
      out.units[s] = units.at(s);
      out.inverses[s] = units.at(s);
      continue;
    }
    const auto& comp = r.component(s);
    bool found = false;
    auto attempt = [&](const Vec& x) {
      if (is_zero_vec(f, x)) return false;
      auto inv = object_inverse(r, units, x, s);
      if (!inv) return false;
      out.units[s] = x;
      out.inverses[s] = std::move(*inv);
      return true;
    };
    for (auto i : comp) {
      if ((found = attempt(r.basis(i)))) break;
    }
    for (std::size_t t = 0; !found && t < random_trials && !comp.empty(); ++t) {
      Vec x = r.zero();
      for (auto i : comp) x[i] = f.random_small(rng);
      found = attempt(x);
    }
    if (!found) out.uncertified.push_back(s);
  }
  out.verdict = out.uncertified.empty() ? Verdict::pass : Verdict::not_certified;
  return out;
}

// ---------------------------------------------------------------------------
// Degree-zero part.

inline std::vector<Arrow> identity_degrees(const GradedAlgebra& r) { return r.groupoid().objects(); }

/// Truncation to R_0 = sum of the R_e.
inline Vec project_to_R0(const GradedAlgebra& r, const Vec& x) {
  Vec out = r.zero();
  for (Arrow e : r.groupoid().objects())
    for (auto i : r.component(e)) out[i] = x[i];
  return out;
}

/// The truncation fixes R_0 and is an R_0-bimodule map, checked on basis
/// probes p in R_0 and all basis vectors x: P(p x) = p P(x), P(x p) = P(x) p.
inline ValidationReport verify_R0_splitting(const GradedAlgebra& r) {
  ValidationReport report;
  std::vector<std::size_t> zero_basis;
  for (Arrow e : r.groupoid().objects())
    for (auto i : r.component(e)) zero_basis.push_back(i);
  for (auto p : zero_basis) {
    const Vec bp = r.basis(p);
    if (project_to_R0(r, bp) != bp) report.add("splitting", {p}, "projection moves an element of degree zero");
    for (std::size_t i = 0; i < r.dim(); ++i) {
      const Vec x = r.basis(i);
      const Vec px = project_to_R0(r, x);
      if (project_to_R0(r, r.mul(bp, x)) != r.mul(bp, px)) report.add("left-linear", {p, i});
      if (project_to_R0(r, r.mul(x, bp)) != r.mul(px, bp)) report.add("right-linear", {i, p});
    }
  }
  return report;
}

}  // namespace gring
