#pragma once

// Finite-dimensional associative algebras given by structure constants.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gring/irreducible.hpp"
#include "gring/linalg.hpp"
#include "gring/report.hpp"

namespace gring {

using AlgebraElement = Vec;

/// One nonzero term k -> c of a sparse product vector.
struct Term {
  std::size_t index;
  Elem coeff;
  friend bool operator==(const Term&, const Term&) = default;
};
using SparseVec = std::vector<Term>;

/// b_i * b_j = sum_k c[i][j][k] b_k, stored sparsely per basis pair.
class StructureConstants {
 public:
  StructureConstants(Field field, std::size_t dim)
      : field_(std::move(field)), dim_(dim), table_(dim * dim) {}

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }

  void set(std::size_t i, std::size_t j, const Vec& product) {
    check(i, j);
    if (product.size() != dim_) throw StructuralError("product vector has wrong length");
    SparseVec s;
    for (std::size_t k = 0; k < dim_; ++k) {
      if (!field_.is_zero(product[k])) s.push_back({k, product[k]});
    }
    table_[i * dim_ + j] = std::move(s);
  }

  void add_term(std::size_t i, std::size_t j, std::size_t k, const Elem& c) {
    check(i, j);
    if (k >= dim_) throw StructuralError("structure constant index out of range");
    auto& s = table_[i * dim_ + j];
    for (auto it = s.begin(); it != s.end(); ++it) {
      if (it->index == k) {
        it->coeff = field_.add(it->coeff, c);
        if (field_.is_zero(it->coeff)) s.erase(it);
        return;
      }
      if (it->index > k) {
        if (!field_.is_zero(c)) s.insert(it, {k, c});
        return;
      }
    }
    if (!field_.is_zero(c)) s.push_back({k, c});
  }

  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  Vec basis_product(std::size_t i, std::size_t j) const {
    Vec v = zero_vec(field_, dim_);
    for (const auto& t : product(i, j)) v[t.index] = t.coeff;
    return v;
  }

  Vec mul(const Vec& a, const Vec& b) const {
    if (a.size() != dim_ || b.size() != dim_) throw StructuralError("algebra element has wrong length");
    Vec r = zero_vec(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (field_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (field_.is_zero(b[j])) continue;
        const auto& s = product(i, j);
        if (s.empty()) continue;
        const Elem ab = field_.mul(a[i], b[j]);
        for (const auto& t : s) r[t.index] = field_.add(r[t.index], field_.mul(ab, t.coeff));
      }
    }
    return r;
  }

  /// Matrix of x -> a*x (left = true) or x -> x*a.
  Matrix multiplication_matrix(const Vec& a, bool left) const {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < dim_; ++j) {
      const Vec b = unit_vec(field_, dim_, j);
      cols.push_back(left ? mul(a, b) : mul(b, a));
    }
    return Matrix::from_columns(field_, cols, dim_);
  }

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) throw StructuralError("structure constant index out of range");
  }
  Field field_;
  std::size_t dim_;
  std::vector<SparseVec> table_;
};

/// A unital algebra: structure constants plus the coordinates of 1.
class StructureConstantAlgebra {
 public:
  StructureConstantAlgebra(StructureConstants table, Vec unit) : table_(std::move(table)), unit_(std::move(unit)) {
    if (unit_.size() != table_.dim()) throw StructuralError("unit vector has wrong length");
  }

  const Field& field() const { return table_.field(); }
  std::size_t dim() const { return table_.dim(); }
  const StructureConstants& table() const { return table_; }
  const Vec& one() const { return unit_; }
  Vec zero() const { return zero_vec(field(), dim()); }
  Vec basis(std::size_t i) const { return unit_vec(field(), dim(), i); }
  Vec mul(const Vec& a, const Vec& b) const { return table_.mul(a, b); }

  friend bool operator==(const StructureConstantAlgebra&, const StructureConstantAlgebra&) = default;

 private:
  StructureConstants table_;
  Vec unit_;
};

/// A subspace of an algebra, stored as its reduced echelon basis.
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient_dim, const std::vector<Vec>& spanning)
      : field_(std::move(field)), ambient_(ambient_dim), basis_(echelon_basis(field_, spanning, ambient_dim)) {}

  std::size_t dimension() const { return basis_.size(); }
  std::size_t ambient_dimension() const { return ambient_; }
  const std::vector<Vec>& basis() const { return basis_; }
  bool contains(const Vec& v) const {
    if (is_zero_vec(field_, v)) return true;
    if (basis_.empty()) return false;
    return coordinates(field_, basis_, v).has_value();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vec> basis_;
};

// ---------------------------------------------------------------------------

/// Adds an "associativity" violation for every basis triple (i, j, k) with
/// (b_i b_j) b_k != b_i (b_j b_k).
inline void check_associativity(const StructureConstants& t, ValidationReport& report) {
  const Field& f = t.field();
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        // (b_i b_j) b_k = sum_l c_ij^l b_l b_k
        Vec left = zero_vec(f, n);
        for (const auto& term : t.product(i, j)) {
          for (const auto& u : t.product(term.index, k)) left[u.index] = f.add(left[u.index], f.mul(term.coeff, u.coeff));
        }
        Vec right = zero_vec(f, n);
        for (const auto& term : t.product(j, k)) {
          for (const auto& u : t.product(i, term.index)) right[u.index] = f.add(right[u.index], f.mul(term.coeff, u.coeff));
        }
        if (left != right) report.add("associativity", {i, j, k});
      }
    }
  }
}

/// Associativity on every basis triple, unit laws on every basis vector, and
/// nonvanishing of 1.
inline ValidationReport validate_algebra(const StructureConstantAlgebra& a) {
  ValidationReport report;
  const auto& t = a.table();
  const Field& f = a.field();
  const std::size_t n = a.dim();
  if (n == 0 || is_zero_vec(f, a.one())) report.add("nonzero", {}, "algebra is the zero ring");
  check_associativity(t, report);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec b = unit_vec(f, n, i);
    if (t.mul(a.one(), b) != b || t.mul(b, a.one()) != b) report.add("unit", {i});
  }
  return report;
}

/// Z(A): all x with x*b_i = b_i*x for every basis vector.
inline Subspace center(const StructureConstantAlgebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const auto& t = a.table();
  Matrix m(f, n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t col = 0; col < n; ++col) {
      // Column `col` of the block for b_i: [b_col, b_i] = b_col b_i - b_i b_col.
      for (const auto& term : t.product(col, i)) m(i * n + term.index, col) = f.add(m(i * n + term.index, col), term.coeff);
      for (const auto& term : t.product(i, col)) m(i * n + term.index, col) = f.sub(m(i * n + term.index, col), term.coeff);
    }
  }
  return Subspace(f, n, kernel(m));
}

/// Two-sided inverse of `x`, if any.
inline std::optional<Vec> invert(const StructureConstantAlgebra& a, const Vec& x) {
  auto y = solve_linear(a.table().multiplication_matrix(x, true), a.one());
  if (!y) return std::nullopt;
  if (a.mul(*y, x) != a.one()) return std::nullopt;
  return y;
}

/// Least two-sided ideal containing `gens`.
inline Subspace two_sided_ideal(const StructureConstantAlgebra& a, const std::vector<Vec>& gens) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  IncrementalSpan span(f, n);
  std::vector<Vec> queue;
  for (const auto& g : gens)
    if (span.insert(g)) queue.push_back(g);
  // Every new vector is multiplied by the basis on both sides once.
  while (!queue.empty() && !span.full()) {
    const Vec v = std::move(queue.back());
    queue.pop_back();
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < n; ++k)
      if (!f.is_zero(v[k])) support.push_back(k);
    for (std::size_t i = 0; i < n && !span.full(); ++i) {
      for (bool left : {false, true}) {
        Vec w = a.zero();
        for (std::size_t k : support) {
          for (const auto& t : left ? a.table().product(i, k) : a.table().product(k, i)) {
            w[t.index] = f.add(w[t.index], f.mul(v[k], t.coeff));
          }
        }
        if (span.insert(w)) queue.push_back(std::move(w));
      }
    }
  }
  if (!span.full()) return Subspace(f, n, span.rows());
  std::vector<Vec> all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vec(f, n, i));
  return Subspace(f, n, all);
}

/// Minimal polynomial of x over the base field (monic, ascending), found as
/// the first linear dependence among 1, x, x^2, ...
inline Poly minimal_polynomial(const StructureConstantAlgebra& a, const Vec& x) {
  const Field& f = a.field();
  std::vector<Vec> powers{a.one()};
  for (std::size_t d = 1; d <= a.dim() + 1; ++d) {
    const Vec next = a.mul(powers.back(), x);
    if (auto c = coordinates(f, powers, next)) {
      Poly m;
      for (const auto& ci : *c) m.push_back(f.neg(ci));
      m.push_back(f.one());
      return m;
    }
    powers.push_back(next);
  }
  throw Error("minimal polynomial search exceeded the dimension");
}

inline Vec eval_poly_at(const StructureConstantAlgebra& a, const Poly& p, const Vec& x) {
  Vec acc = a.zero();
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = a.mul(acc, x);
    vec_axpy(a.field(), acc, p[i], a.one());
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Simplicity.

struct SimplicityOptions {
  enum class Method { automatic, trace_form, exhaustive };
  Method method = Method::automatic;
  std::uint64_t seed = 0;
  std::size_t primitive_attempts = 64;
  /// Method B enumerates (q^n - 1)/(q - 1) lines; refuse beyond this.
  std::uint64_t exhaustive_limit = 2'000'000;
};

struct SimplicityResult {
  Verdict verdict = Verdict::undecided;  // pass = simple, fail = not simple
  std::string method;                    // "trace-form" or "exhaustive"
  std::string reason;
  std::optional<Vec> ideal_generator;    // generates a proper nonzero ideal
  std::size_t ideal_dimension = 0;
  std::size_t radical_dimension = 0;
  std::size_t center_dimension = 0;
  std::optional<Poly> center_minimal_polynomial;
  std::string irreducibility_method;
};

inline bool trace_form_applies(const StructureConstantAlgebra& a) {
  const auto p = a.field().characteristic();
  return p == 0 || p > a.dim();
}

/// Method A: radical = kernel of the trace form tr(L_xy), then the center
/// must be a field, certified through a primitive element whose minimal
/// polynomial is irreducible.
inline SimplicityResult is_simple_trace_form(const StructureConstantAlgebra& a, const SimplicityOptions& opt = {}) {
  SimplicityResult res;
  res.method = "trace-form";
  const Field& f = a.field();
  const std::size_t n = a.dim();
  if (!trace_form_applies(a)) {
    res.reason = "trace-form criterion needs characteristic 0 or p > dim";
    return res;
  }
  const auto& t = a.table();
  Vec tr(n, f.zero());
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      for (const auto& term : t.product(k, l)) {
        if (term.index == l) tr[k] = f.add(tr[k], term.coeff);
      }
    }
  }
  Matrix form(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& term : t.product(i, j)) form(i, j) = f.add(form(i, j), f.mul(term.coeff, tr[term.index]));
    }
  }
  const auto radical = kernel(form);
  res.radical_dimension = radical.size();
  if (!radical.empty()) {
    const Subspace ideal = two_sided_ideal(a, {radical.front()});
    res.verdict = Verdict::fail;
    res.reason = "nonzero radical";
    res.ideal_generator = radical.front();
    res.ideal_dimension = ideal.dimension();
    return res;
  }
  const Subspace z = center(a);
  res.center_dimension = z.dimension();
  Rng rng(opt.seed);
  for (std::size_t attempt = 0; attempt < opt.primitive_attempts; ++attempt) {
    Vec candidate;
    if (attempt < z.dimension()) {
      candidate = z.basis()[attempt];
    } else {
      candidate = a.zero();
      for (const auto& b : z.basis()) vec_axpy(f, candidate, f.random_small(rng), b);
    }
    const Poly m = minimal_polynomial(a, candidate);
    const auto deg = static_cast<std::size_t>(poly::degree(f, m));
    if (deg < 2 && deg < z.dimension()) continue;
    const auto cert = irreducibility_certificate(f, m);
    if (cert.status == Irreducibility::no) {
      // m = f*h with both factors proper, so h(z) is a nonzero central zero
      // divisor and generates a proper ideal.
      const Poly h = poly::divmod(f, m, *cert.factor).first;
      const Vec w = eval_poly_at(a, h, candidate);
      res.verdict = Verdict::fail;
      res.reason = "center is not a field (reducible minimal polynomial)";
      res.center_minimal_polynomial = m;
      res.irreducibility_method = cert.method;
      res.ideal_generator = w;
      res.ideal_dimension = two_sided_ideal(a, {w}).dimension();
      return res;
    }
    if (deg != z.dimension()) continue;
    res.center_minimal_polynomial = m;
    res.irreducibility_method = cert.method;
    if (cert.status == Irreducibility::yes) {
      res.verdict = Verdict::pass;
      res.reason = "semisimple with field center";
    } else {
      res.reason = "center minimal polynomial irreducibility not certified";
    }
    return res;
  }
  res.reason = "no primitive element of the center found";
  return res;
}

/// Method B (finite fields only): ideal(v) = A for a representative v of
/// every one-dimensional subspace.
inline SimplicityResult is_simple_exhaustive(const StructureConstantAlgebra& a, const SimplicityOptions& opt = {}) {
  SimplicityResult res;
  res.method = "exhaustive";
  const Field& f = a.field();
  const std::size_t n = a.dim();
  if (!f.is_finite()) {
    res.reason = "exhaustive search needs a finite field";
    return res;
  }
  const std::uint64_t q = f.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > opt.exhaustive_limit) break;
    total *= q;
  }
  if (total > opt.exhaustive_limit) {
    res.reason = "algebra too large for exhaustive search";
    return res;
  }
  // Lines are enumerated by vectors whose first nonzero coordinate is 1.
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::uint64_t tail_count = 1;
    for (std::size_t i = lead + 1; i < n; ++i) tail_count *= q;
    for (std::uint64_t idx = 0; idx < tail_count; ++idx) {
      Vec v = a.zero();
      v[lead] = f.one();
      std::uint64_t rest = idx;
      for (std::size_t i = lead + 1; i < n; ++i) {
        v[i] = f.element_at(rest % q);
        rest /= q;
      }
      const Subspace ideal = two_sided_ideal(a, {v});
      if (ideal.dimension() < n) {
        res.verdict = Verdict::fail;
        res.reason = "proper nonzero ideal";
        res.ideal_generator = v;
        res.ideal_dimension = ideal.dimension();
        return res;
      }
    }
  }
  res.verdict = Verdict::pass;
  res.reason = "every nonzero element generates the whole algebra";
  return res;
}

inline SimplicityResult is_simple(const StructureConstantAlgebra& a, const SimplicityOptions& opt = {}) {
  using M = SimplicityOptions::Method;
  if (opt.method == M::trace_form) return is_simple_trace_form(a, opt);
  if (opt.method == M::exhaustive) return is_simple_exhaustive(a, opt);
  if (trace_form_applies(a)) return is_simple_trace_form(a, opt);
  return is_simple_exhaustive(a, opt);
}

// ---------------------------------------------------------------------------
// Built-in algebras.

/// n x n matrices; basis E_ij has index i*n + j.
inline StructureConstantAlgebra matrix_algebra(const Field& f, std::size_t n) {
  if (n == 0) throw Error("matrix algebra of size 0");
  StructureConstants t(f, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) t.add_term(i * n + j, j * n + l, i * n + l, f.one());
  Vec unit = zero_vec(f, n * n);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = f.one();
  return {std::move(t), std::move(unit)};
}

/// Group algebra of a group given by its table; the basis is the group.
inline StructureConstantAlgebra group_algebra(const Field& f, const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  StructureConstants t(f, n);
  std::optional<std::size_t> identity;
  for (std::size_t a = 0; a < n; ++a) {
    bool is_id = true;
    for (std::size_t b = 0; b < n; ++b) {
      if (table.at(a).at(b) >= n) throw StructuralError("group table entry out of range");
      t.add_term(a, b, table[a][b], f.one());
      is_id = is_id && table[a][b] == b && table[b][a] == b;
    }
    if (is_id && !identity) identity = a;
  }
  if (!identity) throw Error("group table has no identity");
  return {std::move(t), unit_vec(f, n, *identity)};
}

/// K[x]/(m) for a monic m over K, basis 1, x, ..., x^(deg m - 1).
inline StructureConstantAlgebra polynomial_quotient_algebra(const Field& f, const Poly& m) {
  const long d = poly::degree(f, m);
  if (d < 1 || !f.is_one(m[static_cast<std::size_t>(d)])) throw Error("quotient modulus must be monic of degree >= 1");
  const auto n = static_cast<std::size_t>(d);
  StructureConstants t(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Poly xij(i + j + 1, f.zero());
      xij[i + j] = f.one();
      const Poly r = poly::mod(f, xij, m);
      for (std::size_t k = 0; k < r.size(); ++k) t.add_term(i, j, k, r[k]);
    }
  }
  return {std::move(t), unit_vec(f, n, 0)};
}

/// An extension field as an algebra over its base, power basis.
inline StructureConstantAlgebra field_as_algebra(const Field& ext) {
  if (!ext.is_extension()) return {[&] {
                                      StructureConstants t(ext, 1);
                                      t.add_term(0, 0, 0, ext.one());
                                      return t;
                                    }(),
                                    Vec{ext.one()}};
  return polynomial_quotient_algebra(ext.base(), ext.modulus());
}

}  // namespace gring
