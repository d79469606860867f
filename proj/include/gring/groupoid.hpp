#pragma once

// Finite groupoids as explicit tables.
//
// Arrows are dense indices 0..n-1; objects are the indices of the identity
// arrows. Composition is a sparse table keyed by composable pairs, so an
// undefined product is an absent key.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gring/error.hpp"
#include "gring/report.hpp"

namespace gring {

using Arrow = std::size_t;
using CompositionTable = std::map<std::pair<Arrow, Arrow>, Arrow>;

class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;

  /// Builds the table after checking that every index is in range and that
  /// src/dst land on declared objects. Axioms are checked separately by
  /// `validate_groupoid`.
  FiniteGroupoid(std::vector<std::string> names, std::vector<Arrow> inv, std::vector<Arrow> src,
                 std::vector<Arrow> dst, std::vector<Arrow> objects, CompositionTable comp)
      : names_(std::move(names)),
        inv_(std::move(inv)),
        src_(std::move(src)),
        dst_(std::move(dst)),
        objects_(std::move(objects)),
        comp_(std::move(comp)) {
    const std::size_t n = names_.size();
    if (inv_.size() != n || src_.size() != n || dst_.size() != n) {
      throw StructuralError("groupoid tables have inconsistent lengths");
    }
    is_object_.assign(n, false);
    for (Arrow e : objects_) {
      if (e >= n) throw StructuralError("object index " + std::to_string(e) + " out of range");
      if (is_object_[e]) throw StructuralError("object " + names_[e] + " listed twice");
      is_object_[e] = true;
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (inv_[a] >= n) throw StructuralError("inverse of arrow " + std::to_string(a) + " out of range");
      if (src_[a] >= n || !is_object_[src_[a]]) {
        throw StructuralError("source of arrow " + names_[a] + " is not an object");
      }
      if (dst_[a] >= n || !is_object_[dst_[a]]) {
        throw StructuralError("target of arrow " + names_[a] + " is not an object");
      }
    }
    for (const auto& [key, value] : comp_) {
      if (key.first >= n || key.second >= n || value >= n) {
        throw StructuralError("composition table entry out of range");
      }
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<Arrow>& objects() const { return objects_; }
  bool is_object(Arrow a) const { return is_object_.at(a); }
  Arrow inv(Arrow a) const { return inv_.at(a); }
  /// Source object d(a).
  Arrow src(Arrow a) const { return src_.at(a); }
  /// Target object r(a).
  Arrow dst(Arrow a) const { return dst_.at(a); }
  const std::string& name(Arrow a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }
  const CompositionTable& composition() const { return comp_; }

  std::optional<Arrow> find(const std::string& name) const {
    for (std::size_t a = 0; a < names_.size(); ++a) {
      if (names_[a] == name) return a;
    }
    return std::nullopt;
  }

  bool composable(Arrow a, Arrow b) const { return src(a) == dst(b); }

  /// a * b (a after b), if defined.
  std::optional<Arrow> compose(Arrow a, Arrow b) const {
    auto it = comp_.find({a, b});
    if (it == comp_.end()) return std::nullopt;
    return it->second;
  }

  /// a * b for a pair known to be composable; throws otherwise.
  Arrow mul(Arrow a, Arrow b) const {
    auto c = compose(a, b);
    if (!c) throw StructuralError("composition " + name(a) + " * " + name(b) + " is undefined");
    return *c;
  }

  std::vector<std::pair<Arrow, Arrow>> composable_pairs() const {
    std::vector<std::pair<Arrow, Arrow>> out;
    for (Arrow a = 0; a < size(); ++a) {
      for (Arrow b = 0; b < size(); ++b) {
        if (composable(a, b)) out.emplace_back(a, b);
      }
    }
    return out;
  }

  std::vector<std::array<Arrow, 3>> composable_triples() const;

  /// Arrows with source `from` and target `to`, in index order.
  std::vector<Arrow> arrows_between(Arrow from, Arrow to) const {
    std::vector<Arrow> out;
    for (Arrow a = 0; a < size(); ++a) {
      if (src(a) == from && dst(a) == to) out.push_back(a);
    }
    return out;
  }

  std::vector<Arrow> isotropy_arrows(Arrow e) const { return arrows_between(e, e); }

  friend bool operator==(const FiniteGroupoid&, const FiniteGroupoid&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Arrow> inv_;
  std::vector<Arrow> src_;
  std::vector<Arrow> dst_;
  std::vector<Arrow> objects_;
  CompositionTable comp_;
  std::vector<bool> is_object_;
};

inline std::vector<std::array<Arrow, 3>> FiniteGroupoid::composable_triples() const {
  std::vector<std::array<Arrow, 3>> out;
  for (const auto& [a, b] : composable_pairs()) {
    for (Arrow c = 0; c < size(); ++c) {
      if (composable(b, c)) out.push_back({a, b, c});
    }
  }
  return out;
}

/// Checks the groupoid axioms and reports every violation:
///   involution     inv(inv(a)) = a
///   composability  a*b defined exactly when src(a) = dst(b), with the
///                  composite running from src(b) to dst(a)
///   associativity  (a*b)*c = a*(b*c) on composable triples
///   domain         inv(a)*a = src(a), and src(a)*b = b whenever a*b is defined
///   range          a*inv(a) = dst(a), and a*dst(b) = a whenever a*b is defined
///   identity       objects are their own source, target and inverse, and act
///                  as identities on both sides
inline ValidationReport validate_groupoid(const FiniteGroupoid& g) {
  ValidationReport report;
  const std::size_t n = g.size();
  for (Arrow a = 0; a < n; ++a) {
    if (g.inv(g.inv(a)) != a) report.add("involution", {a}, "inverse of inverse of " + g.name(a) + " differs");
  }
  for (Arrow a = 0; a < n; ++a) {
    for (Arrow b = 0; b < n; ++b) {
      const auto c = g.compose(a, b);
      if (g.composable(a, b) && !c) {
        report.add("composability", {a, b}, g.name(a) + " * " + g.name(b) + " should be defined");
      } else if (!g.composable(a, b) && c) {
        report.add("composability", {a, b}, g.name(a) + " * " + g.name(b) + " should be undefined");
      } else if (c && (g.src(*c) != g.src(b) || g.dst(*c) != g.dst(a))) {
        report.add("composability", {a, b}, "composite " + g.name(*c) + " has the wrong endpoints");
      }
    }
  }
  for (const auto& [a, b, c] : g.composable_triples()) {
    const auto ab = g.compose(a, b);
    const auto bc = g.compose(b, c);
    if (!ab || !bc) continue;
    const auto left = g.compose(*ab, c);
    const auto right = g.compose(a, *bc);
    if (!left || !right || *left != *right) report.add("associativity", {a, b, c});
  }
  for (Arrow a = 0; a < n; ++a) {
    const auto d = g.compose(g.inv(a), a);
    if (!d || *d != g.src(a)) report.add("domain", {a}, "inv(" + g.name(a) + ")*" + g.name(a) + " is not its source");
    const auto r = g.compose(a, g.inv(a));
    if (!r || *r != g.dst(a)) report.add("range", {a}, g.name(a) + "*inv(" + g.name(a) + ") is not its target");
    for (Arrow b = 0; b < n; ++b) {
      if (!g.compose(a, b)) continue;
      if (d) {
        const auto db = g.compose(*d, b);
        if (!db || *db != b) report.add("domain", {a, b}, "d(" + g.name(a) + ")*" + g.name(b) + " != " + g.name(b));
      }
      const auto rng = g.compose(b, g.inv(b));
      if (rng) {
        const auto ar = g.compose(a, *rng);
        if (!ar || *ar != a) report.add("range", {a, b}, g.name(a) + "*r(" + g.name(b) + ") != " + g.name(a));
      }
    }
  }
  for (Arrow e : g.objects()) {
    if (g.src(e) != e || g.dst(e) != e || g.inv(e) != e) {
      report.add("identity", {e}, "object " + g.name(e) + " is not an identity arrow");
    }
  }
  for (Arrow a = 0; a < n; ++a) {
    const auto left = g.compose(g.dst(a), a);
    const auto right = g.compose(a, g.src(a));
    if (!left || *left != a || !right || *right != a) {
      report.add("identity", {a}, "identity arrows do not fix " + g.name(a));
    }
  }
  return report;
}

/// A subgroupoid together with the original index of each of its arrows.
struct Subgroupoid {
  FiniteGroupoid groupoid;
  std::vector<Arrow> embedding;
};

namespace detail {

inline Subgroupoid induced(const FiniteGroupoid& g, const std::vector<bool>& keep) {
  std::vector<Arrow> embedding;
  std::vector<std::size_t> index(g.size(), g.size());
  for (Arrow a = 0; a < g.size(); ++a) {
    if (keep[a]) {
      index[a] = embedding.size();
      embedding.push_back(a);
    }
  }
  std::vector<std::string> names;
  std::vector<Arrow> inv, src, dst, objects;
  for (Arrow a : embedding) {
    names.push_back(g.name(a));
    inv.push_back(index[g.inv(a)]);
    src.push_back(index[g.src(a)]);
    dst.push_back(index[g.dst(a)]);
  }
  for (Arrow e : g.objects()) {
    if (keep[e]) objects.push_back(index[e]);
  }
  CompositionTable comp;
  for (const auto& [key, value] : g.composition()) {
    if (keep[key.first] && keep[key.second] && keep[value]) comp[{index[key.first], index[key.second]}] = index[value];
  }
  return {FiniteGroupoid(std::move(names), std::move(inv), std::move(src), std::move(dst), std::move(objects),
                         std::move(comp)),
          std::move(embedding)};
}

}  // namespace detail

/// The subgroupoid of arrows whose source and target both lie in `objects`.
inline Subgroupoid restrict_to_objects(const FiniteGroupoid& g, const std::vector<Arrow>& objects) {
  if (objects.empty()) throw Error("restrict_to_objects needs a nonempty object set");
  std::vector<bool> in_set(g.size(), false);
  for (Arrow e : objects) {
    if (e >= g.size() || !g.is_object(e)) throw Error("restrict_to_objects: index " + std::to_string(e) + " is not an object");
    in_set[e] = true;
  }
  std::vector<bool> keep(g.size(), false);
  for (Arrow a = 0; a < g.size(); ++a) keep[a] = in_set[g.src(a)] && in_set[g.dst(a)];
  return detail::induced(g, keep);
}

/// The isotropy group at object e as a one-object groupoid.
inline Subgroupoid isotropy_group(const FiniteGroupoid& g, Arrow e) {
  if (e >= g.size() || !g.is_object(e)) throw Error("isotropy_group: index " + std::to_string(e) + " is not an object");
  return restrict_to_objects(g, {e});
}

struct ComponentPartition {
  /// Objects of each class in increasing order; classes ordered by their least object.
  std::vector<std::vector<Arrow>> classes;
  /// Least object of each class.
  std::vector<Arrow> representatives;
  /// For every object, the index of its class (other arrows map to npos).
  std::vector<std::size_t> class_of;

  Arrow representative_of(Arrow object) const { return representatives.at(class_of.at(object)); }
};

inline ComponentPartition connected_components(const FiniteGroupoid& g) {
  std::vector<std::size_t> parent(g.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Arrow a = 0; a < g.size(); ++a) {
    const auto x = find(g.src(a));
    const auto y = find(g.dst(a));
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::vector<Arrow> objs = g.objects();
  std::sort(objs.begin(), objs.end());
  ComponentPartition out;
  out.class_of.assign(g.size(), static_cast<std::size_t>(-1));
  std::map<std::size_t, std::size_t> root_to_class;
  for (Arrow e : objs) {
    const auto root = find(e);
    auto [it, inserted] = root_to_class.emplace(root, out.classes.size());
    if (inserted) {
      out.classes.emplace_back();
      out.representatives.push_back(e);
    }
    out.classes[it->second].push_back(e);
    out.class_of[e] = it->second;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructors.

/// Pair groupoid on n objects: arrows (i,j) for i,j in 1..n with
/// (i,j)*(j,l) = (i,l) and (i,j)^-1 = (j,i). Arrow (i,j) has index
/// (i-1)*n + (j-1), goes from (j,j) to (i,i), and is named "(i,j)".
inline FiniteGroupoid pair_groupoid(std::size_t n) {
  if (n == 0) throw Error("pair_groupoid needs at least one object");
  std::vector<std::string> names;
  std::vector<Arrow> inv, src, dst, objects;
  auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      names.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      inv.push_back(idx(j, i));
      src.push_back(idx(j, j));
      dst.push_back(idx(i, i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) objects.push_back(idx(i, i));
  CompositionTable comp;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) comp[{idx(i, j), idx(j, l)}] = idx(i, l);
  return FiniteGroupoid(std::move(names), std::move(inv), std::move(src), std::move(dst), std::move(objects),
                        std::move(comp));
}

/// A finite group given by its multiplication table (table[a][b] = a*b) as a
/// one-object groupoid. Throws unless the table is a group.
inline FiniteGroupoid group_as_groupoid(const std::vector<std::vector<std::size_t>>& table,
                                        std::vector<std::string> names = {}) {
  const std::size_t n = table.size();
  if (n == 0) throw Error("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw StructuralError("group table is not square");
    for (auto v : row) {
      if (v >= n) throw StructuralError("group table entry out of range");
    }
  }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) identity = e;
  }
  if (!identity) throw Error("group table has no identity element");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) throw Error("group table is not associative");
      }
  std::vector<Arrow> inv(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] == *identity && table[b][a] == *identity) inv[a] = b;
    }
    if (inv[a] == n) throw Error("group table element " + std::to_string(a) + " has no inverse");
  }
  if (names.empty()) {
    for (std::size_t a = 0; a < n; ++a) names.push_back(a == *identity ? "e" : "g" + std::to_string(a));
  }
  if (names.size() != n) throw StructuralError("group element names do not match the table");
  CompositionTable comp;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) comp[{a, b}] = table[a][b];
  return FiniteGroupoid(std::move(names), std::move(inv), std::vector<Arrow>(n, *identity),
                        std::vector<Arrow>(n, *identity), {*identity}, std::move(comp));
}

/// Multiplication table of the cyclic group Z/n (element k is g^k).
inline std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

inline FiniteGroupoid cyclic_group(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(k == 0 ? "e" : (k == 1 ? "g" : "g^" + std::to_string(k)));
  return group_as_groupoid(cyclic_table(n), std::move(names));
}

/// Klein four group {e, a, b, c} with c = ab.
inline FiniteGroupoid klein_four_group() {
  // Elements as bit vectors: e=00, a=01, b=10, c=11; product is xor.
  std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) t[x][y] = x ^ y;
  return group_as_groupoid(t, {"e", "a", "b", "c"});
}

/// Disjoint union; arrow names are kept when globally unique and otherwise
/// prefixed with the summand index.
inline FiniteGroupoid disjoint_union(const std::vector<FiniteGroupoid>& parts) {
  if (parts.empty()) throw Error("disjoint_union of no groupoids");
  std::map<std::string, std::size_t> name_count;
  for (const auto& p : parts)
    for (const auto& nm : p.names()) ++name_count[nm];
  std::vector<std::string> names;
  std::vector<Arrow> inv, src, dst, objects;
  CompositionTable comp;
  std::size_t offset = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& p = parts[k];
    for (Arrow a = 0; a < p.size(); ++a) {
      names.push_back(name_count[p.name(a)] > 1 ? std::to_string(k) + ":" + p.name(a) : p.name(a));
      inv.push_back(offset + p.inv(a));
      src.push_back(offset + p.src(a));
      dst.push_back(offset + p.dst(a));
    }
    for (Arrow e : p.objects()) objects.push_back(offset + e);
    for (const auto& [key, value] : p.composition()) comp[{offset + key.first, offset + key.second}] = offset + value;
    offset += p.size();
  }
  return FiniteGroupoid(std::move(names), std::move(inv), std::move(src), std::move(dst), std::move(objects),
                        std::move(comp));
}

}  // namespace gring
