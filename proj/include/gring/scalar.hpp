#pragma once

// Exact scalars: the rationals, prime fields GF(p) and simple extensions
// base[x]/(g) of either (which covers GF(p^n) and number fields Q[x]/(g)).
//
// Bulk code works with plain `Elem` values interpreted through a `Field`
// context; `FieldElement` pairs the two for the checked, user-facing API.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gring/error.hpp"

namespace gring {

using Integer = mpz_class;
using Rational = mpq_class;

struct Elem;
/// Polynomial with ascending coefficients. The zero polynomial is empty.
using Poly = std::vector<Elem>;

/// A field element in canonical form. Which alternative is active depends on
/// the owning field: reduced fraction, residue in [0,p), or a residue
/// polynomial padded to exactly deg(modulus) coefficients.
struct Elem {
  std::variant<Rational, std::uint64_t, Poly> value;

  friend bool operator==(const Elem& a, const Elem& b) {
    if (a.value.index() != b.value.index()) return false;
    switch (a.value.index()) {
      case 0: return std::get<0>(a.value) == std::get<0>(b.value);
      case 1: return std::get<1>(a.value) == std::get<1>(b.value);
      default: return std::get<2>(a.value) == std::get<2>(b.value);
    }
  }
};

/// Deterministic generator for every randomized search in the library.
/// Selection uses plain modular reduction so that a seed reproduces the same
/// sequence on every standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  long long between(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

enum class Irreducibility { yes, no, asserted };

inline const char* to_string(Irreducibility s) {
  switch (s) {
    case Irreducibility::yes: return "yes";
    case Irreducibility::no: return "no";
    case Irreducibility::asserted: return "asserted";
  }
  return "asserted";
}

class Field {
 public:
  enum class Kind { rational, prime, extension };

  static Field rational();
  static Field prime(std::uint64_t p);
  /// Simple extension base[x]/(modulus). `status` records how the modulus was
  /// known to be irreducible; use `extension_field` (irreducible.hpp) to have
  /// it certified.
  static Field extension(const Field& base, Poly modulus, Irreducibility status);

  Kind kind() const { return d_->kind; }
  bool is_rational() const { return d_->kind == Kind::rational; }
  bool is_prime() const { return d_->kind == Kind::prime; }
  bool is_extension() const { return d_->kind == Kind::extension; }
  std::uint64_t p() const { return d_->p; }
  const Field& base() const;
  const Poly& modulus() const { return d_->modulus; }
  /// Degree over the immediate base (1 for Q and GF(p)).
  std::size_t degree() const { return d_->kind == Kind::extension ? d_->modulus.size() - 1 : 1; }
  Irreducibility irreducibility() const { return d_->status; }
  /// True when this field or any field below it rests on an asserted modulus.
  bool has_asserted_modulus() const;

  std::uint64_t characteristic() const;
  bool is_finite() const { return characteristic() != 0; }
  /// Number of elements; throws for infinite or too-large fields.
  std::uint64_t order() const;

  Elem zero() const;
  Elem one() const;
  Elem from_int(long long n) const;
  Elem from_integer(const Integer& n) const;
  Elem from_rational(const Rational& q) const;
  /// The class of x in base[x]/(modulus).
  Elem generator() const;
  /// Image of a base-field element under the inclusion base -> this.
  Elem embed(const Elem& base_elem) const;
  Elem from_coefficients(Poly coefficients) const;
  const Poly& coefficients(const Elem& a) const { return std::get<Poly>(a.value); }

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  bool is_zero(const Elem& a) const;
  bool is_one(const Elem& a) const { return a == one(); }

  /// Canonical-form membership check for externally supplied values.
  bool contains(const Elem& a) const;

  /// Finite fields only: bijection between [0, order) and the elements.
  Elem element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Elem& a) const;
  /// Small random element: coefficients in {-2..2} over Q, uniform otherwise.
  Elem random_small(Rng& rng) const;

  std::string format(const Elem& a) const;
  std::string describe() const;

  /// Name of the adjoined variable when printing ("x", then "x2", ...).
  std::string variable() const {
    const std::size_t d = depth();
    return d <= 1 ? std::string("x") : "x" + std::to_string(d);
  }

  friend bool operator==(const Field& a, const Field& b);
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  struct Data {
    Kind kind = Kind::rational;
    std::uint64_t p = 0;
    std::shared_ptr<const Field> base;
    Poly modulus;
    Irreducibility status = Irreducibility::yes;
  };
  explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  Elem reduce(Poly product) const;
  std::size_t depth() const { return is_extension() ? base().depth() + 1 : 0; }
  std::shared_ptr<const Data> d_;
};

// ---------------------------------------------------------------------------
// Polynomials over a field.

namespace poly {

inline void trim(const Field& f, Poly& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

inline long degree(const Field& f, const Poly& a) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (!f.is_zero(a[i])) return static_cast<long>(i);
  }
  return -1;
}

inline Poly add(const Field& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(f, r);
  return r;
}

inline Poly scale(const Field& f, const Poly& a, const Elem& c) {
  Poly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(f.mul(x, c));
  trim(f, r);
  return r;
}

inline Poly sub(const Field& f, const Poly& a, const Poly& b) {
  return add(f, a, scale(f, b, f.from_int(-1)));
}

inline Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(f, r);
  return r;
}

/// Quotient and remainder; the divisor must be nonzero.
inline std::pair<Poly, Poly> divmod(const Field& f, Poly a, Poly b) {
  trim(f, a);
  trim(f, b);
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  const Elem lead_inv = f.inv(b.back());
  Poly q(a.size() - b.size() + 1, f.zero());
  for (std::size_t k = q.size(); k-- > 0;) {
    const Elem c = f.mul(a[k + b.size() - 1], lead_inv);
    q[k] = c;
    if (f.is_zero(c)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = f.sub(a[k + j], f.mul(c, b[j]));
  }
  a.resize(b.size() - 1);
  trim(f, a);
  trim(f, q);
  return {q, a};
}

inline Poly mod(const Field& f, const Poly& a, const Poly& b) { return divmod(f, a, b).second; }

inline Poly monic(const Field& f, const Poly& a) {
  if (a.empty()) return a;
  return scale(f, a, f.inv(a.back()));
}

inline Poly gcd(const Field& f, Poly a, Poly b) {
  trim(f, a);
  trim(f, b);
  while (!b.empty()) {
    Poly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

/// Returns (g, s) with s*a = g (mod m), g = gcd(a, m) monic.
inline std::pair<Poly, Poly> inverse_part(const Field& f, const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = a, s0, s1{f.one()};
  trim(f, r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(f, r0, r1);
    Poly s = sub(f, s0, mul(f, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.empty()) return {r0, {}};
  const Elem c = f.inv(r0.back());
  return {scale(f, r0, c), scale(f, s0, c)};
}

inline Poly derivative(const Field& f, const Poly& a) {
  Poly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(f.mul(f.from_int(static_cast<long long>(i)), a[i]));
  trim(f, r);
  return r;
}

inline Poly powmod(const Field& f, Poly base, Integer e, const Poly& m) {
  Poly result{f.one()};
  result = mod(f, result, m);
  base = mod(f, base, m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mod(f, mul(f, result, base), m);
    base = mod(f, mul(f, base, base), m);
    e >>= 1;
  }
  return result;
}

/// Evaluates a polynomial with coefficients in `f` at a point of `target`,
/// where `f` is either `target` itself or its immediate base.
inline Elem eval(const Field& f, const Poly& a, const Field& target, const Elem& x) {
  const bool lift = !(f == target);
  Elem acc = target.zero();
  for (std::size_t i = a.size(); i-- > 0;) {
    acc = target.mul(acc, x);
    acc = target.add(acc, lift ? target.embed(a[i]) : a[i]);
  }
  return acc;
}

inline std::string to_string(const Field& f, const Poly& a, const std::string& var = "x") {
  if (degree(f, a) < 0) return "0";
  std::string out;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (f.is_zero(a[i])) continue;
    std::string c = f.format(a[i]);
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += c;
    } else {
      if (!f.is_one(a[i])) out += (f.is_extension() ? "(" + c + ")" : c) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace poly

// ---------------------------------------------------------------------------
// Field implementation.

inline Field Field::rational() {
  static const Field q(std::make_shared<const Data>(Data{Kind::rational, 0, nullptr, {}, Irreducibility::yes}));
  return q;
}

inline bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32)) throw Error("prime field characteristic must be below 2^32");
  if (!is_prime_number(p)) throw Error("GF(p) requires p prime, got " + std::to_string(p));
  return Field(std::make_shared<const Data>(Data{Kind::prime, p, nullptr, {}, Irreducibility::yes}));
}

inline Field Field::extension(const Field& base, Poly modulus, Irreducibility status) {
  poly::trim(base, modulus);
  if (modulus.size() < 3) throw Error("extension modulus must have degree >= 2");
  if (!base.is_one(modulus.back())) throw Error("extension modulus must be monic");
  for (const auto& c : modulus) {
    if (!base.contains(c)) throw SpecMismatch("modulus coefficient outside the base field");
  }
  if (status == Irreducibility::no) throw Error("extension modulus is reducible");
  return Field(std::make_shared<const Data>(
      Data{Kind::extension, 0, std::make_shared<const Field>(base), std::move(modulus), status}));
}

inline const Field& Field::base() const {
  if (d_->kind != Kind::extension) return *this;
  return *d_->base;
}

inline bool Field::has_asserted_modulus() const {
  if (d_->kind != Kind::extension) return false;
  return d_->status == Irreducibility::asserted || d_->base->has_asserted_modulus();
}

inline bool operator==(const Field& a, const Field& b) {
  if (a.d_ == b.d_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Field::Kind::rational: return true;
    case Field::Kind::prime: return a.p() == b.p();
    case Field::Kind::extension: return a.base() == b.base() && a.modulus() == b.modulus();
  }
  return false;
}

inline std::uint64_t Field::characteristic() const {
  switch (kind()) {
    case Kind::rational: return 0;
    case Kind::prime: return d_->p;
    case Kind::extension: return base().characteristic();
  }
  return 0;
}

inline std::uint64_t Field::order() const {
  if (!is_finite()) throw Error("field " + describe() + " is infinite");
  if (is_prime()) return p();
  const std::uint64_t q = base().order();
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (r > (std::uint64_t{1} << 62) / q) throw Error("field " + describe() + " too large to enumerate");
    r *= q;
  }
  return r;
}

inline Elem Field::zero() const { return from_int(0); }
inline Elem Field::one() const { return from_int(1); }

inline Elem Field::from_int(long long n) const { return from_integer(Integer(static_cast<long>(n))); }

inline Elem Field::from_integer(const Integer& n) const {
  switch (kind()) {
    case Kind::rational: return Elem{Rational(n)};
    case Kind::prime: {
      Integer r = n % static_cast<unsigned long>(p());
      if (r < 0) r += static_cast<unsigned long>(p());
      return Elem{static_cast<std::uint64_t>(r.get_ui())};
    }
    case Kind::extension: return embed(base().from_integer(n));
  }
  return Elem{};
}

inline Elem Field::from_rational(const Rational& q) const {
  if (is_rational()) return Elem{q};
  const Elem den = from_integer(q.get_den());
  if (is_zero(den)) throw DivisionByZero("denominator vanishes in characteristic " + std::to_string(characteristic()));
  return div(from_integer(q.get_num()), den);
}

inline Elem Field::generator() const {
  if (!is_extension()) throw Error("generator() requires an extension field");
  Poly c(degree(), base().zero());
  c[1] = base().one();
  return Elem{std::move(c)};
}

inline Elem Field::embed(const Elem& base_elem) const {
  if (!is_extension()) return base_elem;
  Poly c(degree(), base().zero());
  c[0] = base_elem;
  return Elem{std::move(c)};
}

inline Elem Field::from_coefficients(Poly coefficients) const {
  if (!is_extension()) throw Error("from_coefficients() requires an extension field");
  return reduce(std::move(coefficients));
}

inline Elem Field::reduce(Poly product) const {
  const Field& b = base();
  const Poly& m = modulus();
  const std::size_t n = degree();
  for (std::size_t k = product.size(); k-- > n;) {
    const Elem c = product[k];
    if (b.is_zero(c)) continue;
    for (std::size_t j = 0; j <= n; ++j) product[k - n + j] = b.sub(product[k - n + j], b.mul(c, m[j]));
  }
  product.resize(n, b.zero());
  return Elem{std::move(product)};
}

inline Elem Field::add(const Elem& a, const Elem& b) const {
  switch (kind()) {
    case Kind::rational: return Elem{Rational(std::get<Rational>(a.value) + std::get<Rational>(b.value))};
    case Kind::prime: {
      const std::uint64_t s = std::get<std::uint64_t>(a.value) + std::get<std::uint64_t>(b.value);
      return Elem{s >= p() ? s - p() : s};
    }
    case Kind::extension: {
      const auto& x = std::get<Poly>(a.value);
      const auto& y = std::get<Poly>(b.value);
      if (x.size() != degree() || y.size() != degree()) throw SpecMismatch("extension element of wrong length");
      Poly r(degree());
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = base().add(x[i], y[i]);
      return Elem{std::move(r)};
    }
  }
  return Elem{};
}

inline Elem Field::neg(const Elem& a) const {
  switch (kind()) {
    case Kind::rational: return Elem{Rational(-std::get<Rational>(a.value))};
    case Kind::prime: {
      const std::uint64_t x = std::get<std::uint64_t>(a.value);
      return Elem{x == 0 ? 0 : p() - x};
    }
    case Kind::extension: {
      Poly r = std::get<Poly>(a.value);
      for (auto& c : r) c = base().neg(c);
      return Elem{std::move(r)};
    }
  }
  return Elem{};
}

inline Elem Field::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

inline Elem Field::mul(const Elem& a, const Elem& b) const {
  switch (kind()) {
    case Kind::rational: return Elem{Rational(std::get<Rational>(a.value) * std::get<Rational>(b.value))};
    case Kind::prime: {
      const unsigned __int128 prod =
          static_cast<unsigned __int128>(std::get<std::uint64_t>(a.value)) * std::get<std::uint64_t>(b.value);
      return Elem{static_cast<std::uint64_t>(prod % p())};
    }
    case Kind::extension: {
      const auto& x = std::get<Poly>(a.value);
      const auto& y = std::get<Poly>(b.value);
      if (x.size() != degree() || y.size() != degree()) throw SpecMismatch("extension element of wrong length");
      const Field& f = base();
      Poly r(2 * degree() - 1, f.zero());
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (f.is_zero(x[i])) continue;
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(x[i], y[j]));
      }
      return reduce(std::move(r));
    }
  }
  return Elem{};
}

inline Elem Field::inv(const Elem& a) const {
  if (is_zero(a)) throw DivisionByZero("inverse of zero in " + describe());
  switch (kind()) {
    case Kind::rational: return Elem{Rational(1 / std::get<Rational>(a.value))};
    case Kind::prime: {
      // Fermat: a^(p-2).
      return pow(a, p() - 2);
    }
    case Kind::extension: {
      auto [g, s] = poly::inverse_part(base(), std::get<Poly>(a.value), modulus());
      if (g.size() != 1) throw DivisionByZero("element shares a factor with the modulus of " + describe());
      return reduce(std::move(s));
    }
  }
  return Elem{};
}

inline Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = one();
  while (e > 0) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

inline bool Field::is_zero(const Elem& a) const {
  switch (kind()) {
    case Kind::rational: return sgn(std::get<Rational>(a.value)) == 0;
    case Kind::prime: return std::get<std::uint64_t>(a.value) == 0;
    case Kind::extension:
      for (const auto& c : std::get<Poly>(a.value)) {
        if (!base().is_zero(c)) return false;
      }
      return true;
  }
  return false;
}

inline bool Field::contains(const Elem& a) const {
  switch (kind()) {
    case Kind::rational: {
      if (a.value.index() != 0) return false;
      Rational c = std::get<Rational>(a.value);
      c.canonicalize();
      return c == std::get<Rational>(a.value) && c.get_den() > 0;
    }
    case Kind::prime: return a.value.index() == 1 && std::get<std::uint64_t>(a.value) < p();
    case Kind::extension: {
      if (a.value.index() != 2) return false;
      const auto& c = std::get<Poly>(a.value);
      if (c.size() != degree()) return false;
      for (const auto& x : c) {
        if (!base().contains(x)) return false;
      }
      return true;
    }
  }
  return false;
}

inline Elem Field::element_at(std::uint64_t index) const {
  if (is_prime()) return Elem{index % p()};
  if (!is_extension()) throw Error("element_at() requires a finite field");
  const std::uint64_t q = base().order();
  Poly c;
  c.reserve(degree());
  for (std::size_t i = 0; i < degree(); ++i) {
    c.push_back(base().element_at(index % q));
    index /= q;
  }
  return Elem{std::move(c)};
}

inline std::uint64_t Field::index_of(const Elem& a) const {
  if (is_prime()) return std::get<std::uint64_t>(a.value);
  if (!is_extension()) throw Error("index_of() requires a finite field");
  const std::uint64_t q = base().order();
  const auto& c = std::get<Poly>(a.value);
  std::uint64_t idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * q + base().index_of(c[i]);
  return idx;
}

inline Elem Field::random_small(Rng& rng) const {
  switch (kind()) {
    case Kind::rational: return from_int(rng.between(-2, 2));
    case Kind::prime: return Elem{rng.below(p())};
    case Kind::extension: {
      Poly c;
      for (std::size_t i = 0; i < degree(); ++i) c.push_back(base().random_small(rng));
      return Elem{std::move(c)};
    }
  }
  return Elem{};
}

inline std::string Field::format(const Elem& a) const {
  switch (kind()) {
    case Kind::rational: return std::get<Rational>(a.value).get_str();
    case Kind::prime: return std::to_string(std::get<std::uint64_t>(a.value));
    case Kind::extension: {
      Poly c = std::get<Poly>(a.value);
      poly::trim(base(), c);
      return poly::to_string(base(), c, variable());
    }
  }
  return {};
}

inline std::string Field::describe() const {
  switch (kind()) {
    case Kind::rational: return "QQ";
    case Kind::prime: return "GF(" + std::to_string(p()) + ")";
    case Kind::extension:
      return base().describe() + "[" + variable() + "]/(" +
             poly::to_string(base(), modulus(), variable()) + ")";
  }
  return {};
}

// ---------------------------------------------------------------------------

/// A field element bundled with its field. Mixing fields throws SpecMismatch.
class FieldElement {
 public:
  FieldElement(Field field, Elem value) : field_(std::move(field)), value_(std::move(value)) {
    if (!field_.contains(value_)) throw SpecMismatch("value is not a canonical element of " + field_.describe());
  }

  const Field& field() const { return field_; }
  const Elem& value() const { return value_; }
  bool is_zero() const { return field_.is_zero(value_); }

  FieldElement inverse() const { return {field_, field_.inv(value_)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_.add(a.value_, b.value_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_.sub(a.value_, b.value_)};
  }
  friend FieldElement operator-(const FieldElement& a) { return {a.field_, a.field_.neg(a.value_)}; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_.mul(a.value_, b.value_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_.div(a.value_, b.value_)};
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  std::string to_string() const { return field_.format(value_); }

 private:
  static void check(const FieldElement& a, const FieldElement& b) {
    if (a.field_ != b.field_) {
      throw SpecMismatch("operands over " + a.field_.describe() + " and " + b.field_.describe());
    }
  }
  Field field_;
  Elem value_;
};

}  // namespace gring
