#pragma once

// Irreducibility of monic polynomials.
//
// Over finite fields the answer is exact (trial division by every monic
// polynomial of degree <= n/2). Over Q a rational-root test settles degree
// <= 3 and a modular factor-degree certificate settles many others; anything
// left is reported as `asserted` and must be vouched for by the caller.

#include <algorithm>
#include <initializer_list>
#include <iterator>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gring/scalar.hpp"

namespace gring {

struct IrreducibilityResult {
  Irreducibility status = Irreducibility::asserted;
  std::optional<Poly> factor;  // a proper monic factor when status == no
  std::string method;
};

namespace detail {

inline std::vector<Integer> positive_divisors(Integer n, std::size_t limit = 100000) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (small.size() > limit) return {};
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Integer polynomial proportional to a rational polynomial.
inline std::vector<Integer> clear_denominators(const Poly& f) {
  Integer lcm = 1;
  for (const auto& c : f) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), std::get<Rational>(c.value).get_den_mpz_t());
  std::vector<Integer> out;
  for (const auto& c : f) {
    const Rational& q = std::get<Rational>(c.value);
    out.push_back(q.get_num() * (lcm / q.get_den()));
  }
  return out;
}

/// Degrees of the irreducible factors of a squarefree polynomial over GF(p).
inline std::vector<std::size_t> factor_degrees_mod_p(const Field& gf, Poly f) {
  std::vector<std::size_t> degrees;
  const Poly x{gf.zero(), gf.one()};
  Poly h = x;
  for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(poly::degree(gf, f)); ++d) {
    h = poly::powmod(gf, h, Integer(static_cast<unsigned long>(gf.p())), f);
    const Poly g = poly::gcd(gf, f, poly::sub(gf, h, x));
    const long dg = poly::degree(gf, g);
    if (dg > 0) {
      for (long k = 0; k < dg / static_cast<long>(d); ++k) degrees.push_back(d);
      f = poly::divmod(gf, f, g).first;
      h = poly::mod(gf, h, f);
    }
  }
  if (poly::degree(gf, f) > 0) degrees.push_back(static_cast<std::size_t>(poly::degree(gf, f)));
  return degrees;
}

inline std::set<std::size_t> subset_sums(const std::vector<std::size_t>& parts) {
  std::set<std::size_t> sums{0};
  for (auto d : parts) {
    std::set<std::size_t> next = sums;
    for (auto s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  return sums;
}

inline IrreducibilityResult finite_field_irreducible(const Field& field, const Poly& f) {
  const long n = poly::degree(field, f);
  const std::uint64_t q = field.order();
  for (long d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (long i = 0; i < d; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g;
      std::uint64_t rest = idx;
      for (long i = 0; i < d; ++i) {
        g.push_back(field.element_at(rest % q));
        rest /= q;
      }
      g.push_back(field.one());
      if (poly::mod(field, f, g).empty()) return {Irreducibility::no, g, "exhaustive factor search"};
    }
  }
  return {Irreducibility::yes, std::nullopt, "exhaustive factor search"};
}

inline IrreducibilityResult rational_irreducible(const Field& qq, const Poly& f, std::size_t primes_to_try) {
  const long n = poly::degree(qq, f);
  const std::vector<Integer> z = clear_denominators(f);
  // Rational roots p/q with p | a0, q | an.
  if (sgn(z.front()) == 0) return {Irreducibility::no, Poly{qq.zero(), qq.one()}, "rational root 0"};
  const auto num = positive_divisors(z.front());
  const auto den = positive_divisors(z.back());
  bool roots_checked = !num.empty() && !den.empty();
  if (roots_checked) {
    for (const auto& a : num) {
      for (const auto& b : den) {
        for (int sign : {1, -1}) {
          Rational r(a * sign, b);
          r.canonicalize();
          const Elem root{r};
          if (qq.is_zero(poly::eval(qq, f, qq, root))) {
            return {Irreducibility::no, Poly{qq.neg(root), qq.one()}, "rational root " + r.get_str()};
          }
        }
      }
    }
    if (n <= 3) return {Irreducibility::yes, std::nullopt, "rational root test"};
  }
  // Factor-degree patterns modulo small primes: any factor over Q has a degree
  // realisable as a sum of factor degrees modulo each good prime.
  std::set<std::size_t> possible;
  for (long d = 0; d <= n; ++d) possible.insert(static_cast<std::size_t>(d));
  std::string used;
  std::size_t tried = 0;
  for (std::uint64_t p = 2; tried < primes_to_try && p < 2000; ++p) {
    if (!is_prime_number(p)) continue;
    const Field gf = Field::prime(p);
    if (gf.is_zero(gf.from_integer(z.back()))) continue;
    Poly fp;
    for (const auto& c : z) fp.push_back(gf.from_integer(c));
    fp = poly::monic(gf, fp);
    if (poly::degree(gf, poly::gcd(gf, fp, poly::derivative(gf, fp))) > 0) continue;
    ++tried;
    const auto degs = factor_degrees_mod_p(gf, fp);
    const auto sums = subset_sums(degs);
    std::set<std::size_t> keep;
    std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(),
                          std::inserter(keep, keep.begin()));
    possible = std::move(keep);
    if (!used.empty()) used += ", ";
    used += std::to_string(p) + ":";
    for (std::size_t i = 0; i < degs.size(); ++i) used += (i ? "+" : "") + std::to_string(degs[i]);
    if (possible.size() == 2) {
      return {Irreducibility::yes, std::nullopt, "modular factor-degree certificate (" + used + ")"};
    }
  }
  return {Irreducibility::asserted, std::nullopt, "not certified over QQ"};
}

}  // namespace detail

/// Irreducibility of a monic polynomial of degree >= 1, with a factor when
/// reducibility is found.
inline IrreducibilityResult irreducibility_certificate(const Field& field, Poly f, std::size_t primes_to_try = 40) {
  poly::trim(field, f);
  if (f.empty() || !field.is_one(f.back())) throw Error("poly_irreducible requires a monic polynomial");
  const long n = poly::degree(field, f);
  if (n < 1) throw Error("poly_irreducible requires degree >= 1");
  if (n == 1) return {Irreducibility::yes, std::nullopt, "linear"};
  if (field.is_finite()) return detail::finite_field_irreducible(field, f);
  if (field.is_rational()) return detail::rational_irreducible(field, f, primes_to_try);
  return {Irreducibility::asserted, std::nullopt, "no certificate over " + field.describe()};
}

inline Irreducibility poly_irreducible(const Field& field, const Poly& f) {
  return irreducibility_certificate(field, f).status;
}

/// base[x]/(modulus) after certifying the modulus. An uncertifiable modulus
/// is accepted only when `trust_assertion` is set, and is then marked
/// `asserted` on the resulting field.
inline Field extension_field(const Field& base, const Poly& modulus, bool trust_assertion = false) {
  const auto cert = irreducibility_certificate(base, modulus);
  if (cert.status == Irreducibility::no) {
    throw Error("modulus " + poly::to_string(base, modulus) + " is reducible over " + base.describe());
  }
  if (cert.status == Irreducibility::asserted && !trust_assertion) {
    throw Error("irreducibility of " + poly::to_string(base, modulus) + " over " + base.describe() +
                " could not be certified and was not asserted");
  }
  return Field::extension(base, modulus, cert.status);
}

/// Convenience: the polynomial with the given integer coefficients (ascending).
inline Poly int_poly(const Field& f, std::initializer_list<long long> coefficients) {
  Poly p;
  for (auto c : coefficients) p.push_back(f.from_int(c));
  return p;
}

/// First monic irreducible polynomial of degree n over GF(p) in index order.
inline Poly find_irreducible(const Field& gf, std::size_t n) {
  const std::uint64_t q = gf.order();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= q;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly g;
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      g.push_back(gf.element_at(rest % q));
      rest /= q;
    }
    g.push_back(gf.one());
    if (poly_irreducible(gf, g) == Irreducibility::yes) return g;
  }
  throw Error("no irreducible polynomial found");
}

}  // namespace gring
