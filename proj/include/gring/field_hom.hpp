#pragma once

#include <string>
#include <utility>

#include "gring/linalg.hpp"
#include "gring/report.hpp"

namespace gring {

/// Homomorphism base[x]/(g) -> target fixing the common base field,
/// determined by the image of the generator x.
class FieldHom {
 public:
  FieldHom(Field source, Field target, Elem generator_image)
      : source_(std::move(source)), target_(std::move(target)), image_(std::move(generator_image)) {
    if (!source_.is_extension()) throw SpecMismatch("field hom source must be a simple extension");
    if (!target_.contains(image_)) throw SpecMismatch("generator image is not an element of the target");
  }

  const Field& source() const { return source_; }
  const Field& target() const { return target_; }
  const Elem& generator_image() const { return image_; }

  Elem apply(const Elem& a) const {
    return poly::eval(source_.base(), source_.coefficients(a), target_, image_);
  }

  /// Matrix over the common base, columns = images of 1, x, ..., x^(n-1),
  /// for targets that are extensions of the same base.
  Matrix matrix() const {
    const std::size_t n = source_.degree();
    const std::size_t m = target_.degree();
    Matrix out(source_.base(), m, n);
    Elem power = target_.one();
    for (std::size_t j = 0; j < n; ++j) {
      const Poly& c = target_.coefficients(power);
      for (std::size_t i = 0; i < m; ++i) out(i, j) = c[i];
      power = target_.mul(power, image_);
    }
    return out;
  }

 private:
  Field source_;
  Field target_;
  Elem image_;
};

/// Empty report iff the modulus of the source vanishes at the generator image
/// in the target and the base fields agree. Multiplicativity and additivity
/// are then re-checked on every pair of power-basis elements.
inline ValidationReport verify_field_hom(const FieldHom& h) {
  const Field& src = h.source();
  const Field& dst = h.target();
  if (!dst.is_extension() || src.base() != dst.base()) {
    throw SpecMismatch("field hom " + src.describe() + " -> " + dst.describe() + " does not share a base field");
  }
  ValidationReport report;
  const Elem g_at_image = poly::eval(src.base(), src.modulus(), dst, h.generator_image());
  if (!dst.is_zero(g_at_image)) {
    report.add("modulus-at-image", {}, "modulus evaluated at the generator image is " + dst.format(g_at_image));
    return report;
  }
  if (!dst.is_one(h.apply(src.one()))) report.add("unital", {}, "1 is not mapped to 1");
  const std::size_t n = src.degree();
  std::vector<Elem> basis;
  Elem power = src.one();
  for (std::size_t i = 0; i < n; ++i) {
    basis.push_back(power);
    power = src.mul(power, src.generator());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (h.apply(src.mul(basis[i], basis[j])) != dst.mul(h.apply(basis[i]), h.apply(basis[j]))) {
        report.add("multiplicative", {i, j});
      }
      if (h.apply(src.add(basis[i], basis[j])) != dst.add(h.apply(basis[i]), h.apply(basis[j]))) {
        report.add("additive", {i, j});
      }
    }
  }
  return report;
}

}  // namespace gring
