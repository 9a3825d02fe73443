#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "ncsphere/errors.hpp"

namespace ncs {

using Integer = mpz_class;
/// Canonical rational (gcd(num, den) = 1, den > 0); GMP keeps it canonical.
using Rat = mpq_class;

Rat parse_rat(std::string_view text);
std::string rat_to_string(const Rat& r);

/// Gaussian rational re + im*i.
class GaussRat {
public:
  GaussRat() = default;
  GaussRat(long v) : re_(v) {}  // NOLINT: implicit from integer literals
  GaussRat(Rat re) : re_(std::move(re)) {}  // NOLINT
  GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  const Rat& re() const noexcept { return re_; }
  const Rat& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  /// re² + im²
  Rat norm() const { return re_ * re_ + im_ * im_; }
  GaussRat inverse() const;

  GaussRat operator-() const { return GaussRat(-re_, -im_); }
  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Lexicographic on (re, im); used only for deterministic tie-breaking.
  friend std::strong_ordering lex_compare(const GaussRat& a, const GaussRat& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const;
  std::size_t hash() const;

private:
  Rat re_{0};
  Rat im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRat& g);

/// A Gaussian rational of norm exactly one. These are the only numeric
/// values the moduli parameters are ever specialised to.
class UnitCirclePoint {
public:
  UnitCirclePoint() : value_(1) {}
  /// Throws DomainError unless re² + im² = 1.
  explicit UnitCirclePoint(GaussRat value);

  /// ((p² − q²) + 2pq·i) / (p² + q²)
  static UnitCirclePoint from_pythagorean(const Integer& p, const Integer& q);

  const GaussRat& value() const noexcept { return value_; }
  /// Equal to the conjugate, exactly.
  UnitCirclePoint inverse() const { return UnitCirclePoint(value_.conj(), Trusted{}); }
  UnitCirclePoint operator*(const UnitCirclePoint& o) const {
    return UnitCirclePoint(value_ * o.value_, Trusted{});
  }
  UnitCirclePoint operator-() const { return UnitCirclePoint(-value_, Trusted{}); }

  friend bool operator==(const UnitCirclePoint& a, const UnitCirclePoint& b) {
    return a.value_ == b.value_;
  }

private:
  struct Trusted {};
  UnitCirclePoint(GaussRat v, Trusted) : value_(std::move(v)) {}
  GaussRat value_;
};

/// Exact angular predicates on the unit circle (no trigonometry).
namespace circle {
/// 0 for arguments in [0, π), 1 for [π, 2π).
int half(const GaussRat& u);
/// Compares arguments taken in [0, 2π).
std::strong_ordering compare_angle(const GaussRat& u, const GaussRat& v);
/// Sign of Im(u · conj(v)), i.e. of the cross product v × u.
int cross_sign(const GaussRat& u, const GaussRat& v);
}  // namespace circle

}  // namespace ncs

template <>
struct std::hash<ncs::GaussRat> {
  std::size_t operator()(const ncs::GaussRat& g) const { return g.hash(); }
};
