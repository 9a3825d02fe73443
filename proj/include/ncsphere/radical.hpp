#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>

#include "ncsphere/param.hpp"

namespace ncs {

/// The ring K[√s₀, √s₁, √s₂, √s₃] over the parameter field K, where the four
/// square roots are tied by a fixed value of their product
/// √s₀·√s₁·√s₂·√s₃ = P (so P² = s₀s₁s₂s₃ must hold).
///
/// Elements are stored over the basis √s^m for m ⊆ {1,2,3}; √s₀ is rewritten
/// as P·√s₁√s₂√s₃ / (s₁s₂s₃). No square root is ever extracted.
class RadicalRing : public std::enable_shared_from_this<RadicalRing> {
public:
  /// Throws DomainError if P² ≠ s₀s₁s₂s₃ or some s_μ is zero.
  static std::shared_ptr<const RadicalRing> make(std::array<ParamScalar, 4> squares,
                                                 ParamScalar product);

  const std::array<ParamScalar, 4>& squares() const noexcept { return squares_; }
  const ParamScalar& product() const noexcept { return product_; }

private:
  RadicalRing(std::array<ParamScalar, 4> s, ParamScalar p)
      : squares_(std::move(s)), product_(std::move(p)) {}
  std::array<ParamScalar, 4> squares_;
  ParamScalar product_;
};

class RadicalElt {
public:
  using Ring = std::shared_ptr<const RadicalRing>;

  explicit RadicalElt(Ring ring) : ring_(std::move(ring)) {}
  RadicalElt(Ring ring, ParamScalar c) : ring_(std::move(ring)) { coeffs_[0] = std::move(c); }

  /// √s_μ
  static RadicalElt root(const Ring& ring, int mu);
  /// Product of √s_μ over the set bits of `mask` (bit μ for index μ).
  static RadicalElt root_product(const Ring& ring, unsigned mask);

  const Ring& ring() const noexcept { return ring_; }
  /// Coefficient of √s^m, m a subset of {1,2,3} encoded in bits 0..2.
  const ParamScalar& coeff(unsigned m) const { return coeffs_.at(m); }

  bool is_zero() const;
  /// Non-zero only on the basis element `m`, if so.
  bool is_pure() const;

  RadicalElt operator-() const;
  RadicalElt& operator+=(const RadicalElt& o);
  RadicalElt& operator-=(const RadicalElt& o);
  RadicalElt& operator*=(const RadicalElt& o);
  RadicalElt& operator*=(const ParamScalar& c);
  friend RadicalElt operator+(RadicalElt a, const RadicalElt& b) { return a += b; }
  friend RadicalElt operator-(RadicalElt a, const RadicalElt& b) { return a -= b; }
  friend RadicalElt operator*(RadicalElt a, const RadicalElt& b) { return a *= b; }
  friend RadicalElt operator*(RadicalElt a, const ParamScalar& c) { return a *= c; }

  friend bool operator==(const RadicalElt& a, const RadicalElt& b);

  std::string to_string() const;

private:
  Ring ring_;
  std::array<ParamScalar, 8> coeffs_{};
};

}  // namespace ncs
