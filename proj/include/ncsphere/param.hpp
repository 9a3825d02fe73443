#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncsphere/scalar.hpp"

namespace ncs {

/// Exponent vector for λ₀..λ₃ (negative entries allowed).
using LambdaExps = std::array<std::int16_t, 4>;

/// Sparse Laurent polynomial in λ₀..λ₃ with Gaussian-rational coefficients.
/// Terms are kept sorted by exponent vector with no zero coefficients.
class LaurentPoly {
public:
  struct Term {
    LambdaExps exps;
    GaussRat coeff;
  };

  LaurentPoly() = default;
  LaurentPoly(GaussRat c);  // NOLINT: constants convert implicitly
  LaurentPoly(long c) : LaurentPoly(GaussRat(c)) {}  // NOLINT

  static LaurentPoly monomial(const LambdaExps& e, GaussRat c = GaussRat(1));
  static LaurentPoly lambda(int mu, int power = 1);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// Only meaningful when is_constant().
  GaussRat constant_value() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly scaled(const GaussRat& c) const;
  LaurentPoly shifted(const LambdaExps& e) const;

  /// λ_μ ↦ λ_μ⁻¹ and coefficients conjugated.
  LaurentPoly star() const;
  /// Substitutes λ_μ = values[μ] (unit-circle values invert by conjugation).
  GaussRat evaluate(const std::array<GaussRat, 4>& values) const;
  /// Componentwise minimum exponent over all terms (zero vector if empty).
  LambdaExps min_exps() const;
  /// Exact quotient in the Laurent ring, or nullopt if `d` does not divide.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  std::string to_string() const;

private:
  explicit LaurentPoly(std::vector<Term> t) : terms_(std::move(t)) {}
  std::vector<Term> terms_;
};

/// Element of the parameter field Q(i)(λ₀..λ₃): a quotient of Laurent
/// polynomials. Denominators are normalised (monomials absorbed, exact
/// quotients taken, leading coefficient one) but no multivariate gcd is run,
/// so equality is decided by cross-multiplication.
class ParamScalar {
public:
  ParamScalar() = default;
  ParamScalar(long c) : num_(c) {}  // NOLINT
  ParamScalar(GaussRat c) : num_(std::move(c)) {}  // NOLINT
  ParamScalar(const UnitCirclePoint& u) : num_(u.value()) {}  // NOLINT
  ParamScalar(LaurentPoly n) : num_(std::move(n)) {}  // NOLINT
  ParamScalar(LaurentPoly n, LaurentPoly d);

  static ParamScalar lambda(int mu) { return ParamScalar(LaurentPoly::lambda(mu)); }
  static ParamScalar i() { return ParamScalar(GaussRat::i()); }

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  GaussRat constant_value() const;
  bool is_polynomial() const { return den_.is_one(); }
  /// Number of stored terms; used for size budgets.
  std::size_t size() const noexcept { return num_.size() + den_.size(); }

  ParamScalar operator-() const;
  ParamScalar& operator+=(const ParamScalar& o);
  ParamScalar& operator-=(const ParamScalar& o);
  ParamScalar& operator*=(const ParamScalar& o);
  ParamScalar& operator/=(const ParamScalar& o);
  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(ParamScalar a, const ParamScalar& b) { return a *= b; }
  friend ParamScalar operator/(ParamScalar a, const ParamScalar& b) { return a /= b; }
  ParamScalar inverse() const;
  ParamScalar pow(unsigned e) const;

  ParamScalar star() const;
  ParamScalar evaluate(const std::array<GaussRat, 4>& values) const;

  friend bool operator==(const ParamScalar& a, const ParamScalar& b);

  std::string to_string() const;

private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_{1};
};

std::ostream& operator<<(std::ostream& os, const ParamScalar& s);

}  // namespace ncs
