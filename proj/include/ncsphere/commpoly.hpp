#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncsphere/budget.hpp"
#include "ncsphere/param.hpp"

namespace ncs {

inline constexpr std::size_t kMaxCommVars = 12;

/// Exponent vector of a commutative monomial in at most kMaxCommVars variables.
using Monomial = std::array<std::uint8_t, kMaxCommVars>;

enum class MonoOrder { DegRevLex, Lex };

int monomial_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
/// b / a, assuming divides(a, b).
Monomial monomial_div(const Monomial& b, const Monomial& a);

struct MonoLess {
  MonoOrder order = MonoOrder::DegRevLex;
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Commutative polynomial (in y₀..y₃, Y₀..Y₃ and auxiliary variables) with
/// ParamScalar coefficients. Terms are kept in a map ordered by the active
/// monomial order, so the leading term is the last entry.
class CommPoly {
public:
  using Terms = std::map<Monomial, ParamScalar, MonoLess>;

  explicit CommPoly(MonoOrder order = MonoOrder::DegRevLex) : terms_(MonoLess{order}) {}
  CommPoly(ParamScalar c, MonoOrder order = MonoOrder::DegRevLex);  // NOLINT

  static CommPoly var(std::size_t index, MonoOrder order = MonoOrder::DegRevLex);
  static CommPoly term(const Monomial& m, ParamScalar c, MonoOrder order = MonoOrder::DegRevLex);

  MonoOrder order() const noexcept { return terms_.key_comp().order; }
  CommPoly with_order(MonoOrder o) const;

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const;
  bool is_homogeneous() const;

  const Monomial& leading_monomial() const;
  const ParamScalar& leading_coeff() const;
  /// Coefficient of monomial `m` (zero if absent).
  ParamScalar coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const ParamScalar& c);

  CommPoly operator-() const;
  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  CommPoly& operator*=(const ParamScalar& c);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  friend CommPoly operator*(CommPoly a, const ParamScalar& c) { return a *= c; }
  friend CommPoly operator*(const ParamScalar& c, CommPoly a) { return a *= c; }
  CommPoly pow(unsigned e) const;
  CommPoly times_monomial(const Monomial& m, const ParamScalar& c) const;

  /// Substitutes variable k by images[k] for k < images.size().
  CommPoly compose(const std::vector<CommPoly>& images) const;
  /// Applies `f` to every coefficient.
  CommPoly map_coeffs(const std::function<ParamScalar(const ParamScalar&)>& f) const;
  /// Evaluates every variable k < values.size() at values[k].
  ParamScalar evaluate(const std::vector<ParamScalar>& values) const;
  /// Exact quotient by `f`, or nullopt if f does not divide.
  std::optional<CommPoly> divide_exact(const CommPoly& f) const;
  /// Rescales so the leading coefficient is one.
  CommPoly monic() const;

  friend bool operator==(const CommPoly& a, const CommPoly& b);

  std::string to_string(const std::vector<std::string>& names) const;

private:
  Terms terms_;
};

/// Variable names y0..y3 used by default for rendering.
const std::vector<std::string>& default_var_names();

/// Buchberger output: generators plus the order used.
class GroebnerBasis {
public:
  GroebnerBasis() = default;

  const std::vector<CommPoly>& generators() const noexcept { return gens_; }
  MonoOrder order() const noexcept { return order_; }
  bool reduced() const noexcept { return reduced_; }

  /// Full normal form; zero iff p lies in the ideal.
  CommPoly reduce(const CommPoly& p) const;
  bool contains(const CommPoly& p) const { return reduce(p).is_zero(); }
  /// Every S-polynomial reduces to zero (post hoc certificate).
  bool satisfies_s_criterion() const;

private:
  friend GroebnerBasis groebner_basis(const std::vector<CommPoly>&, MonoOrder, const Budget&);
  std::vector<CommPoly> gens_;
  MonoOrder order_ = MonoOrder::DegRevLex;
  bool reduced_ = false;
};

/// Reduced Gröbner basis by Buchberger's algorithm with the product and
/// chain criteria. Throws DomainError for an empty generator list.
GroebnerBasis groebner_basis(const std::vector<CommPoly>& gens,
                             MonoOrder order = MonoOrder::DegRevLex,
                             const Budget& budget = Budget());

CommPoly reduce_mod(const CommPoly& p, const GroebnerBasis& gb);

CommPoly s_polynomial(const CommPoly& f, const CommPoly& g);

}  // namespace ncs
