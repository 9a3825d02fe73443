#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncsphere/freealg.hpp"
#include "ncsphere/param.hpp"
#include "ncsphere/radical.hpp"

namespace ncs {

/// Cyclic index triples (k, l, m): (1,2,3), (2,3,1), (3,1,2).
inline constexpr std::array<std::array<int, 3>, 3> kCyclic{{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};

/// The four moduli λ₀..λ₃, either symbolic or exact unit-circle values.
class ModuliParams {
public:
  static ModuliParams symbolic();
  static ModuliParams numeric(const std::array<UnitCirclePoint, 4>& values);
  /// commutative, three-relations, coarse, generic-sample, plane, two-conics, paired.
  static ModuliParams preset(const std::string& name);
  static const std::vector<std::string>& preset_names();
  /// JSON array of four entries, each {"re": "a/b", "im": "c/d"}, a
  /// Pythagorean pair [p, q], or a rational literal. Throws DomainError with
  /// the offending position on malformed input.
  static ModuliParams from_json(const std::string& text);

  bool is_symbolic() const noexcept { return !values_.has_value(); }
  const std::array<ParamScalar, 4>& lambda() const noexcept { return lambda_; }
  const ParamScalar& operator[](std::size_t mu) const { return lambda_.at(mu); }
  /// Throws DomainError for symbolic parameters.
  const std::array<UnitCirclePoint, 4>& values() const;
  std::array<GaussRat, 4> gauss_values() const;

  /// [{"re":..,"im":..}, ...] or the string "symbolic".
  std::string to_json() const;
  std::string to_string() const;

  friend bool operator==(const ModuliParams& a, const ModuliParams& b);

private:
  std::array<ParamScalar, 4> lambda_;
  std::optional<std::array<UnitCirclePoint, 4>> values_;
};

/// Relations generated by the unitarity of U = z₀𝕀 + iΣz_jσ_j with z* = λz.
struct SpherePresentation {
  ModuliParams params;
  /// Order: first form for k = 1, 2, 3, then second form for k = 1, 2, 3.
  std::array<FreeElt, 6> homogeneous;
  /// Σ λ_μ z_μ², the left side of the inhomogeneous relation.
  FreeElt central_C;
  /// 𝕀-components of UU* and U*U (equal).
  FreeElt identity_part_uu, identity_part_uu_star;
  /// Relations with identically vanishing coefficients removed.
  std::vector<FreeElt> nonzero_relations() const;
};

SpherePresentation unitarity_relations(const ModuliParams& params);

/// (λ_k−λ₀)[z₀,z_k]₊ − (λ_l+λ_m)[z_l,z_m]₋ and
/// (λ_k+λ₀)[z₀,z_k]₋ − (λ_m−λ_l)[z_l,z_m]₊, for k = 1, 2, 3 in that order.
std::array<FreeElt, 6> comm_anticomm_form(const SpherePresentation& p);

/// Dimension of the linear span of homogeneous elements.
std::size_t span_dimension(const std::vector<FreeElt>& elts);
/// Whether two families span the same linear space.
bool same_span(const std::vector<FreeElt>& a, const std::vector<FreeElt>& b);

/// Free-algebra element whose coefficients live in a radical ring; used to
/// express relations in the rescaled generators Z_μ = ρ_μ z_μ.
using RadicalFreeElt = std::map<Word, RadicalElt, WordLess>;

struct SklyaninData {
  ModuliParams params;
  std::array<ParamScalar, 3> a;       ///< a_k, index k−1
  std::array<ParamScalar, 4> rho_sq;  ///< ρ_μ²
  /// ρ₀ρ₁ρ₂ρ₃ = Π_k (λ₀+λ_k)(λ_m−λ_l)
  ParamScalar rho_product;
  std::shared_ptr<const RadicalRing> ring;

  /// ρ_μρ_ν as a radical element.
  RadicalElt pair_product(int mu, int nu) const;
  /// Every pair product squares to ρ_μ²ρ_ν², complementary pairs multiply to
  /// the fixed total product, and ρ₀ρ_k(λ_m−λ_l) = ρ_mρ_l(λ₀+λ_k).
  bool consistent() const;

  /// [Z₀,Z_k]₋ − [Z_l,Z_m]₊ then (a_m−a_l)[Z₀,Z_k]₊ − a_k[Z_l,Z_m]₋.
  std::array<FreeElt, 6> relations_Z() const;
  /// Substitutes z_μ = Z_μ/ρ_μ into a degree-2 element in z.
  RadicalFreeElt to_Z(const FreeElt& x) const;
  /// Rewriting the comm/anticomm sextet through Z_μ = ρ_μ z_μ gives the
  /// Z-relations up to explicit radical factors.
  bool reproduces_Z_relations() const;
};

/// Throws SpecialCaseError naming the vanishing factor.
SklyaninData rescale_sklyanin(const ModuliParams& params);

/// Q_k = (a_m−a_l)(Z₀²+Z_k²) + a_k(Z_m²−Z_l²), in the Z generators.
std::array<FreeElt, 3> central_elements(const SklyaninData& sk);
/// The same elements in the z generators, through Z_μ² = ρ_μ² z_μ².
std::array<FreeElt, 3> central_elements_z(const SklyaninData& sk);

/// Whether Z_μ* = f_μ Z_μ with f_μ = λ_μ ρ_μ*/ρ_μ = λ_μ conj(ρ_μ²)/|ρ_μ²|.
enum class HermiticityFlag { Hermitian, AntiHermitian, PhaseDependent };
std::string to_string(HermiticityFlag f);

struct HermiticityReport {
  std::array<HermiticityFlag, 4> flags;
  /// f_μ² = 1/Πλ for every μ, checked symbolically.
  bool square_identity = false;
  /// Πf_μ = −1/(Πλ)², checked symbolically.
  bool product_identity = false;
};

/// Flags are computed at numeric parameters; symbolic identities always.
HermiticityReport hermiticity(const SklyaninData& sk);

struct CaseTag {
  /// Groups of indices with equal λ², in index order.
  std::vector<std::vector<int>> partition;
  /// Relations such as "λ0=-λ3" or "λ1=λ2" inside each group.
  std::vector<std::string> sign_relations;
  /// generic | two-conics | plane | paired | coarse | commutative | three-relations
  std::string name;
};

CaseTag classify_case(const ModuliParams& params);

struct NormalizedModuli {
  ModuliParams params;
  CaseTag tag;
  /// new index μ takes old index perm[μ]
  std::array<int, 4> perm;
  /// 'A' or 'B'
  char domain;
};

/// Representative with λ₀ = 1 satisfying one of the two fundamental-domain
/// inequalities; ties are broken lexicographically on (re, im).
NormalizedModuli normalize_moduli(const std::array<UnitCirclePoint, 4>& values);
/// Whether the given λ (with λ₀ = 1) satisfies the first / second inequality chain.
bool in_domain_A(const std::array<GaussRat, 4>& l);
bool in_domain_B(const std::array<GaussRat, 4>& l);

enum class TwistMode { Symmetry, CrossProduct };

/// λ with the signs in `flips` (bitmask) changed, then re-indexed so that new
/// index μ takes old index perm[μ]. Symmetry mode requires an even number of
/// flips.
ModuliParams twist(const ModuliParams& params, unsigned flips, const std::array<int, 4>& perm,
                   TwistMode mode = TwistMode::Symmetry);

/// Generators and constraints of a low-dimensional sphere.
struct SphereData {
  /// U (odd case) or s (even case).
  MatFree gen;
  bool even;
  FreeElt C;
  Involution adj;
  /// Word rewrites imposed on entries (e.g. u·u* → 1).
  std::map<Word, FreeElt> constraints;

  /// Applies the constraints to a fixpoint.
  FreeElt reduce(const FreeElt& x) const;
  MatFree reduce(const MatFree& m) const;
  /// UU* = U*U = C𝕀 (odd) or s² = C𝕀 and s* = s (even).
  bool satisfies_defining_relation() const;
};

/// Circle: a single unitary u (id 4, adjoint id 5) with C = 1.
SphereData circle_sphere();
/// Adjoins the central self-adjoint symbol `x` (an id ≥ kFirstCentralId).
SphereData suspend(const SphereData& d, GenId x);

}  // namespace ncs
