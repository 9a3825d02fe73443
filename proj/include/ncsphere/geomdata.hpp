#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncsphere/commpoly.hpp"
#include "ncsphere/linalg.hpp"
#include "ncsphere/radical.hpp"
#include "ncsphere/sphere.hpp"

namespace ncs {

// Commutative variable layout: the first point uses 0..3, the second point
// of E×E uses 4..7, and the square-substitution parameters are 8 and 9.
inline constexpr std::size_t kFirstPoint = 0;
inline constexpr std::size_t kSecondPoint = 4;
inline constexpr std::size_t kCurveParam = 8;
inline constexpr std::size_t kSecondCurveParam = 9;

/// y_μ (or Y_μ) of the point starting at `base`.
CommPoly coord(std::size_t mu, std::size_t base = kFirstPoint);
std::array<CommPoly, 4> coords(std::size_t base = kFirstPoint);
/// Names y0..y3, y'0..y'3, t, t' (or the Y variants) for rendering.
std::vector<std::string> coord_names(char letter);

/// Homogeneous coordinates over T (ParamScalar, CommPoly or RadicalElt).
template <typename T>
struct ProjPoint {
  std::array<T, 4> c;
  /// 'y' for λ-coordinates, 'Y' for scaled coordinates.
  char alphabet = 'y';
};

template <typename T>
bool all_zero(const std::array<T, 4>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// a ∝ b: both nonzero and every 2×2 minor of the pair vanishes. `zero`
/// decides vanishing (e.g. reduction modulo a curve ideal).
template <typename T>
bool projectively_equal(const std::array<T, 4>& a, const std::array<T, 4>& b,
                        const std::function<bool(const T&)>& zero = [](const T& x) { return x.is_zero(); }) {
  bool za = true, zb = true;
  for (std::size_t i = 0; i < 4; ++i) {
    za = za && zero(a[i]);
    zb = zb && zero(b[i]);
  }
  if (za || zb) return false;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (!zero(a[i] * b[j] - a[j] * b[i])) return false;
  return true;
}

template <typename T>
using Rows6 = std::array<std::array<T, 4>, 6>;

/// The 6×4 characteristic matrix at a point y: row r holds the coefficients
/// of y' in the r-th relation read as a bilinear form in (y, y').
template <typename T>
Rows6<T> char_matrix_at(const std::array<ParamScalar, 4>& l, const std::array<T, 4>& y) {
  auto e = [&](int lam, int mu, int sign) {
    T v = y[static_cast<std::size_t>(mu)] * l[static_cast<std::size_t>(lam)];
    return sign < 0 ? T(-v) : v;
  };
  return {{
      {e(0, 1, 1), e(1, 0, -1), e(2, 3, -1), e(3, 2, 1)},
      {e(0, 2, 1), e(1, 3, 1), e(2, 0, -1), e(3, 1, -1)},
      {e(0, 3, 1), e(1, 2, -1), e(2, 1, 1), e(3, 0, -1)},
      {e(1, 1, -1), e(0, 0, 1), e(3, 3, -1), e(2, 2, 1)},
      {e(2, 2, -1), e(3, 3, 1), e(0, 0, 1), e(1, 1, -1)},
      {e(3, 3, -1), e(2, 2, -1), e(1, 1, 1), e(0, 0, 1)},
  }};
}

using CharMatrix = Rows6<CommPoly>;
CharMatrix char_matrix(const ModuliParams& params, std::size_t base = kFirstPoint);

template <typename T>
T det3(const std::array<std::array<T, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Kernel direction of three rows: signed 3×3 minors.
template <typename T>
std::array<T, 4> kernel_of_rows(const std::array<std::array<T, 4>, 3>& rows) {
  auto minor = [&](std::size_t j) {
    auto at = [&](std::size_t r, std::size_t k) { return rows[r][k < j ? k : k + 1]; };
    std::array<std::array<T, 3>, 3> m{{{at(0, 0), at(0, 1), at(0, 2)},
                                       {at(1, 0), at(1, 1), at(1, 2)},
                                       {at(2, 0), at(2, 1), at(2, 2)}}};
    T d = det3(m);
    return (j % 2) ? T(-d) : d;
  };
  return {minor(0), minor(1), minor(2), minor(3)};
}

template <typename T>
T det4_rows(const Rows6<T>& m, const std::array<std::size_t, 4>& rows) {
  std::array<std::array<T, 4>, 3> lower{{m[rows[1]], m[rows[2]], m[rows[3]]}};
  auto cof = kernel_of_rows(lower);
  T sum = m[rows[0]][0] * cof[0];
  for (std::size_t j = 1; j < 4; ++j) sum += m[rows[0]][j] * cof[j];
  return sum;
}

/// The fifteen row quadruples, in lexicographic order.
const std::vector<std::array<std::size_t, 4>>& row_quadruples();

/// Σy², Σλ²y² in the point at `base`.
std::array<CommPoly, 2> curve_quadrics(const ModuliParams& params, std::size_t base = kFirstPoint);
GroebnerBasis curve_groebner(const ModuliParams& params, std::size_t base = kFirstPoint,
                             const Budget& budget = Budget());

/// det(rows 1,2,4,5) against (λ₀λ₃+λ₁λ₂)[(y₁²+y₂²)(λ₀²y₀²+λ₃²y₃²) − (y₀²+y₃²)(λ₁²y₁²+λ₂²y₂²)].
struct Det1245Report {
  bool equals_display = false;
  /// The determinant equals −1 times the displayed product.
  bool equals_negated_display = false;
};
Det1245Report verify_det_1245(const ModuliParams& params);
CommPoly det_1245_factorization(const ModuliParams& params);

struct MinorsReport {
  std::vector<std::array<std::size_t, 4>> rows;
  std::vector<bool> in_ideal;
  bool all() const;
  /// First offending quadruple, as "r1,r2,r3,r4" (1-based), or "".
  std::string first_failure() const;
};

/// Reduces each 4×4 minor modulo the Gröbner basis of the two quadrics.
MinorsReport minors_in_ideal(const ModuliParams& params, const Budget& budget = Budget());

/// The 3×3 minors of rows 1–3 are divisible by Σy², those of rows 4–6 by Σλ²y².
struct MinorFactorReport {
  bool upper_divisible = false;
  bool lower_divisible = false;
};
MinorFactorReport minors_common_factors(const ModuliParams& params);

struct SpecialPoints {
  std::shared_ptr<const RadicalRing> ring;
  /// y_μ² of the nontrivial solutions.
  std::array<ParamScalar, 4> squares;
  /// P₀..P₃, then the base nontrivial point and its pair sign flips {0,1}, {0,2}, {0,3}.
  std::vector<ProjPoint<RadicalElt>> points;
  bool satisfy_special_equations = false;
  /// Σy² = 0 and Σλ²y² = 0 for the nontrivial points (as identities in λ).
  bool on_both_quadrics = false;
  /// Each point lies in E (all fifteen minors vanish at it).
  std::vector<bool> in_E;
  /// σ(P) = P, with σ(P) the kernel of the characteristic matrix at P.
  std::vector<bool> sigma_fixed;
};

/// Throws SpecialCaseError when two λ² coincide.
SpecialPoints special_points(const ModuliParams& params);

/// Kernel of a 6×4 system of rank 3 via the first row triple with a nonzero
/// minor vector; verified against all six rows. nullopt if the rank is not 3.
template <typename T>
std::optional<std::array<T, 4>> kernel_rank3(const Rows6<T>& m) {
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b)
      for (std::size_t c = b + 1; c < 6; ++c) {
        auto v = kernel_of_rows<T>({m[a], m[b], m[c]});
        if (all_zero(v)) continue;
        for (const auto& row : m) {
          T s = row[0] * v[0] + row[1] * v[1] + row[2] * v[2] + row[3] * v[3];
          if (!s.is_zero()) return std::nullopt;
        }
        return v;
      }
  return std::nullopt;
}

// ---- scaled coordinates -------------------------------------------------

/// The 6×4 matrix N(Z) in Y variables at `base`.
Rows6<CommPoly> n_matrix(const std::array<ParamScalar, 3>& a, std::size_t base = kFirstPoint);
/// The two scaled quadrics obtained from Σy² and Σλ²y² through Y = ρy.
std::array<CommPoly, 2> scaled_quadrics(const ModuliParams& params, std::size_t base = kFirstPoint);

/// σ(Z): signed 3×3 minors of the first three rows of N(Z) (degree 3).
std::array<CommPoly, 4> sigma_scaled(std::size_t base = kFirstPoint);
/// σ⁻¹ = I₀∘σ∘I₀.
std::array<CommPoly, 4> sigma_inverse_scaled(std::size_t base = kFirstPoint);
/// I∘I₀ with I inverting the λ-coordinates MY (projectively, products of the others).
std::array<CommPoly, 4> involution_product(std::size_t base = kFirstPoint);

/// Evaluates σ at a concrete point; throws SpecialCaseError on a rank drop.
ProjPoint<ParamScalar> sigma_apply(const ProjPoint<ParamScalar>& z);

/// σ in y-coordinates: kernel of rows 1, 2, 4 of the characteristic matrix.
std::array<CommPoly, 4> sigma_y(const ModuliParams& params, std::size_t base = kFirstPoint);
std::array<CommPoly, 4> sigma_inverse_y(const ModuliParams& params, std::size_t base = kFirstPoint);

/// (y_μ) ↦ (λ_μ* y_μ*).
ProjPoint<ParamScalar> reality_j(const ModuliParams& params, const ProjPoint<ParamScalar>& p);

struct RealityReport {
  bool involutive = false;          ///< j² = id on sample points
  bool preserves_curve = false;     ///< q_i∘j in the curve ideal
  bool intertwines_sigma = false;   ///< j∘σ = σ⁻¹∘j modulo the curve ideal
};
RealityReport reality_checks(const ModuliParams& params, const Budget& budget = Budget());

// ---- elliptic identification -------------------------------------------

/// ½·sign matrix; `printed` is the singular variant with equal last rows.
Matrix<GaussRat> involutive_m();
Matrix<GaussRat> printed_m();

struct CurveIdentification {
  bool coefficient_sums_vanish = false;    ///< (i)
  bool b_ratio_matches_a = false;          ///< (ii)
  bool scaled_quadrics_match = false;      ///< genscale ∝ quadrics through Y = ρy
  bool m_involutive = false;               ///< (iii) M² = I
  bool m_maps_b_to_a = false;              ///< B_k(Mλ) = a_k(λ)
  bool n_rows_display = false;             ///< (iv)
  bool printed_m_involutive = false;
  bool printed_m_display = false;
  /// Sign matrices ½(±1) with M² = I and the row display.
  std::vector<Matrix<GaussRat>> sign_solutions;
};

CurveIdentification curve_identification(const ModuliParams& params);

/// Square-substitution normal form: Y_k² → Y₀² − t·a_k in the point at
/// `base` with parameter variable `tvar`.
CommPoly curve_normal_form(const CommPoly& p, const std::array<ParamScalar, 3>& a, std::size_t base,
                           std::size_t tvar);

struct CentralQuadraticForm {
  std::array<std::array<ParamScalar, 4>, 4> q;
  /// Σ q_ij U_i V_j.
  CommPoly evaluate(const std::array<CommPoly, 4>& u, const std::array<CommPoly, 4>& v) const;
  bool symmetric() const;
};

/// Polarization of Q_k (k = 1, 2, 3) in the scaled generators.
CentralQuadraticForm central_form(const std::array<ParamScalar, 3>& a, int k);
/// The six scaled relations as bilinear coefficient arrays.
std::array<std::array<std::array<ParamScalar, 4>, 4>, 6> relation_forms(const std::array<ParamScalar, 3>& a);

struct CentralFormReport {
  int k = 0;
  /// ω(Z, σ(Z)) ≡ 0 for each ω.
  std::array<bool, 6> sigma_annihilates{};
  /// The twisted identity for each ω, modulo the curve in Z and Z'.
  std::array<bool, 6> identity_holds{};
  bool q_on_sigma_graph = false;
  /// Square substitution and Gröbner reduction agree on Q(Z,σ(Z)).
  bool strategies_agree = false;
  /// Whether the identity holds with Z = P_μ and Z' on the curve (reported only).
  std::array<bool, 4> at_special_points{};
  bool all() const;
};

CentralFormReport central_form_check(const ModuliParams& params, int k, const Budget& budget = Budget());

// ---- degenerate cases ----------------------------------------------------

struct VarietyReport {
  std::string case_name;
  std::vector<std::string> components;
  /// Named yes/no facts established for this case.
  std::vector<std::pair<std::string, bool>> checks;
  /// Rank of the characteristic matrix at sample points ("(y0,y1,y2,y3)" → rank).
  std::vector<std::pair<std::string, std::size_t>> rank_profile;
};

VarietyReport classify_variety(const ModuliParams& params);

std::string to_json(const ProjPoint<ParamScalar>& p);

}  // namespace ncs
