#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ncsphere/freealg.hpp"

namespace ncs {

/// Ids of the independent adjoint generators z*_μ used by ch₁ inputs.
inline constexpr GenId kStarOffset = 4;
inline GenId star_id(int mu) { return static_cast<GenId>(kStarOffset + mu); }

/// Alphabet rendering ids 0..3 as z0..z3 and 4..7 as z*0..z*3.
Alphabet star_alphabet();

/// n×n matrix whose entries are k-fold tensors.
class MatTensor {
public:
  MatTensor(std::size_t n, std::size_t factors);
  /// Entrywise embedding of a free matrix as 1-fold tensors.
  static MatTensor lift(const MatFree& m);

  std::size_t dim() const noexcept { return n_; }
  std::size_t factors() const noexcept { return k_; }
  TensorElt& operator()(std::size_t r, std::size_t c) { return entries_.at(r * n_ + c); }
  const TensorElt& operator()(std::size_t r, std::size_t c) const { return entries_.at(r * n_ + c); }

  MatTensor& operator+=(const MatTensor& o);
  MatTensor& operator-=(const MatTensor& o);
  friend MatTensor operator+(MatTensor a, const MatTensor& b) { return a += b; }
  friend MatTensor operator-(MatTensor a, const MatTensor& b) { return a -= b; }
  friend bool operator==(const MatTensor& a, const MatTensor& b);

  /// Trace over the matrix factor only.
  TensorElt trace() const;

private:
  std::size_t n_, k_;
  std::vector<TensorElt> entries_;
};

/// (a⊗m)⊚(b⊗n) = (a⊗b)⊗(mn): matrix product with tensor concatenation.
MatTensor ocirc(const MatTensor& a, const MatTensor& b);
MatTensor ocirc(const MatFree& a, const MatFree& b);

/// Tr s.
FreeElt ch0(const MatFree& s);

/// ½·Tr(U⊚U* − U*⊚U). The ½ makes the 2×2 Pauli parametrization give
/// Σ z_μ⊗z*_μ − Σ z*_μ⊗z_μ.
TensorElt ch1(const MatFree& u, const MatFree& ustar);

/// U = z₀𝕀 + iΣz_jσ_j and U* = z*₀𝕀 − iΣz*_jσ_j with independent z*.
struct UnitaryPair {
  MatFree u, ustar;
};
UnitaryPair pauli_unitary();

/// Σ z_μ⊗z*_μ − Σ z*_μ⊗z_μ.
TensorElt expected_ch1();

/// z*_μ ↦ λ_μ z_μ on every tensor factor.
TensorElt impose_adjoint(const TensorElt& t, const std::array<ParamScalar, 4>& lambda);

/// Expansion of s² − 𝕀 for s = [[x, y], [y*, −x]] with free x, y, y*.
struct TwoSphereRigidity {
  static constexpr GenId x = 0, y = 1, ystar = 2;
  MatFree s;
  /// Entries of s² − 𝕀.
  MatFree square_minus_one;
  /// xy − yx, y*x − xy*, yy* − y*y, x² + yy* − 1.
  std::array<FreeElt, 4> derived;
  /// The entries of s² − 𝕀 span exactly the derived relations.
  bool spans_match = false;
  bool trace_free = false;
  Alphabet alphabet() const;
};
TwoSphereRigidity two_sphere_rigidity();

/// z_i = z₀·S_i with S_i the n-dimensional spin matrices scaled so that
/// [S_i, S_j] = 2i ε_ijk S_k; z₀ is the central id kFirstCentralId.
struct FuzzyCasimir {
  int n = 0;
  std::array<MatFree, 3> z{MatFree(1), MatFree(1), MatFree(1)};
  /// Σ z_i².
  MatFree casimir{MatFree(1)};
  bool casimir_matches = false;    ///< Σz_i² = (n²−1)z₀²𝕀
  bool commutators_match = false;  ///< [S_i, S_j] = 2i ε_ijk S_k
};
/// n ∈ {1, 2, 3}; throws DomainError otherwise.
FuzzyCasimir fuzzy_casimir(int n);

}  // namespace ncs
