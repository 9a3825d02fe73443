#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncsphere/param.hpp"

namespace ncs {

/// Generator identifier. Ids at or above kFirstCentralId are central symbols:
/// they commute with everything and are kept at the front of every word.
using GenId = std::uint8_t;
inline constexpr GenId kFirstCentralId = 128;

inline bool is_central_id(GenId g) noexcept { return g >= kFirstCentralId; }

/// A monomial: a sequence of generator ids. The empty word is the unit.
using Word = std::basic_string<GenId>;

Word word(std::initializer_list<int> ids);
/// Moves central ids (sorted) to the front, keeping the others in place.
Word normalize_word(Word w);

/// Degree first, then lexicographic on ids.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Display names for generator ids.
class Alphabet {
public:
  /// Names "<prefix>0".."<prefix>3" for ids 0..3.
  explicit Alphabet(const std::string& prefix = "z");

  Alphabet& name(GenId id, std::string n) {
    names_[id] = std::move(n);
    return *this;
  }
  const std::string& name(GenId id) const { return names_[id]; }

  std::string render(const Word& w) const;

private:
  std::array<std::string, 256> names_;
};

/// Element of the free associative algebra with ParamScalar coefficients.
class FreeElt {
public:
  using Terms = std::map<Word, ParamScalar, WordLess>;

  FreeElt() = default;
  FreeElt(ParamScalar c);  // NOLINT: scalars embed as multiples of the unit
  FreeElt(long c) : FreeElt(ParamScalar(c)) {}  // NOLINT

  static FreeElt gen(GenId g) { return monomial(Word(1, g)); }
  static FreeElt monomial(Word w, ParamScalar c = ParamScalar(1));

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  ParamScalar coeff(const Word& w) const;

  void add_term(const Word& w, const ParamScalar& c);

  FreeElt operator-() const;
  FreeElt& operator+=(const FreeElt& o);
  FreeElt& operator-=(const FreeElt& o);
  FreeElt& operator*=(const ParamScalar& c);
  friend FreeElt operator+(FreeElt a, const FreeElt& b) { return a += b; }
  friend FreeElt operator-(FreeElt a, const FreeElt& b) { return a -= b; }
  friend FreeElt operator*(const FreeElt& a, const FreeElt& b);
  friend FreeElt operator*(FreeElt a, const ParamScalar& c) { return a *= c; }
  friend FreeElt operator*(const ParamScalar& c, FreeElt a) { return a *= c; }
  friend bool operator==(const FreeElt& a, const FreeElt& b);

  /// Reverses every word (the product of the opposite algebra).
  FreeElt reversed() const;
  /// Substitutes generator g by images[g] where present.
  FreeElt substitute(const std::map<GenId, FreeElt>& images) const;
  FreeElt map_coeffs(const std::function<ParamScalar(const ParamScalar&)>& f) const;
  /// Homogeneous component of the given degree.
  FreeElt component(std::size_t degree) const;

  /// "(c)·z0.z1 + …" in degree-then-lexicographic order.
  std::string to_string(const Alphabet& alphabet = Alphabet()) const;

private:
  Terms terms_;
};

FreeElt free_mul(const FreeElt& a, const FreeElt& b);
FreeElt commutator(const FreeElt& a, const FreeElt& b);
FreeElt anticommutator(const FreeElt& a, const FreeElt& b);

/// Conjugate-linear anti-automorphism given on generators: g ↦ coeff·image.
class Involution {
public:
  Involution() = default;
  Involution& set(GenId g, ParamScalar coeff, GenId image);
  /// z_μ ↦ λ_μ z_μ on ids 0..3; central ids map to themselves.
  static Involution from_lambda(const std::array<ParamScalar, 4>& lambda);

  FreeElt apply(const FreeElt& a) const;
  FreeElt apply_gen(GenId g) const;

private:
  std::map<GenId, std::pair<ParamScalar, GenId>> table_;
};

/// adjoint with z_μ* = λ_μ z_μ.
FreeElt adjoint(const FreeElt& a, const std::array<ParamScalar, 4>& lambda);

/// Element of a k-fold tensor power (k ≤ 4) of the free algebra.
class TensorElt {
public:
  using Key = std::vector<Word>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const;
  };
  using Terms = std::map<Key, ParamScalar, KeyLess>;

  explicit TensorElt(std::size_t factors = 2);
  static TensorElt pure(const std::vector<FreeElt>& factors);

  std::size_t factors() const noexcept { return k_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(const Key& key, const ParamScalar& c);

  TensorElt operator-() const;
  TensorElt& operator+=(const TensorElt& o);
  TensorElt& operator-=(const TensorElt& o);
  TensorElt& operator*=(const ParamScalar& c);
  friend TensorElt operator+(TensorElt a, const TensorElt& b) { return a += b; }
  friend TensorElt operator-(TensorElt a, const TensorElt& b) { return a -= b; }
  friend TensorElt operator*(TensorElt a, const ParamScalar& c) { return a *= c; }
  /// Componentwise concatenation.
  friend TensorElt operator*(const TensorElt& a, const TensorElt& b);
  /// Concatenation of tensor factors (a ⊗ b), k_a + k_b ≤ 4.
  friend TensorElt tensor(const TensorElt& a, const TensorElt& b);
  friend bool operator==(const TensorElt& a, const TensorElt& b);

  /// Swaps the two factors (k = 2) or reverses their order in general.
  TensorElt flip() const;
  /// Applies a substitution to every factor.
  TensorElt substitute(const std::map<GenId, FreeElt>& images) const;

  std::string to_string(const Alphabet& alphabet = Alphabet()) const;

private:
  std::size_t k_;
  Terms terms_;
};

/// n×n matrix (n ≤ 4) over the free algebra.
class MatFree {
public:
  explicit MatFree(std::size_t n);
  static MatFree identity(std::size_t n);
  static MatFree constant(const std::vector<std::vector<GaussRat>>& rows);

  std::size_t dim() const noexcept { return n_; }
  FreeElt& operator()(std::size_t r, std::size_t c) { return entries_.at(r * n_ + c); }
  const FreeElt& operator()(std::size_t r, std::size_t c) const { return entries_.at(r * n_ + c); }

  MatFree& operator+=(const MatFree& o);
  MatFree& operator-=(const MatFree& o);
  friend MatFree operator+(MatFree a, const MatFree& b) { return a += b; }
  friend MatFree operator-(MatFree a, const MatFree& b) { return a -= b; }
  friend MatFree operator*(const FreeElt& s, const MatFree& m);
  friend bool operator==(const MatFree& a, const MatFree& b);

  /// Transposes and applies the involution entrywise.
  MatFree adjoint(const Involution& inv) const;
  FreeElt trace() const;
  /// Block-diagonal sum.
  friend MatFree direct_sum(const MatFree& a, const MatFree& b);

private:
  std::size_t n_;
  std::vector<FreeElt> entries_;
};

MatFree mat_mul(const MatFree& a, const MatFree& b);
inline MatFree operator*(const MatFree& a, const MatFree& b) { return mat_mul(a, b); }

/// 𝕀, σ₁, σ₂, σ₃.
const std::array<MatFree, 4>& pauli_basis();
/// m = c₀𝕀 + Σ c_jσ_j for a 2×2 matrix. Throws DomainError otherwise.
std::array<FreeElt, 4> pauli_expand(const MatFree& m);
MatFree pauli_reconstruct(const std::array<FreeElt, 4>& c);

/// Pairwise anticommuting hermitian matrices squaring to 𝕀: [1] for dim 1,
/// (σ₁, σ₂) for dim 2, (σ₁, σ₂, σ₃) for dim 3.
std::vector<MatFree> clifford_generators(int dim);

}  // namespace ncs
