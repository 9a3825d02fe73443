#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncsphere/budget.hpp"
#include "ncsphere/freealg.hpp"

namespace ncs {

/// Degree-lexicographic order on words with a configurable generator
/// precedence: earlier entries of `precedence` are smaller.
class MonomialOrder {
public:
  /// z0 < z1 < z2 < z3.
  MonomialOrder();
  explicit MonomialOrder(std::vector<GenId> precedence);

  const std::vector<GenId>& generators() const noexcept { return precedence_; }
  int rank(GenId g) const;
  bool less(const Word& a, const Word& b) const;

  struct Cmp {
    const MonomialOrder* order;
    bool operator()(const Word& a, const Word& b) const { return order->less(a, b); }
  };

private:
  std::vector<GenId> precedence_;
  std::array<int, 256> rank_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

struct RewriteBuilder;

/// lead → rest, with lead larger than every word of rest.
template <typename K>
struct RewriteRule {
  Word lead;
  std::map<Word, K, WordLess> rest;
};

/// Bounded-degree rewriting system over coefficient field K (GaussRat for
/// numeric moduli, ParamScalar for symbolic ones). Immutable once built.
template <typename K>
class RewriteSystem {
public:
  using Poly = std::map<Word, K, WordLess>;

  const MonomialOrder& order() const noexcept { return *order_; }
  const std::vector<RewriteRule<K>>& rules() const noexcept { return rules_; }
  int degree_bound() const noexcept { return degree_bound_; }
  int confluent_up_to() const noexcept { return confluent_up_to_; }

  /// Throws DomainError if degree(x) exceeds the bound.
  FreeElt normal_form(const FreeElt& x) const;
  Poly reduce(const Poly& x) const;

  /// Words of each length 0..n containing no lead as a factor.
  std::vector<std::size_t> normal_word_counts(int n) const;

  /// Re-enumerates every overlap ambiguity of length ≤ confluent_up_to and
  /// checks both reductions agree; returns the offending overlap words.
  std::vector<Word> confluence_failures() const;

  /// Certificate: order, rules with lead and tail terms, and optionally a
  /// dimension table.
  std::string to_json(const std::vector<std::size_t>& dims = {}, const Alphabet& alphabet = Alphabet()) const;

  friend struct RewriteBuilder;

private:
  std::shared_ptr<const MonomialOrder> order_;
  std::vector<RewriteRule<K>> rules_;
  std::unordered_map<Word, std::size_t, WordHash> by_lead_;
  std::vector<std::size_t> lead_lengths_;
  int degree_bound_ = 0;
  int confluent_up_to_ = 0;

  const RewriteRule<K>* find_factor(const Word& w, std::size_t& at) const;
};

using NumericRewriteSystem = RewriteSystem<GaussRat>;
using SymbolicRewriteSystem = RewriteSystem<ParamScalar>;

/// Overlap completion up to words of length `degree_bound`. Inputs may be
/// inhomogeneous (lower-degree tails). Coefficient growth beyond
/// budget.max_terms() or a passed deadline raises ResourceError carrying the
/// rule count reached.
template <typename K>
RewriteSystem<K> complete(const std::vector<FreeElt>& relations, int degree_bound,
                          const MonomialOrder& order = MonomialOrder(), const Budget& budget = Budget());

/// Converts coefficients; numeric conversion throws DomainError on a
/// non-constant coefficient.
template <typename K>
std::map<Word, K, WordLess> to_poly(const FreeElt& x);
template <typename K>
FreeElt from_poly(const std::map<Word, K, WordLess>& p);

struct CentralityCertificate {
  bool central = false;
  /// normal_form([x, g]) for each generator g of the order.
  std::vector<std::pair<GenId, FreeElt>> reduced;
};

/// Pre: degree(x) + 1 ≤ degree bound.
template <typename K>
CentralityCertificate is_central(const FreeElt& x, const RewriteSystem<K>& rs);

/// Normal-word count of the algebra presented by `relations` in degree n.
template <typename K>
std::size_t graded_dimension_rewrite(const std::vector<FreeElt>& relations, int n,
                                     const MonomialOrder& order = MonomialOrder(), const Budget& budget = Budget());

/// gⁿ − dim span{u·r·v : |u|+|v| = n−2} over the generators `gens`, by
/// sparse elimination. Relations must be homogeneous of degree 2.
template <typename K>
std::size_t graded_dimension_oracle(const std::vector<FreeElt>& relations, int n,
                                    const std::vector<GenId>& gens = {0, 1, 2, 3});

/// Rewrites with the homogeneous system, then replaces the lead word of the
/// normal form of `c` by the rest of c − 1 and re-reduces, to a fixpoint.
/// Throws ResourceError after `max_steps` rounds.
template <typename K>
FreeElt filtered_normal_form(const FreeElt& x, const RewriteSystem<K>& rs, const FreeElt& c,
                             int max_steps = 64);

}  // namespace ncs
