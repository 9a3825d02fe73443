#include "ncsphere/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string_view>
#include <tuple>

#include <nlohmann/json.hpp>

#include "ncsphere/linalg.hpp"

namespace ncs {

MonomialOrder::MonomialOrder() : MonomialOrder(std::vector<GenId>{0, 1, 2, 3}) {}

MonomialOrder::MonomialOrder(std::vector<GenId> precedence) : precedence_(std::move(precedence)) {
  rank_.fill(-1);
  for (std::size_t k = 0; k < precedence_.size(); ++k) {
    if (rank_[precedence_[k]] != -1) throw DomainError("repeated generator in precedence list");
    rank_[precedence_[k]] = static_cast<int>(k);
  }
}

int MonomialOrder::rank(GenId g) const {
  int r = rank_[g];
  if (r < 0) throw DomainError("generator " + std::to_string(g) + " is not ordered");
  return r;
}

bool MonomialOrder::less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return rank(a[k]) < rank(b[k]);
  return false;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(w.data()), w.size()));
}

namespace {

std::size_t coeff_size(const GaussRat& c) {
  auto limbs = [](const Rat& q) {
    return mpz_size(q.get_num_mpz_t()) + mpz_size(q.get_den_mpz_t());
  };
  return limbs(c.re()) + limbs(c.im());
}
std::size_t coeff_size(const ParamScalar& c) { return c.size(); }

GaussRat convert(const ParamScalar& c, const GaussRat*) {
  if (!c.is_constant()) throw DomainError("numeric rewriting needs constant coefficients, got " + c.to_string());
  return c.constant_value();
}
ParamScalar convert(const ParamScalar& c, const ParamScalar*) { return c; }

template <typename K>
using OrderedPoly = std::map<Word, K, MonomialOrder::Cmp>;

template <typename K, typename Map>
void add_to(Map& m, const Word& w, const K& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = m.try_emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

template <typename K>
std::string coeff_string(const K& c) {
  return c.to_string();
}

}  // namespace

template <typename K>
std::map<Word, K, WordLess> to_poly(const FreeElt& x) {
  std::map<Word, K, WordLess> out;
  for (const auto& [w, c] : x.terms()) {
    K v = convert(c, static_cast<const K*>(nullptr));
    if (!v.is_zero()) out.emplace(w, std::move(v));
  }
  return out;
}

template <typename K>
FreeElt from_poly(const std::map<Word, K, WordLess>& p) {
  FreeElt out;
  for (const auto& [w, c] : p) out.add_term(w, ParamScalar(c));
  return out;
}

template <typename K>
const RewriteRule<K>* RewriteSystem<K>::find_factor(const Word& w, std::size_t& at) const {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t len : lead_lengths_) {
      if (i + len > w.size()) break;
      auto it = by_lead_.find(w.substr(i, len));
      if (it != by_lead_.end()) {
        at = i;
        return &rules_[it->second];
      }
    }
  return nullptr;
}

template <typename K>
typename RewriteSystem<K>::Poly RewriteSystem<K>::reduce(const Poly& x) const {
  // Pop the largest remaining word; every replacement is strictly smaller,
  // so popped words arrive in decreasing order and never collide.
  OrderedPoly<K> work(MonomialOrder::Cmp{order_.get()});
  for (const auto& [w, c] : x) add_to(work, w, c);
  Poly out;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Word w = it->first;
    K c = std::move(it->second);
    work.erase(it);
    std::size_t at = 0;
    const RewriteRule<K>* r = find_factor(w, at);
    if (!r) {
      out.emplace(std::move(w), std::move(c));
      continue;
    }
    Word u = w.substr(0, at), v = w.substr(at + r->lead.size());
    for (const auto& [tw, tc] : r->rest) add_to(work, u + tw + v, c * tc);
  }
  return out;
}

template <typename K>
FreeElt RewriteSystem<K>::normal_form(const FreeElt& x) const {
  if (x.degree() > degree_bound_)
    throw DomainError("degree " + std::to_string(x.degree()) + " exceeds rewriting bound " +
                      std::to_string(degree_bound_));
  return from_poly(reduce(to_poly<K>(x)));
}

template <typename K>
std::vector<std::size_t> RewriteSystem<K>::normal_word_counts(int n) const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(n) + 1, 0);
  const auto& gens = order_->generators();
  // Depth-first over words whose proper prefixes are normal; only suffixes
  // of the extended word need checking.
  std::vector<Word> layer{Word()};
  counts[0] = 1;
  for (int d = 1; d <= n; ++d) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (GenId g : gens) {
        Word e = w + g;
        bool reducible = false;
        for (std::size_t len : lead_lengths_) {
          if (len > e.size()) break;
          if (by_lead_.count(e.substr(e.size() - len))) {
            reducible = true;
            break;
          }
        }
        if (!reducible) next.push_back(std::move(e));
      }
    counts[static_cast<std::size_t>(d)] = next.size();
    layer = std::move(next);
  }
  return counts;
}

template <typename K>
std::vector<Word> RewriteSystem<K>::confluence_failures() const {
  std::vector<Word> bad;
  auto check = [&](const Word& w, const Poly& left, const Poly& right) {
    Poly a = reduce(left), b = reduce(right);
    if (!(a == b)) bad.push_back(w);
  };
  for (const auto& ra : rules_)
    for (const auto& rb : rules_) {
      std::size_t la = ra.lead.size(), lb = rb.lead.size();
      // overlaps: suffix of a equals prefix of b
      for (std::size_t k = 1; k < std::min(la, lb); ++k) {
        if (la + lb - k > static_cast<std::size_t>(confluent_up_to_)) continue;
        if (ra.lead.compare(la - k, k, rb.lead, 0, k) != 0) continue;
        Word u = ra.lead.substr(0, la - k), v = rb.lead.substr(k);
        Poly left, right;
        for (const auto& [w, c] : ra.rest) add_to(left, w + v, c);
        for (const auto& [w, c] : rb.rest) add_to(right, u + w, c);
        check(ra.lead + v, left, right);
      }
      // inclusions: b strictly inside a
      if (&ra == &rb || lb > la) continue;
      for (std::size_t i = 0; i + lb <= la; ++i) {
        if (ra.lead.compare(i, lb, rb.lead) != 0) continue;
        Word u = ra.lead.substr(0, i), v = ra.lead.substr(i + lb);
        Poly right;
        for (const auto& [w, c] : rb.rest) add_to(right, u + w + v, c);
        check(ra.lead, ra.rest, right);
      }
    }
  return bad;
}

template <typename K>
std::string RewriteSystem<K>::to_json(const std::vector<std::size_t>& dims, const Alphabet& alphabet) const {
  nlohmann::ordered_json j;
  j["degree_bound"] = degree_bound_;
  j["confluent_up_to"] = confluent_up_to_;
  auto& prec = j["precedence"] = nlohmann::ordered_json::array();
  for (GenId g : order_->generators()) prec.push_back(alphabet.name(g));
  auto& rules = j["rules"] = nlohmann::ordered_json::array();
  for (const auto& r : rules_) {
    nlohmann::ordered_json jr;
    jr["lead"] = alphabet.render(r.lead);
    auto& tail = jr["tail"] = nlohmann::ordered_json::array();
    // largest first
    for (auto it = r.rest.rbegin(); it != r.rest.rend(); ++it)
      tail.push_back({{"word", alphabet.render(it->first)}, {"coeff", coeff_string(it->second)}});
    rules.push_back(std::move(jr));
  }
  if (!dims.empty()) j["dimensions"] = dims;
  return j.dump(2);
}

struct RewriteBuilder {
  template <typename K>
  static RewriteSystem<K> run(const std::vector<FreeElt>& relations, int bound, const MonomialOrder& order,
                              const Budget& budget) {
    using Poly = typename RewriteSystem<K>::Poly;
    if (bound < 1) throw DomainError("degree bound must be positive");
    RewriteSystem<K> rs;
    rs.order_ = std::make_shared<const MonomialOrder>(order);
    rs.degree_bound_ = rs.confluent_up_to_ = bound;

    // Rules are never erased from rs.rules_ during the run; dead ones are
    // simply dropped from the lead index and compacted at the end.
    std::vector<bool> alive;
    std::deque<Poly> pending;
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> done;

    auto partial = [&] { return std::to_string(rs.by_lead_.size()) + " rules"; };
    auto rebuild_lengths = [&] {
      std::set<std::size_t> lens;
      for (const auto& [w, idx] : rs.by_lead_) lens.insert(w.size());
      rs.lead_lengths_.assign(lens.begin(), lens.end());
    };

    auto add_rule = [&](Poly p) {
      const MonomialOrder::Cmp cmp{rs.order_.get()};
      auto lead_it = p.begin();
      for (auto it = p.begin(); it != p.end(); ++it)
        if (cmp(lead_it->first, it->first)) lead_it = it;
      Word lead = lead_it->first;
      if (lead.empty()) throw DomainError("relations generate the unit ideal");
      K inv = K(1) / lead_it->second;
      RewriteRule<K> r;
      r.lead = lead;
      std::size_t size = 0;
      for (const auto& [w, c] : p) {
        if (w == lead) continue;
        K t = -(c * inv);
        size += coeff_size(t);
        r.rest.emplace(w, std::move(t));
      }
      budget.check_size(size, "completion", partial());
      // Older rules whose lead contains the new lead are retired and re-fed.
      for (auto it = rs.by_lead_.begin(); it != rs.by_lead_.end();) {
        if (it->first.find(lead) != Word::npos) {
          const auto& old = rs.rules_[it->second];
          Poly q = old.rest;
          for (auto& [w, c] : q) c = -c;
          q.emplace(old.lead, K(1));
          pending.push_back(std::move(q));
          alive[it->second] = false;
          it = rs.by_lead_.erase(it);
        } else {
          ++it;
        }
      }
      rs.by_lead_.emplace(lead, rs.rules_.size());
      rs.rules_.push_back(std::move(r));
      alive.push_back(true);
      rebuild_lengths();
    };

    auto drain = [&] {
      while (!pending.empty()) {
        budget.check("completion", partial());
        Poly p = rs.reduce(pending.front());
        pending.pop_front();
        if (!p.empty()) add_rule(std::move(p));
      }
    };

    for (const auto& rel : relations) {
      Poly p = to_poly<K>(rel);
      if (!p.empty()) pending.push_back(std::move(p));
    }
    drain();

    for (;;) {
      // Unprocessed overlaps among live rules, shortest first.
      std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> todo;  // len, a, b, k
      for (std::size_t a = 0; a < rs.rules_.size(); ++a) {
        if (!alive[a]) continue;
        for (std::size_t b = 0; b < rs.rules_.size(); ++b) {
          if (!alive[b]) continue;
          const Word& la = rs.rules_[a].lead;
          const Word& lb = rs.rules_[b].lead;
          for (std::size_t k = 1; k < std::min(la.size(), lb.size()); ++k) {
            std::size_t len = la.size() + lb.size() - k;
            if (len > static_cast<std::size_t>(bound)) continue;
            if (done.count({a, b, k})) continue;
            if (la.compare(la.size() - k, k, lb, 0, k) != 0) continue;
            todo.emplace_back(len, a, b, k);
          }
        }
      }
      if (todo.empty()) break;
      std::sort(todo.begin(), todo.end());
      std::size_t len0 = std::get<0>(todo.front());
      for (const auto& [len, a, b, k] : todo) {
        if (len != len0) break;
        done.insert({a, b, k});
        if (!alive[a] || !alive[b]) continue;
        const auto& ra = rs.rules_[a];
        const auto& rb = rs.rules_[b];
        Word u = ra.lead.substr(0, ra.lead.size() - k), v = rb.lead.substr(k);
        Poly s;
        for (const auto& [w, c] : ra.rest) add_to(s, w + v, c);
        for (const auto& [w, c] : rb.rest) add_to(s, u + w, K(-c));
        pending.push_back(std::move(s));
        drain();
      }
    }

    // Compact and inter-reduce tails.
    std::vector<RewriteRule<K>> kept;
    for (std::size_t i = 0; i < rs.rules_.size(); ++i)
      if (alive[i]) kept.push_back(std::move(rs.rules_[i]));
    std::sort(kept.begin(), kept.end(), [&](const auto& x, const auto& y) { return order.less(x.lead, y.lead); });
    rs.rules_ = std::move(kept);
    rs.by_lead_.clear();
    for (std::size_t i = 0; i < rs.rules_.size(); ++i) rs.by_lead_.emplace(rs.rules_[i].lead, i);
    rebuild_lengths();
    for (auto& r : rs.rules_) r.rest = rs.reduce(r.rest);
    return rs;
  }
};

template <typename K>
RewriteSystem<K> complete(const std::vector<FreeElt>& relations, int degree_bound, const MonomialOrder& order,
                          const Budget& budget) {
  return RewriteBuilder::run<K>(relations, degree_bound, order, budget);
}

template <typename K>
CentralityCertificate is_central(const FreeElt& x, const RewriteSystem<K>& rs) {
  if (x.degree() + 1 > rs.degree_bound())
    throw DomainError("centrality check needs degree bound ≥ " + std::to_string(x.degree() + 1));
  CentralityCertificate cert;
  cert.central = true;
  for (GenId g : rs.order().generators()) {
    FreeElt r = rs.normal_form(commutator(x, FreeElt::gen(g)));
    if (!r.is_zero()) cert.central = false;
    cert.reduced.emplace_back(g, std::move(r));
  }
  return cert;
}

template <typename K>
std::size_t graded_dimension_rewrite(const std::vector<FreeElt>& relations, int n, const MonomialOrder& order,
                                     const Budget& budget) {
  auto rs = complete<K>(relations, std::max(n, 2), order, budget);
  return rs.normal_word_counts(n).back();
}

template <typename K>
std::size_t graded_dimension_oracle(const std::vector<FreeElt>& relations, int n, const std::vector<GenId>& gens) {
  if (n < 0) throw DomainError("negative degree");
  std::array<int, 256> digit;
  digit.fill(-1);
  for (std::size_t k = 0; k < gens.size(); ++k) digit[gens[k]] = static_cast<int>(k);
  const std::size_t g = gens.size();
  std::size_t total = 1;
  for (int k = 0; k < n; ++k) total *= g;
  if (n < 2) return total;

  auto index = [&](const Word& w) {
    std::size_t idx = 0;
    for (GenId x : w) {
      if (digit[x] < 0) throw DomainError("relation uses a generator outside the alphabet");
      idx = idx * g + static_cast<std::size_t>(digit[x]);
    }
    return idx;
  };

  std::vector<std::vector<std::pair<std::size_t, K>>> rels;
  for (const auto& r : relations) {
    std::vector<std::pair<std::size_t, K>> v;
    for (const auto& [w, c] : r.terms()) {
      if (w.size() != 2) throw DomainError("oracle needs homogeneous quadratic relations");
      v.emplace_back(index(w), convert(c, static_cast<const K*>(nullptr)));
    }
    rels.push_back(std::move(v));
  }

  RowSpace<K> space(total);
  for (int left = 0; left <= n - 2; ++left) {
    std::size_t lcount = 1, rcount = 1;
    for (int k = 0; k < left; ++k) lcount *= g;
    for (int k = 0; k < n - 2 - left; ++k) rcount *= g;
    for (std::size_t u = 0; u < lcount; ++u)
      for (std::size_t v = 0; v < rcount; ++v)
        for (const auto& rel : rels) {
          std::vector<std::pair<std::size_t, K>> row;
          for (const auto& [col, c] : rel) {
            if (c.is_zero()) continue;
            row.emplace_back((u * g * g + col) * rcount + v, c);
          }
          std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
          space.insert(std::move(row));
        }
  }
  return total - space.rank();
}

template <typename K>
FreeElt filtered_normal_form(const FreeElt& x, const RewriteSystem<K>& rs, const FreeElt& c, int max_steps) {
  using Poly = typename RewriteSystem<K>::Poly;
  Poly cn = rs.reduce(to_poly<K>(c));
  if (cn.empty()) throw DomainError("central element reduces to zero");
  const MonomialOrder::Cmp cmp{&rs.order()};
  auto lead_it = cn.begin();
  for (auto it = cn.begin(); it != cn.end(); ++it)
    if (cmp(lead_it->first, it->first)) lead_it = it;
  const Word lead = lead_it->first;
  const K inv = K(1) / lead_it->second;
  // lead → (1 − rest)/lc
  Poly image;
  add_to(image, Word(), inv);
  for (const auto& [w, k] : cn)
    if (w != lead) add_to(image, w, K(-(k * inv)));

  Poly cur = rs.reduce(to_poly<K>(x));
  for (int step = 0; step < max_steps; ++step) {
    Poly next;
    bool changed = false;
    for (const auto& [w, k] : cur) {
      std::size_t at = w.find(lead);
      if (at == Word::npos) {
        add_to(next, w, k);
        continue;
      }
      changed = true;
      Word u = w.substr(0, at), v = w.substr(at + lead.size());
      for (const auto& [iw, ik] : image) add_to(next, u + iw + v, K(k * ik));
    }
    if (!changed) return from_poly(cur);
    cur = rs.reduce(next);
  }
  throw ResourceError("filtered reduction did not settle", std::to_string(max_steps) + " rounds");
}

#define NCS_INSTANTIATE(K)                                                                                       \
  template std::map<Word, K, WordLess> to_poly<K>(const FreeElt&);                                              \
  template FreeElt from_poly<K>(const std::map<Word, K, WordLess>&);                                            \
  template class RewriteSystem<K>;                                                                              \
  template RewriteSystem<K> complete<K>(const std::vector<FreeElt>&, int, const MonomialOrder&, const Budget&); \
  template CentralityCertificate is_central<K>(const FreeElt&, const RewriteSystem<K>&);                        \
  template std::size_t graded_dimension_rewrite<K>(const std::vector<FreeElt>&, int, const MonomialOrder&,      \
                                                   const Budget&);                                              \
  template std::size_t graded_dimension_oracle<K>(const std::vector<FreeElt>&, int, const std::vector<GenId>&); \
  template FreeElt filtered_normal_form<K>(const FreeElt&, const RewriteSystem<K>&, const FreeElt&, int);

NCS_INSTANTIATE(GaussRat)
NCS_INSTANTIATE(ParamScalar)

#undef NCS_INSTANTIATE

}  // namespace ncs
