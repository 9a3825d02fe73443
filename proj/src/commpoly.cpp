#include "ncsphere/commpoly.hpp"

#include <algorithm>
#include <utility>

namespace ncs {

int monomial_degree(const Monomial& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < kMaxCommVars; ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial r{};
  for (std::size_t k = 0; k < kMaxCommVars; ++k) r[k] = std::max(a[k], b[k]);
  return r;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r{};
  for (std::size_t k = 0; k < kMaxCommVars; ++k) r[k] = static_cast<std::uint8_t>(a[k] + b[k]);
  return r;
}

Monomial monomial_div(const Monomial& b, const Monomial& a) {
  Monomial r{};
  for (std::size_t k = 0; k < kMaxCommVars; ++k) r[k] = static_cast<std::uint8_t>(b[k] - a[k]);
  return r;
}

bool MonoLess::operator()(const Monomial& a, const Monomial& b) const {
  if (order == MonoOrder::Lex) return a > b;  // variable 0 is the largest
  int da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da < db;
  for (std::size_t k = kMaxCommVars; k-- > 0;) {
    if (a[k] != b[k]) return a[k] > b[k];
  }
  return false;
}

// ---------------------------------------------------------------------------

CommPoly::CommPoly(ParamScalar c, MonoOrder order) : terms_(MonoLess{order}) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

CommPoly CommPoly::var(std::size_t index, MonoOrder order) {
  Monomial m{};
  m.at(index) = 1;
  return term(m, ParamScalar(1), order);
}

CommPoly CommPoly::term(const Monomial& m, ParamScalar c, MonoOrder order) {
  CommPoly p(order);
  if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
  return p;
}

CommPoly CommPoly::with_order(MonoOrder o) const {
  if (o == order()) return *this;
  CommPoly r(o);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c);
  return r;
}

int CommPoly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, monomial_degree(t.first));
  return d;
}

bool CommPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& t : terms_) {
    int e = monomial_degree(t.first);
    if (d >= 0 && e != d) return false;
    d = e;
  }
  return true;
}

const Monomial& CommPoly::leading_monomial() const {
  if (terms_.empty()) throw DomainError("leading monomial of the zero polynomial");
  return terms_.rbegin()->first;
}

const ParamScalar& CommPoly::leading_coeff() const {
  if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

ParamScalar CommPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ParamScalar(0) : it->second;
}

void CommPoly::add_term(const Monomial& m, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CommPoly CommPoly::operator-() const {
  CommPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  if (o.order() != order()) return *this += o.with_order(order());
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  if (o.order() != order()) return *this -= o.with_order(order());
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CommPoly& CommPoly::operator*=(const ParamScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  CommPoly r(a.order());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
  return r;
}

CommPoly CommPoly::pow(unsigned e) const {
  CommPoly r(ParamScalar(1), order());
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

CommPoly CommPoly::times_monomial(const Monomial& m, const ParamScalar& c) const {
  CommPoly r(order());
  if (c.is_zero()) return r;
  // Multiplying by a monomial preserves any monomial order, so the hint keeps
  // insertion linear.
  for (const auto& [mt, ct] : terms_)
    r.terms_.emplace_hint(r.terms_.end(), monomial_mul(mt, m), ct * c);
  return r;
}

CommPoly CommPoly::compose(const std::vector<CommPoly>& images) const {
  CommPoly r(order());
  // Cache powers of each image.
  std::vector<std::vector<CommPoly>> powers(images.size());
  auto power_of = [&](std::size_t k, unsigned e) -> const CommPoly& {
    auto& cache = powers[k];
    if (cache.empty()) cache.emplace_back(ParamScalar(1), order());
    while (cache.size() <= e) cache.push_back(cache.back() * images[k]);
    return cache[e];
  };
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    CommPoly t(c, order());
    for (std::size_t k = 0; k < images.size() && k < kMaxCommVars; ++k) {
      if (m[k] == 0) continue;
      rest[k] = 0;
      t = t * power_of(k, m[k]);
    }
    r += t.times_monomial(rest, ParamScalar(1));
  }
  return r;
}

CommPoly CommPoly::map_coeffs(const std::function<ParamScalar(const ParamScalar&)>& f) const {
  CommPoly r(order());
  for (const auto& [m, c] : terms_) r.add_term(m, f(c));
  return r;
}

ParamScalar CommPoly::evaluate(const std::vector<ParamScalar>& values) const {
  ParamScalar sum(0);
  for (const auto& [m, c] : terms_) {
    ParamScalar v = c;
    for (std::size_t k = 0; k < values.size() && k < kMaxCommVars; ++k)
      if (m[k]) v *= values[k].pow(m[k]);
    sum += v;
  }
  return sum;
}

std::optional<CommPoly> CommPoly::divide_exact(const CommPoly& f) const {
  if (f.is_zero()) throw DomainError("polynomial division by zero");
  CommPoly rem = with_order(f.order());
  CommPoly quot(f.order());
  const Monomial& lf = f.leading_monomial();
  ParamScalar inv = f.leading_coeff().inverse();
  while (!rem.is_zero()) {
    const Monomial lr = rem.leading_monomial();
    if (!divides(lf, lr)) return std::nullopt;
    Monomial q = monomial_div(lr, lf);
    ParamScalar c = rem.leading_coeff() * inv;
    rem -= f.times_monomial(q, c);
    quot.add_term(q, c);
  }
  return quot.with_order(order());
}

CommPoly CommPoly::monic() const {
  if (is_zero()) return *this;
  CommPoly r = *this;
  r *= leading_coeff().inverse();
  return r;
}

bool operator==(const CommPoly& a, const CommPoly& b) {
  CommPoly d = a - b;
  return d.is_zero();
}

std::string CommPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    for (std::size_t k = 0; k < kMaxCommVars; ++k) {
      if (!it->first[k]) continue;
      if (!mono.empty()) mono += "*";
      mono += k < names.size() ? names[k] : "v" + std::to_string(k);
      if (it->first[k] > 1) mono += "^" + std::to_string(it->first[k]);
    }
    std::string c = it->second.to_string();
    if (!out.empty()) out += " + ";
    if (mono.empty())
      out += "(" + c + ")";
    else if (it->second.is_one())
      out += mono;
    else
      out += "(" + c + ")*" + mono;
  }
  return out;
}

const std::vector<std::string>& default_var_names() {
  static const std::vector<std::string> names{"y0", "y1", "y2", "y3", "v4", "v5",
                                              "v6", "v7", "v8", "v9", "v10", "v11"};
  return names;
}

// ---------------------------------------------------------------------------

namespace {

// Full reduction of p by the list `gens` (not necessarily a basis).
CommPoly reduce_by(const CommPoly& p, const std::vector<CommPoly>& gens) {
  CommPoly rem = p;
  CommPoly out(p.order());
  while (!rem.is_zero()) {
    auto lead = *rem.terms().rbegin();
    bool reduced = false;
    for (const auto& g : gens) {
      const Monomial& lg = g.leading_monomial();
      if (divides(lg, lead.first)) {
        ParamScalar c = lead.second / g.leading_coeff();
        rem -= g.times_monomial(monomial_div(lead.first, lg), c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out.add_term(lead.first, lead.second);
      rem.add_term(lead.first, -lead.second);
    }
  }
  return out;
}

}  // namespace

CommPoly s_polynomial(const CommPoly& f, const CommPoly& g) {
  const Monomial& lf = f.leading_monomial();
  const Monomial& lg = g.leading_monomial();
  Monomial l = monomial_lcm(lf, lg);
  return f.times_monomial(monomial_div(l, lf), g.leading_coeff()) -
         g.times_monomial(monomial_div(l, lg), f.leading_coeff());
}

CommPoly GroebnerBasis::reduce(const CommPoly& p) const {
  return reduce_by(p.with_order(order_), gens_).with_order(p.order());
}

bool GroebnerBasis::satisfies_s_criterion() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (!reduce_by(s_polynomial(gens_[i], gens_[j]), gens_).is_zero()) return false;
  return true;
}

GroebnerBasis groebner_basis(const std::vector<CommPoly>& input, MonoOrder order,
                             const Budget& budget) {
  if (input.empty()) throw DomainError("Gröbner basis of an empty generator list");
  std::vector<CommPoly> basis;
  for (const auto& g : input) {
    CommPoly r = reduce_by(g.with_order(order), basis);
    if (!r.is_zero()) basis.push_back(r.monic());
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    budget.check_size(basis.size(), "groebner_basis",
                      std::to_string(basis.size()) + " generators so far");
    // Normal selection: smallest lcm first.
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      MonoLess less{order};
      return less(monomial_lcm(basis[a.first].leading_monomial(), basis[a.second].leading_monomial()),
                  monomial_lcm(basis[b.first].leading_monomial(), basis[b.second].leading_monomial()));
    });
    auto [i, j] = *best;
    pairs.erase(best);
    const Monomial& li = basis[i].leading_monomial();
    const Monomial& lj = basis[j].leading_monomial();
    Monomial l = monomial_lcm(li, lj);
    // Product criterion.
    if (monomial_mul(li, lj) == l) continue;
    // Chain criterion: some k with LM(k) | lcm whose pairs with i and j are gone.
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j || !divides(basis[k].leading_monomial(), l)) continue;
      auto pending = [&](std::size_t a, std::size_t b) {
        auto key = std::minmax(a, b);
        return std::find(pairs.begin(), pairs.end(), std::pair(key.first, key.second)) != pairs.end();
      };
      if (!pending(i, k) && !pending(j, k)) chain = true;
    }
    if (chain) continue;
    CommPoly s = reduce_by(s_polynomial(basis[i], basis[j]), basis);
    if (s.is_zero()) continue;
    basis.push_back(s.monic());
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }

  // Interreduce: drop generators whose leading monomial is divisible by
  // another, then fully reduce each against the rest.
  std::vector<CommPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& li = basis[i].leading_monomial();
      const Monomial& lj = basis[j].leading_monomial();
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<CommPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = reduce_by(minimal[i], others).monic();
  }
  MonoLess less{order};
  std::sort(minimal.begin(), minimal.end(), [&](const CommPoly& a, const CommPoly& b) {
    return less(a.leading_monomial(), b.leading_monomial());
  });

  GroebnerBasis gb;
  gb.gens_ = std::move(minimal);
  gb.order_ = order;
  gb.reduced_ = true;
  return gb;
}

CommPoly reduce_mod(const CommPoly& p, const GroebnerBasis& gb) { return gb.reduce(p); }

}  // namespace ncs
