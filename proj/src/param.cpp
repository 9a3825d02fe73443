#include "ncsphere/param.hpp"

#include <algorithm>
#include <sstream>

namespace ncs {

namespace {

constexpr LambdaExps kZeroExps{0, 0, 0, 0};

LambdaExps add_exps(const LambdaExps& a, const LambdaExps& b) {
  return {static_cast<std::int16_t>(a[0] + b[0]), static_cast<std::int16_t>(a[1] + b[1]),
          static_cast<std::int16_t>(a[2] + b[2]), static_cast<std::int16_t>(a[3] + b[3])};
}

LambdaExps sub_exps(const LambdaExps& a, const LambdaExps& b) {
  return {static_cast<std::int16_t>(a[0] - b[0]), static_cast<std::int16_t>(a[1] - b[1]),
          static_cast<std::int16_t>(a[2] - b[2]), static_cast<std::int16_t>(a[3] - b[3])};
}

bool nonnegative(const LambdaExps& e) {
  return e[0] >= 0 && e[1] >= 0 && e[2] >= 0 && e[3] >= 0;
}

// Merges two sorted term lists, with `sign` applied to the second.
template <typename Term>
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exps < b[j].exps)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exps < a[i].exps) {
      out.push_back(b[j]);
      if (negate_b) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      GaussRat c = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(GaussRat c) {
  if (!c.is_zero()) terms_.push_back({kZeroExps, std::move(c)});
}

LaurentPoly LaurentPoly::monomial(const LambdaExps& e, GaussRat c) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.push_back({e, std::move(c)});
  return p;
}

LaurentPoly LaurentPoly::lambda(int mu, int power) {
  LambdaExps e = kZeroExps;
  e.at(static_cast<std::size_t>(mu)) = static_cast<std::int16_t>(power);
  return monomial(e);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exps == kZeroExps);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exps == kZeroExps && terms_[0].coeff.is_one();
}

GaussRat LaurentPoly::constant_value() const {
  if (terms_.empty()) return GaussRat(0);
  if (!is_constant()) throw DomainError("Laurent polynomial is not constant: " + to_string());
  return terms_[0].coeff;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

LaurentPoly LaurentPoly::scaled(const GaussRat& c) const {
  if (c.is_zero()) return {};
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(const LambdaExps& e) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exps = add_exps(t.exps, e);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1) return b.shifted(a.terms_[0].exps).scaled(a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.shifted(b.terms_[0].exps).scaled(b.terms_[0].coeff);
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back({add_exps(x.exps, y.exps), x.coeff * y.coeff});
  std::sort(prod.begin(), prod.end(),
            [](const auto& l, const auto& r) { return l.exps < r.exps; });
  std::vector<LaurentPoly::Term> out;
  out.reserve(prod.size());
  for (auto& t : prod) {
    if (!out.empty() && out.back().exps == t.exps) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::star() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_)
    out.push_back({sub_exps(kZeroExps, t.exps), t.coeff.conj()});
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.exps < r.exps; });
  return LaurentPoly(std::move(out));
}

GaussRat LaurentPoly::evaluate(const std::array<GaussRat, 4>& values) const {
  GaussRat sum(0);
  for (const auto& t : terms_) {
    GaussRat v = t.coeff;
    for (std::size_t mu = 0; mu < 4; ++mu) {
      int e = t.exps[mu];
      if (e == 0) continue;
      GaussRat base = e > 0 ? values[mu] : values[mu].inverse();
      for (int k = 0; k < (e > 0 ? e : -e); ++k) v *= base;
    }
    sum += v;
  }
  return sum;
}

LambdaExps LaurentPoly::min_exps() const {
  if (terms_.empty()) return kZeroExps;
  LambdaExps m = terms_[0].exps;
  for (const auto& t : terms_)
    for (std::size_t k = 0; k < 4; ++k) m[k] = std::min(m[k], t.exps[k]);
  return m;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw DomainError("Laurent division by zero");
  if (terms_.empty()) return LaurentPoly();
  if (d.terms_.size() == 1) {
    const auto& t = d.terms_[0];
    return shifted(sub_exps(kZeroExps, t.exps)).scaled(t.coeff.inverse());
  }
  LambdaExps sn = min_exps(), sd = d.min_exps();
  LaurentPoly rem = shifted(sub_exps(kZeroExps, sn));
  LaurentPoly div = d.shifted(sub_exps(kZeroExps, sd));
  const Term& lead = div.terms_.back();
  GaussRat lead_inv = lead.coeff.inverse();
  std::vector<Term> quot;
  // Each step removes the lex-leading term; the bound guards against misuse.
  std::size_t guard = 0;
  while (!rem.is_zero()) {
    const Term& lt = rem.terms_.back();
    LambdaExps diff = sub_exps(lt.exps, lead.exps);
    if (!nonnegative(diff)) return std::nullopt;
    if (++guard > 100000) return std::nullopt;
    Term q{diff, lt.coeff * lead_inv};
    rem -= div.shifted(q.exps).scaled(q.coeff);
    quot.push_back(std::move(q));
  }
  std::sort(quot.begin(), quot.end(), [](const auto& l, const auto& r) { return l.exps < r.exps; });
  return LaurentPoly(std::move(quot)).shifted(sub_exps(sn, sd));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].exps != b.terms_[k].exps || !(a.terms_[k].coeff == b.terms_[k].coeff))
      return false;
  return true;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest terms first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    for (std::size_t mu = 0; mu < 4; ++mu) {
      int e = it->exps[mu];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "λ" + std::to_string(mu);
      if (e != 1) mono += "^" + std::to_string(e);
    }
    std::string c = it->coeff.to_string();
    std::string term;
    if (mono.empty()) {
      term = c;
    } else if (it->coeff.is_one()) {
      term = mono;
    } else if (it->coeff == GaussRat(-1)) {
      term = "-" + mono;
    } else if (it->coeff.is_real() || sgn(it->coeff.re()) == 0) {
      term = c + "*" + mono;
    } else {
      term = "(" + c + ")*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

ParamScalar::ParamScalar(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw DomainError("parameter scalar with zero denominator");
  normalize();
}

void ParamScalar::normalize() {
  if (den_.is_one()) return;
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.is_monomial()) {
    num_ = *num_.divide_exact(den_);
    den_ = LaurentPoly(1);
    return;
  }
  if (num_.size() <= 4096) {
    if (auto q = num_.divide_exact(den_)) {
      num_ = std::move(*q);
      den_ = LaurentPoly(1);
      return;
    }
  }
  // Move the monomial content of the denominator into the numerator and make
  // its leading coefficient one.
  LambdaExps m = den_.min_exps();
  LambdaExps neg{static_cast<std::int16_t>(-m[0]), static_cast<std::int16_t>(-m[1]),
                 static_cast<std::int16_t>(-m[2]), static_cast<std::int16_t>(-m[3])};
  GaussRat lc_inv = den_.terms().back().coeff.inverse();
  den_ = den_.shifted(neg).scaled(lc_inv);
  num_ = num_.shifted(neg).scaled(lc_inv);
}

GaussRat ParamScalar::constant_value() const {
  if (!is_constant()) throw DomainError("parameter scalar is not constant: " + to_string());
  return num_.constant_value();
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) { return *this += -o; }

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

ParamScalar ParamScalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero parameter scalar");
  return ParamScalar(den_, num_);
}

ParamScalar& ParamScalar::operator/=(const ParamScalar& o) { return *this *= o.inverse(); }

ParamScalar ParamScalar::pow(unsigned e) const {
  ParamScalar r(1);
  for (unsigned k = 0; k < e; ++k) r *= *this;
  return r;
}

ParamScalar ParamScalar::star() const { return ParamScalar(num_.star(), den_.star()); }

ParamScalar ParamScalar::evaluate(const std::array<GaussRat, 4>& values) const {
  GaussRat d = den_.evaluate(values);
  if (d.is_zero()) throw DomainError("denominator vanishes at the given parameters: " + to_string());
  return ParamScalar(num_.evaluate(values) / d);
}

bool operator==(const ParamScalar& a, const ParamScalar& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string ParamScalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const ParamScalar& s) { return os << s.to_string(); }

}  // namespace ncs
