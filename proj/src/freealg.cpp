#include "ncsphere/freealg.hpp"

#include <algorithm>

namespace ncs {

Word word(std::initializer_list<int> ids) {
  Word w;
  for (int g : ids) w.push_back(static_cast<GenId>(g));
  return w;
}

Word normalize_word(Word w) {
  auto mid = std::stable_partition(w.begin(), w.end(), [](GenId g) { return is_central_id(g); });
  std::sort(w.begin(), mid);
  return w;
}

Alphabet::Alphabet(const std::string& prefix) {
  for (std::size_t k = 0; k < names_.size(); ++k) names_[k] = "g" + std::to_string(k);
  for (int k = 0; k < 4; ++k) names_[static_cast<std::size_t>(k)] = prefix + std::to_string(k);
}

std::string Alphabet::render(const Word& w) const {
  std::string out;
  for (GenId g : w) {
    if (!out.empty()) out += ".";
    out += names_[g];
  }
  return out;
}

// ---------------------------------------------------------------------------

FreeElt::FreeElt(ParamScalar c) {
  if (!c.is_zero()) terms_.emplace(Word(), std::move(c));
}

FreeElt FreeElt::monomial(Word w, ParamScalar c) {
  FreeElt e;
  if (!c.is_zero()) e.terms_.emplace(normalize_word(std::move(w)), std::move(c));
  return e;
}

int FreeElt::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.size());
}

bool FreeElt::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

ParamScalar FreeElt::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? ParamScalar(0) : it->second;
}

void FreeElt::add_term(const Word& w, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreeElt FreeElt::operator-() const {
  FreeElt r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

FreeElt& FreeElt::operator+=(const FreeElt& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreeElt& FreeElt::operator-=(const FreeElt& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FreeElt& FreeElt::operator*=(const ParamScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

FreeElt operator*(const FreeElt& a, const FreeElt& b) {
  FreeElt r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa + wb;
      bool central = std::any_of(w.begin(), w.end(), is_central_id);
      r.add_term(central ? normalize_word(std::move(w)) : w, ca * cb);
    }
  return r;
}

bool operator==(const FreeElt& a, const FreeElt& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [w, c] : a.terms_) {
    if (it->first != w || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

FreeElt FreeElt::reversed() const {
  FreeElt r;
  for (const auto& [w, c] : terms_) r.add_term(normalize_word(Word(w.rbegin(), w.rend())), c);
  return r;
}

FreeElt FreeElt::substitute(const std::map<GenId, FreeElt>& images) const {
  FreeElt r;
  for (const auto& [w, c] : terms_) {
    FreeElt t(c);
    for (GenId g : w) {
      auto it = images.find(g);
      t = t * (it == images.end() ? FreeElt::gen(g) : it->second);
    }
    r += t;
  }
  return r;
}

FreeElt FreeElt::map_coeffs(const std::function<ParamScalar(const ParamScalar&)>& f) const {
  FreeElt r;
  for (const auto& [w, c] : terms_) r.add_term(w, f(c));
  return r;
}

FreeElt FreeElt::component(std::size_t degree) const {
  FreeElt r;
  for (const auto& [w, c] : terms_)
    if (w.size() == degree) r.terms_.emplace_hint(r.terms_.end(), w, c);
  return r;
}

std::string FreeElt::to_string(const Alphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (w.empty()) {
      out += "(" + c.to_string() + ")";
    } else if (c.is_one()) {
      out += alphabet.render(w);
    } else {
      out += "(" + c.to_string() + ")·" + alphabet.render(w);
    }
  }
  return out;
}

FreeElt free_mul(const FreeElt& a, const FreeElt& b) { return a * b; }
FreeElt commutator(const FreeElt& a, const FreeElt& b) { return a * b - b * a; }
FreeElt anticommutator(const FreeElt& a, const FreeElt& b) { return a * b + b * a; }

// ---------------------------------------------------------------------------

Involution& Involution::set(GenId g, ParamScalar coeff, GenId image) {
  table_[g] = {std::move(coeff), image};
  return *this;
}

Involution Involution::from_lambda(const std::array<ParamScalar, 4>& lambda) {
  Involution inv;
  for (GenId g = 0; g < 4; ++g) inv.set(g, lambda[g], g);
  return inv;
}

FreeElt Involution::apply_gen(GenId g) const {
  auto it = table_.find(g);
  if (it == table_.end()) {
    // Central symbols are self-adjoint unless stated otherwise.
    if (is_central_id(g)) return FreeElt::gen(g);
    throw DomainError("involution undefined on generator " + std::to_string(g));
  }
  return FreeElt::monomial(Word(1, it->second.second), it->second.first);
}

FreeElt Involution::apply(const FreeElt& a) const {
  FreeElt r;
  for (const auto& [w, c] : a.terms()) {
    FreeElt t(c.star());
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = t * apply_gen(*it);
    r += t;
  }
  return r;
}

FreeElt adjoint(const FreeElt& a, const std::array<ParamScalar, 4>& lambda) {
  return Involution::from_lambda(lambda).apply(a);
}

// ---------------------------------------------------------------------------

bool TensorElt::KeyLess::operator()(const Key& a, const Key& b) const {
  WordLess wl;
  std::size_t da = 0, db = 0;
  for (const auto& w : a) da += w.size();
  for (const auto& w : b) db += w.size();
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), wl);
}

TensorElt::TensorElt(std::size_t factors) : k_(factors) {
  if (factors == 0 || factors > 4) throw DomainError("tensor elements support 1 to 4 factors");
}

TensorElt TensorElt::pure(const std::vector<FreeElt>& factors) {
  TensorElt r(factors.size());
  std::vector<std::pair<Key, ParamScalar>> acc{{Key{}, ParamScalar(1)}};
  for (const auto& f : factors) {
    std::vector<std::pair<Key, ParamScalar>> next;
    for (const auto& [key, c] : acc)
      for (const auto& [w, cw] : f.terms()) {
        Key k = key;
        k.push_back(w);
        next.emplace_back(std::move(k), c * cw);
      }
    acc = std::move(next);
  }
  for (const auto& [key, c] : acc) r.add_term(key, c);
  return r;
}

void TensorElt::add_term(const Key& key, const ParamScalar& c) {
  if (key.size() != k_) throw DomainError("tensor key has the wrong number of factors");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElt TensorElt::operator-() const {
  TensorElt r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

TensorElt& TensorElt::operator+=(const TensorElt& o) {
  if (o.k_ != k_) throw DomainError("adding tensors with different numbers of factors");
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

TensorElt& TensorElt::operator-=(const TensorElt& o) {
  if (o.k_ != k_) throw DomainError("subtracting tensors with different numbers of factors");
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

TensorElt& TensorElt::operator*=(const ParamScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

TensorElt operator*(const TensorElt& a, const TensorElt& b) {
  if (a.k_ != b.k_) throw DomainError("multiplying tensors with different numbers of factors");
  TensorElt r(a.k_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      TensorElt::Key k(a.k_);
      for (std::size_t i = 0; i < a.k_; ++i) k[i] = normalize_word(ka[i] + kb[i]);
      r.add_term(k, ca * cb);
    }
  return r;
}

TensorElt tensor(const TensorElt& a, const TensorElt& b) {
  TensorElt r(a.k_ + b.k_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      TensorElt::Key k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      r.add_term(k, ca * cb);
    }
  return r;
}

bool operator==(const TensorElt& a, const TensorElt& b) {
  if (a.k_ != b.k_ || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [k, c] : a.terms_) {
    if (it->first != k || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

TensorElt TensorElt::flip() const {
  TensorElt r(k_);
  for (const auto& [key, c] : terms_) r.add_term(Key(key.rbegin(), key.rend()), c);
  return r;
}

TensorElt TensorElt::substitute(const std::map<GenId, FreeElt>& images) const {
  TensorElt r(k_);
  for (const auto& [key, c] : terms_) {
    std::vector<FreeElt> parts;
    for (const auto& w : key) parts.push_back(FreeElt::monomial(w).substitute(images));
    r += pure(parts) * c;
  }
  return r;
}

std::string TensorElt::to_string(const Alphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    std::string body;
    for (const auto& w : key) {
      if (!body.empty()) body += "⊗";
      body += w.empty() ? "1" : alphabet.render(w);
    }
    if (!out.empty()) out += " + ";
    out += c.is_one() ? body : "(" + c.to_string() + ")·" + body;
  }
  return out;
}

// ---------------------------------------------------------------------------

MatFree::MatFree(std::size_t n) : n_(n), entries_(n * n) {
  if (n == 0 || n > 4) throw DomainError("matrix dimension must be between 1 and 4");
}

MatFree MatFree::identity(std::size_t n) {
  MatFree m(n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = FreeElt(1);
  return m;
}

MatFree MatFree::constant(const std::vector<std::vector<GaussRat>>& rows) {
  MatFree m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw DomainError("constant matrix must be square");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = FreeElt(ParamScalar(rows[r][c]));
  }
  return m;
}

MatFree& MatFree::operator+=(const MatFree& o) {
  if (o.n_ != n_) throw DomainError("matrix dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

MatFree& MatFree::operator-=(const MatFree& o) {
  if (o.n_ != n_) throw DomainError("matrix dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

MatFree operator*(const FreeElt& s, const MatFree& m) {
  MatFree r(m.n_);
  for (std::size_t k = 0; k < m.entries_.size(); ++k) r.entries_[k] = s * m.entries_[k];
  return r;
}

bool operator==(const MatFree& a, const MatFree& b) {
  return a.n_ == b.n_ && a.entries_ == b.entries_;
}

MatFree MatFree::adjoint(const Involution& inv) const {
  MatFree r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(i, j) = inv.apply((*this)(j, i));
  return r;
}

FreeElt MatFree::trace() const {
  FreeElt t;
  for (std::size_t k = 0; k < n_; ++k) t += (*this)(k, k);
  return t;
}

MatFree direct_sum(const MatFree& a, const MatFree& b) {
  MatFree r(a.n_ + b.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.n_; ++i)
    for (std::size_t j = 0; j < b.n_; ++j) r(a.n_ + i, a.n_ + j) = b(i, j);
  return r;
}

MatFree mat_mul(const MatFree& a, const MatFree& b) {
  if (a.dim() != b.dim()) throw DomainError("matrix dimension mismatch in product");
  std::size_t n = a.dim();
  MatFree r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) r(i, j) += a(i, k) * b(k, j);
  return r;
}

const std::array<MatFree, 4>& pauli_basis() {
  static const std::array<MatFree, 4> basis = [] {
    GaussRat i = GaussRat::i();
    return std::array<MatFree, 4>{
        MatFree::identity(2),
        MatFree::constant({{0, 1}, {1, 0}}),
        MatFree::constant({{0, -i}, {i, 0}}),
        MatFree::constant({{1, 0}, {0, -1}}),
    };
  }();
  return basis;
}

std::array<FreeElt, 4> pauli_expand(const MatFree& m) {
  if (m.dim() != 2) throw DomainError("Pauli expansion needs a 2x2 matrix");
  ParamScalar half(GaussRat(Rat(1, 2)));
  ParamScalar half_i(GaussRat(Rat(0), Rat(1, 2)));
  return {(m(0, 0) + m(1, 1)) * half, (m(0, 1) + m(1, 0)) * half, (m(0, 1) - m(1, 0)) * half_i,
          (m(0, 0) - m(1, 1)) * half};
}

MatFree pauli_reconstruct(const std::array<FreeElt, 4>& c) {
  MatFree r(2);
  const auto& basis = pauli_basis();
  for (std::size_t k = 0; k < 4; ++k) r += c[k] * basis[k];
  return r;
}

std::vector<MatFree> clifford_generators(int dim) {
  const auto& p = pauli_basis();
  switch (dim) {
    case 1:
      return {MatFree::identity(1)};
    case 2:
      return {p[1], p[2]};
    case 3:
      return {p[1], p[2], p[3]};
    default:
      throw DomainError("Clifford generators are only provided for dimensions 1 to 3");
  }
}

}  // namespace ncs
