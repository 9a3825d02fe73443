#include "ncsphere/sphere.hpp"

#include <algorithm>
#include <bitset>
#include <nlohmann/json.hpp>

#include "ncsphere/linalg.hpp"

namespace ncs {

namespace {

using json = nlohmann::json;

std::array<int, 3> triple(int k) { return kCyclic.at(static_cast<std::size_t>(k - 1)); }

FreeElt z(int mu) { return FreeElt::gen(static_cast<GenId>(mu)); }

std::string lam_name(int mu) { return "λ" + std::to_string(mu); }

Integer json_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) {
    Integer r;
    if (r.set_str(v.get<std::string>(), 10) != 0)
      throw DomainError(where + ": malformed integer '" + v.get<std::string>() + "'");
    return r;
  }
  throw DomainError(where + ": expected an integer");
}

Rat json_rat(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rat(v.get<std::string>());
    } catch (const DomainError& e) {
      throw DomainError(where + ": " + e.what());
    }
  }
  throw DomainError(where + ": expected a rational (integer or \"a/b\" string)");
}

UnitCirclePoint json_point(const json& v, const std::string& where) {
  try {
    if (v.is_array()) {
      if (v.size() != 2) throw DomainError(where + ": a Pythagorean pair has two entries");
      return UnitCirclePoint::from_pythagorean(json_integer(v[0], where + "[0]"),
                                               json_integer(v[1], where + "[1]"));
    }
    if (v.is_object()) {
      Rat re = v.contains("re") ? json_rat(v.at("re"), where + ".re") : Rat(0);
      Rat im = v.contains("im") ? json_rat(v.at("im"), where + ".im") : Rat(0);
      return UnitCirclePoint(GaussRat(re, im));
    }
    return UnitCirclePoint(GaussRat(json_rat(v, where)));
  } catch (const DomainError& e) {
    std::string msg = e.what();
    if (msg.rfind(where, 0) == 0) throw;
    throw DomainError(where + ": " + msg);
  }
}

}  // namespace

// ---------------------------------------------------------------------------

ModuliParams ModuliParams::symbolic() {
  ModuliParams p;
  for (int mu = 0; mu < 4; ++mu) p.lambda_[static_cast<std::size_t>(mu)] = ParamScalar::lambda(mu);
  return p;
}

ModuliParams ModuliParams::numeric(const std::array<UnitCirclePoint, 4>& values) {
  ModuliParams p;
  for (std::size_t mu = 0; mu < 4; ++mu) p.lambda_[mu] = ParamScalar(values[mu]);
  p.values_ = values;
  return p;
}

const std::vector<std::string>& ModuliParams::preset_names() {
  static const std::vector<std::string> names{"commutative", "three-relations", "coarse",
                                              "generic-sample", "plane", "two-conics", "paired"};
  return names;
}

ModuliParams ModuliParams::preset(const std::string& name) {
  UnitCirclePoint one, u = UnitCirclePoint::from_pythagorean(2, 1),
                       v = UnitCirclePoint::from_pythagorean(3, 2),
                       w = UnitCirclePoint::from_pythagorean(4, 1);
  if (name == "commutative") return numeric({one, one, one, one});
  if (name == "three-relations") return numeric({one, one, one, -one});
  if (name == "coarse") return numeric({one, u, u, -one});
  if (name == "generic-sample") return numeric({one, u, v, w});
  if (name == "plane") return numeric({one, u, u, u});
  if (name == "two-conics") return numeric({one, u, u, v});
  if (name == "paired") return numeric({one, u, u, one});
  throw DomainError("unknown preset '" + name + "'");
}

ModuliParams ModuliParams::from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError("lambda JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_array() || doc.size() != 4)
    throw DomainError("lambda must be a JSON array of four entries");
  std::array<UnitCirclePoint, 4> vals;
  for (std::size_t mu = 0; mu < 4; ++mu) vals[mu] = json_point(doc[mu], "lambda[" + std::to_string(mu) + "]");
  return numeric(vals);
}

const std::array<UnitCirclePoint, 4>& ModuliParams::values() const {
  if (!values_) throw DomainError("parameters are symbolic");
  return *values_;
}

std::array<GaussRat, 4> ModuliParams::gauss_values() const {
  const auto& v = values();
  return {v[0].value(), v[1].value(), v[2].value(), v[3].value()};
}

std::string ModuliParams::to_json() const {
  if (is_symbolic()) return "\"symbolic\"";
  json arr = json::array();
  for (const auto& u : *values_)
    arr.push_back({{"re", rat_to_string(u.value().re())}, {"im", rat_to_string(u.value().im())}});
  return arr.dump();
}

std::string ModuliParams::to_string() const {
  std::string out = "(";
  for (std::size_t mu = 0; mu < 4; ++mu) {
    if (mu) out += ", ";
    out += lambda_[mu].to_string();
  }
  return out + ")";
}

bool operator==(const ModuliParams& a, const ModuliParams& b) {
  if (a.is_symbolic() != b.is_symbolic()) return false;
  for (std::size_t mu = 0; mu < 4; ++mu)
    if (!(a.lambda_[mu] == b.lambda_[mu])) return false;
  return true;
}

// ---------------------------------------------------------------------------

std::vector<FreeElt> SpherePresentation::nonzero_relations() const {
  std::vector<FreeElt> out;
  for (const auto& r : homogeneous)
    if (!r.is_zero()) out.push_back(r);
  return out;
}

SpherePresentation unitarity_relations(const ModuliParams& params) {
  const auto& p = pauli_basis();
  FreeElt i(ParamScalar::i());
  MatFree u = z(0) * p[0];
  for (int j = 1; j <= 3; ++j) u += (i * z(j)) * p[static_cast<std::size_t>(j)];
  MatFree us = u.adjoint(Involution::from_lambda(params.lambda()));
  auto c1 = pauli_expand(u * us);
  auto c2 = pauli_expand(us * u);

  SpherePresentation out{params, {}, {}, c1[0], c2[0]};
  ParamScalar minus_i = -ParamScalar::i();
  for (std::size_t k = 0; k < 3; ++k) {
    out.homogeneous[k] = c1[k + 1] * minus_i;
    out.homogeneous[3 + k] = c2[k + 1] * minus_i;
  }
  for (int mu = 0; mu < 4; ++mu) out.central_C += params[static_cast<std::size_t>(mu)] * (z(mu) * z(mu));
  return out;
}

std::array<FreeElt, 6> comm_anticomm_form(const SpherePresentation& p) {
  const auto& l = p.params.lambda();
  std::array<FreeElt, 6> out;
  for (int k = 1; k <= 3; ++k) {
    auto [kk, ll, mm] = triple(k);
    auto K = static_cast<std::size_t>(kk), L = static_cast<std::size_t>(ll), M = static_cast<std::size_t>(mm);
    out[K - 1] = (l[K] - l[0]) * anticommutator(z(0), z(kk)) - (l[L] + l[M]) * commutator(z(ll), z(mm));
    out[K + 2] = (l[K] + l[0]) * commutator(z(0), z(kk)) - (l[M] - l[L]) * anticommutator(z(ll), z(mm));
  }
  return out;
}

std::size_t span_dimension(const std::vector<FreeElt>& elts) {
  std::map<Word, std::size_t, WordLess> cols;
  for (const auto& e : elts)
    for (const auto& t : e.terms()) cols.emplace(t.first, 0);
  std::size_t c = 0;
  for (auto& [w, idx] : cols) idx = c++;
  Matrix<ParamScalar> m(elts.size(), cols.size());
  for (std::size_t r = 0; r < elts.size(); ++r)
    for (const auto& [w, coeff] : elts[r].terms()) m(r, cols.at(w)) = coeff;
  return rank(std::move(m));
}

bool same_span(const std::vector<FreeElt>& a, const std::vector<FreeElt>& b) {
  std::vector<FreeElt> all = a;
  all.insert(all.end(), b.begin(), b.end());
  std::size_t d = span_dimension(all);
  return d == span_dimension(a) && d == span_dimension(b);
}

// ---------------------------------------------------------------------------

SklyaninData rescale_sklyanin(const ModuliParams& params) {
  const auto& l = params.lambda();
  auto require = [](const ParamScalar& f, const std::string& name) {
    if (f.is_zero())
      throw SpecialCaseError("Sklyanin rescaling undefined: factor " + name + " vanishes", name);
  };
  for (int k = 1; k <= 3; ++k) require(l[0] + l[static_cast<std::size_t>(k)], "λ0+λ" + std::to_string(k));
  for (int k = 1; k <= 3; ++k)
    for (int j = k + 1; j <= 3; ++j)
      require(l[static_cast<std::size_t>(j)] - l[static_cast<std::size_t>(k)],
              "λ" + std::to_string(j) + "-λ" + std::to_string(k));

  SklyaninData sk;
  sk.params = params;
  sk.rho_sq[0] = ParamScalar(1);
  sk.rho_product = ParamScalar(1);
  for (int k = 1; k <= 3; ++k) {
    auto [kk, ll, mm] = triple(k);
    auto K = static_cast<std::size_t>(kk), L = static_cast<std::size_t>(ll), M = static_cast<std::size_t>(mm);
    sk.a[K - 1] = (l[K] + l[0]) * (l[L] + l[M]);
    sk.rho_sq[0] *= l[0] + l[K];
    sk.rho_sq[K] = (l[0] + l[K]) * (l[L] - l[K]) * (l[K] - l[M]);
    sk.rho_product *= (l[0] + l[K]) * (l[M] - l[L]);
  }
  sk.ring = RadicalRing::make(sk.rho_sq, sk.rho_product);
  return sk;
}

RadicalElt SklyaninData::pair_product(int mu, int nu) const {
  return RadicalElt::root(ring, mu) * RadicalElt::root(ring, nu);
}

bool SklyaninData::consistent() const {
  const auto& l = params.lambda();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      RadicalElt pp = pair_product(mu, nu);
      if (!(pp * pp == RadicalElt(ring, rho_sq[static_cast<std::size_t>(mu)] * rho_sq[static_cast<std::size_t>(nu)])))
        return false;
    }
  for (int k = 1; k <= 3; ++k) {
    auto [kk, ll, mm] = triple(k);
    auto K = static_cast<std::size_t>(kk), L = static_cast<std::size_t>(ll), M = static_cast<std::size_t>(mm);
    if (!(pair_product(0, kk) * pair_product(ll, mm) == RadicalElt(ring, rho_product))) return false;
    if (!(pair_product(0, kk) * (l[M] - l[L]) == pair_product(mm, ll) * (l[0] + l[K]))) return false;
  }
  return true;
}

std::array<FreeElt, 6> SklyaninData::relations_Z() const {
  std::array<FreeElt, 6> out;
  for (int k = 1; k <= 3; ++k) {
    auto [kk, ll, mm] = triple(k);
    auto K = static_cast<std::size_t>(kk), L = static_cast<std::size_t>(ll), M = static_cast<std::size_t>(mm);
    out[K - 1] = commutator(z(0), z(kk)) - anticommutator(z(ll), z(mm));
    out[K + 2] = (a[M - 1] - a[L - 1]) * anticommutator(z(0), z(kk)) - a[K - 1] * commutator(z(ll), z(mm));
  }
  return out;
}

RadicalFreeElt SklyaninData::to_Z(const FreeElt& x) const {
  RadicalFreeElt out;
  for (const auto& [w, c] : x.terms()) {
    if (w.size() != 2) throw DomainError("rescaling expects homogeneous degree-2 elements");
    int a0 = w[0], a1 = w[1];
    RadicalElt coeff = a0 == a1
                           ? RadicalElt(ring, c / rho_sq[static_cast<std::size_t>(a0)])
                           : pair_product(a0, a1) *
                                 (c / (rho_sq[static_cast<std::size_t>(a0)] * rho_sq[static_cast<std::size_t>(a1)]));
    auto it = out.find(w);
    if (it == out.end())
      out.emplace(w, coeff);
    else
      it->second += coeff;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

bool SklyaninData::reproduces_Z_relations() const {
  const auto& l = params.lambda();
  auto comm = comm_anticomm_form(unitarity_relations(params));
  auto target = relations_Z();
  auto scaled_equal = [&](const FreeElt& zrel, const RadicalElt& factor, const FreeElt& expect) {
    RadicalFreeElt got = to_Z(zrel);
    for (auto& [w, c] : got) c *= factor;
    for (auto it = got.begin(); it != got.end();) it = it->second.is_zero() ? got.erase(it) : std::next(it);
    if (got.size() != expect.size()) return false;
    for (const auto& [w, c] : expect.terms()) {
      auto it = got.find(w);
      if (it == got.end() || !(it->second == RadicalElt(ring, c))) return false;
    }
    return true;
  };
  for (int k = 1; k <= 3; ++k) {
    auto [kk, ll, mm] = triple(k);
    auto K = static_cast<std::size_t>(kk), L = static_cast<std::size_t>(ll), M = static_cast<std::size_t>(mm);
    RadicalElt f_second = pair_product(0, kk) * (l[M] - l[L]);
    RadicalElt f_first = pair_product(0, kk) * (l[K] + l[0]).inverse();
    if (!scaled_equal(comm[K - 1], f_second, target[K + 2])) return false;
    if (!scaled_equal(comm[K + 2], f_first, target[K - 1])) return false;
  }
  return true;
}

std::array<FreeElt, 3> central_elements(const SklyaninData& sk) {
  std::array<FreeElt, 3> q;
  for (int k = 1; k <= 3; ++k) {
    auto [kk, ll, mm] = triple(k);
    auto K = static_cast<std::size_t>(kk), L = static_cast<std::size_t>(ll), M = static_cast<std::size_t>(mm);
    q[K - 1] = (sk.a[M - 1] - sk.a[L - 1]) * (z(0) * z(0) + z(kk) * z(kk)) +
               sk.a[K - 1] * (z(mm) * z(mm) - z(ll) * z(ll));
  }
  return q;
}

std::array<FreeElt, 3> central_elements_z(const SklyaninData& sk) {
  std::array<FreeElt, 3> q = central_elements(sk);
  std::array<FreeElt, 3> out;
  for (std::size_t k = 0; k < 3; ++k)
    for (const auto& [w, c] : q[k].terms())
      out[k].add_term(w, c * sk.rho_sq[w[0]]);  // every word is Z_μ²
  return out;
}

std::string to_string(HermiticityFlag f) {
  switch (f) {
    case HermiticityFlag::Hermitian:
      return "hermitian";
    case HermiticityFlag::AntiHermitian:
      return "anti-hermitian";
    default:
      return "phase-dependent";
  }
}

HermiticityReport hermiticity(const SklyaninData& sk) {
  HermiticityReport rep;
  const auto& l = sk.params.lambda();
  ParamScalar prod = l[0] * l[1] * l[2] * l[3];
  rep.square_identity = true;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    if (!(l[mu] * l[mu] * sk.rho_sq[mu].star() * prod == sk.rho_sq[mu])) rep.square_identity = false;
    rep.flags[mu] = HermiticityFlag::PhaseDependent;
    if (!sk.params.is_symbolic()) {
      GaussRat w = l[mu].constant_value() * sk.rho_sq[mu].constant_value().conj();
      if (w.is_real()) rep.flags[mu] = sgn(w.re()) > 0 ? HermiticityFlag::Hermitian : HermiticityFlag::AntiHermitian;
    }
  }
  rep.product_identity = prod.pow(3) * sk.rho_product.star() == -sk.rho_product;
  return rep;
}

// ---------------------------------------------------------------------------

CaseTag classify_case(const ModuliParams& params) {
  CaseTag tag;
  if (params.is_symbolic()) {
    tag.partition = {{0}, {1}, {2}, {3}};
    tag.name = "generic";
    return tag;
  }
  auto v = params.gauss_values();
  std::array<GaussRat, 4> sq;
  for (std::size_t mu = 0; mu < 4; ++mu) sq[mu] = v[mu] * v[mu];
  std::vector<bool> used(4, false);
  for (int mu = 0; mu < 4; ++mu) {
    if (used[static_cast<std::size_t>(mu)]) continue;
    std::vector<int> group{mu};
    used[static_cast<std::size_t>(mu)] = true;
    for (int nu = mu + 1; nu < 4; ++nu)
      if (!used[static_cast<std::size_t>(nu)] && sq[static_cast<std::size_t>(nu)] == sq[static_cast<std::size_t>(mu)]) {
        group.push_back(nu);
        used[static_cast<std::size_t>(nu)] = true;
      }
    tag.partition.push_back(group);
  }
  auto equal = [&](int a, int b) { return v[static_cast<std::size_t>(a)] == v[static_cast<std::size_t>(b)]; };
  for (const auto& g : tag.partition)
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j)
        tag.sign_relations.push_back(lam_name(g[i]) + (equal(g[i], g[j]) ? "=" : "=-") + lam_name(g[j]));

  switch (tag.partition.size()) {
    case 4:
      tag.name = "generic";
      break;
    case 3:
      tag.name = "two-conics";
      break;
    case 2: {
      if (tag.partition[0].size() != 2) {
        tag.name = "plane";
        break;
      }
      bool first = equal(tag.partition[0][0], tag.partition[0][1]);
      bool second = equal(tag.partition[1][0], tag.partition[1][1]);
      tag.name = first == second ? "paired" : "coarse";
      break;
    }
    default: {
      int flips = 0;
      for (int mu = 1; mu < 4; ++mu) flips += equal(0, mu) ? 0 : 1;
      tag.name = flips % 2 == 0 ? "commutative" : "three-relations";
      break;
    }
  }
  return tag;
}

namespace {

bool angle_le(const GaussRat& a, const GaussRat& b) { return circle::compare_angle(a, b) <= 0; }
bool at_most_pi(const GaussRat& u) { return circle::half(u) == 0 || u == GaussRat(-1); }

}  // namespace

bool in_domain_A(const std::array<GaussRat, 4>& l) {
  return angle_le(l[1], l[2]) && angle_le(l[2], l[3]) && at_most_pi(l[3]);
}

bool in_domain_B(const std::array<GaussRat, 4>& l) {
  if (!(angle_le(l[1], l[2]) && at_most_pi(l[2]))) return false;
  if (!(circle::half(l[3]) == 1)) return false;  // φ₃ ≥ π
  if (l[1] == GaussRat(-1)) return true;
  return angle_le(l[3], -l[1]);
}

NormalizedModuli normalize_moduli(const std::array<UnitCirclePoint, 4>& values) {
  std::array<int, 4> perm{0, 1, 2, 3};
  std::optional<NormalizedModuli> best;
  auto lex_less = [](const std::array<GaussRat, 4>& a, const std::array<GaussRat, 4>& b) {
    for (std::size_t k = 0; k < 4; ++k) {
      auto c = lex_compare(a[k], b[k]);
      if (c != 0) return c < 0;
    }
    return false;
  };
  std::array<GaussRat, 4> best_vals;
  do {
    UnitCirclePoint inv = values[static_cast<std::size_t>(perm[0])].inverse();
    std::array<UnitCirclePoint, 4> cand;
    std::array<GaussRat, 4> g;
    for (std::size_t mu = 0; mu < 4; ++mu) {
      cand[mu] = values[static_cast<std::size_t>(perm[mu])] * inv;
      g[mu] = cand[mu].value();
    }
    char dom = in_domain_A(g) ? 'A' : (in_domain_B(g) ? 'B' : 0);
    if (!dom) continue;
    if (!best || lex_less(g, best_vals)) {
      ModuliParams p = ModuliParams::numeric(cand);
      best = NormalizedModuli{p, classify_case(p), perm, dom};
      best_vals = g;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!best) throw DomainError("no permutation reaches the fundamental domain");
  return *best;
}

ModuliParams twist(const ModuliParams& params, unsigned flips, const std::array<int, 4>& perm,
                   TwistMode mode) {
  if (flips > 0xF) throw DomainError("twist flips must be a subset of {0,1,2,3}");
  if (mode == TwistMode::Symmetry && std::bitset<4>(flips).count() % 2 != 0)
    throw DomainError("symmetry twists change the sign of an even number of generators");
  std::array<int, 4> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 4>{0, 1, 2, 3}) throw DomainError("twist needs a permutation of 0..3");
  if (params.is_symbolic()) throw DomainError("twist is defined on numeric parameters");
  const auto& v = params.values();
  std::array<UnitCirclePoint, 4> out;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    auto src = static_cast<std::size_t>(perm[mu]);
    out[mu] = (flips & (1u << src)) ? -v[src] : v[src];
  }
  return ModuliParams::numeric(out);
}

// ---------------------------------------------------------------------------

FreeElt SphereData::reduce(const FreeElt& x) const {
  FreeElt cur = x;
  for (int guard = 0; guard < 64; ++guard) {
    FreeElt next;
    bool changed = false;
    for (const auto& [w, c] : cur.terms()) {
      bool hit = false;
      for (const auto& [lead, rhs] : constraints) {
        auto pos = w.find(lead);
        if (pos == Word::npos) continue;
        FreeElt pre = FreeElt::monomial(w.substr(0, pos), c);
        FreeElt post = FreeElt::monomial(w.substr(pos + lead.size()));
        next += pre * rhs * post;
        hit = changed = true;
        break;
      }
      if (!hit) next.add_term(w, c);
    }
    cur = std::move(next);
    if (!changed) return cur;
  }
  throw DomainError("constraint rewriting did not terminate");
}

MatFree SphereData::reduce(const MatFree& m) const {
  MatFree r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r(i, j) = reduce(m(i, j));
  return r;
}

bool SphereData::satisfies_defining_relation() const {
  MatFree target = C * MatFree::identity(gen.dim());
  MatFree adj_gen = gen.adjoint(adj);
  if (even) return reduce(gen * gen) == target && adj_gen == gen;
  return reduce(gen * adj_gen) == target && reduce(adj_gen * gen) == target;
}

SphereData circle_sphere() {
  SphereData d{MatFree(1), false, FreeElt(1), Involution(), {}};
  d.gen(0, 0) = FreeElt::gen(4);
  d.adj.set(4, ParamScalar(1), 5).set(5, ParamScalar(1), 4);
  d.constraints.emplace(word({4, 5}), FreeElt(1));
  d.constraints.emplace(word({5, 4}), FreeElt(1));
  return d;
}

SphereData suspend(const SphereData& d, GenId x) {
  if (!is_central_id(x)) throw DomainError("suspension adjoins a central symbol");
  FreeElt X = FreeElt::gen(x);
  SphereData out = d;
  out.C = d.C + X * X;
  std::size_t n = d.gen.dim();
  if (!d.even) {
    MatFree s(2 * n);
    MatFree us = d.gen.adjoint(d.adj);
    for (std::size_t i = 0; i < n; ++i) {
      s(i, i) = X;
      s(n + i, n + i) = -X;
      for (std::size_t j = 0; j < n; ++j) {
        s(i, n + j) = d.gen(i, j);
        s(n + i, j) = us(i, j);
      }
    }
    out.gen = s;
    out.even = true;
  } else {
    out.gen = X * MatFree::identity(n) + FreeElt(ParamScalar::i()) * d.gen;
    out.even = false;
  }
  return out;
}

}  // namespace ncs
