#include "ncsphere/geomdata.hpp"

#include <nlohmann/json.hpp>

namespace ncs {

namespace {

ParamScalar sq(const ParamScalar& x) { return x * x; }

std::array<ParamScalar, 3> moduli_a(const std::array<ParamScalar, 4>& l) {
  std::array<ParamScalar, 3> a;
  for (const auto& t : kCyclic) {
    auto k = static_cast<std::size_t>(t[0]), p = static_cast<std::size_t>(t[1]), q = static_cast<std::size_t>(t[2]);
    a[k - 1] = (l[k] + l[0]) * (l[p] + l[q]);
  }
  return a;
}

// Y₀ → −Y₀ on a coordinate vector.
template <typename T>
std::array<T, 4> flip0(std::array<T, 4> v) {
  v[0] = -v[0];
  return v;
}

std::array<CommPoly, 4> compose_all(const std::array<CommPoly, 4>& f, const std::array<CommPoly, 4>& args,
                                    std::size_t base) {
  std::vector<CommPoly> images;
  for (std::size_t v = 0; v < base + 4; ++v) images.push_back(v < base ? CommPoly::var(v) : args[v - base]);
  return {f[0].compose(images), f[1].compose(images), f[2].compose(images), f[3].compose(images)};
}

GaussRat to_gauss(const ParamScalar& x) {
  if (!x.is_constant()) throw DomainError("expected a numeric value, got " + x.to_string());
  return x.constant_value();
}

std::size_t numeric_rank(const Rows6<ParamScalar>& m) {
  Matrix<GaussRat> g(6, 4);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 4; ++c) g(r, c) = to_gauss(m[r][c]);
  return rank(g);
}

std::string point_string(const std::array<ParamScalar, 4>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < 4; ++i) s += (i ? "," : "") + p[i].to_string();
  return s + ")";
}

Matrix<GaussRat> half_sign_matrix(const std::array<std::array<int, 4>, 4>& signs) {
  Matrix<GaussRat> m(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = GaussRat(Rat(signs[r][c], 2));
  return m;
}

// Checks the display of the first three rows of N(I₀(Mλ))·M with λ as
// polynomial variables.
bool display_holds(const Matrix<GaussRat>& m) {
  std::array<CommPoly, 4> lv = coords(kFirstPoint);
  std::array<CommPoly, 4> y;
  for (std::size_t r = 0; r < 4; ++r) {
    CommPoly s;
    for (std::size_t c = 0; c < 4; ++c) s += lv[c] * ParamScalar(m(r, c));
    y[r] = s;
  }
  auto n = n_matrix({ParamScalar(0), ParamScalar(0), ParamScalar(0)}, kFirstPoint);
  std::vector<CommPoly> images(y.begin(), y.end());
  images[0] = -images[0];
  const int expect[3][4] = {{1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      CommPoly s;
      for (std::size_t k = 0; k < 4; ++k) s += n[r][k].compose(images) * ParamScalar(m(k, c));
      if (!(s == lv[c] * ParamScalar(expect[r][c]))) return false;
    }
  return true;
}

}  // namespace

CommPoly coord(std::size_t mu, std::size_t base) { return CommPoly::var(base + mu); }

std::array<CommPoly, 4> coords(std::size_t base) {
  return {coord(0, base), coord(1, base), coord(2, base), coord(3, base)};
}

std::vector<std::string> coord_names(char letter) {
  std::string l(1, letter);
  return {l + "0", l + "1", l + "2", l + "3", l + "'0", l + "'1", l + "'2", l + "'3", "t", "t'", "v10", "v11"};
}

CharMatrix char_matrix(const ModuliParams& params, std::size_t base) {
  return char_matrix_at<CommPoly>(params.lambda(), coords(base));
}

const std::vector<std::array<std::size_t, 4>>& row_quadruples() {
  static const std::vector<std::array<std::size_t, 4>> quads = [] {
    std::vector<std::array<std::size_t, 4>> q;
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = a + 1; b < 6; ++b)
        for (std::size_t c = b + 1; c < 6; ++c)
          for (std::size_t d = c + 1; d < 6; ++d) q.push_back({a, b, c, d});
    return q;
  }();
  return quads;
}

std::array<CommPoly, 2> curve_quadrics(const ModuliParams& params, std::size_t base) {
  CommPoly q1, q2;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    CommPoly y2 = coord(mu, base) * coord(mu, base);
    q1 += y2;
    q2 += y2 * sq(params[mu]);
  }
  return {q1, q2};
}

GroebnerBasis curve_groebner(const ModuliParams& params, std::size_t base, const Budget& budget) {
  auto q = curve_quadrics(params, base);
  return groebner_basis({q[0], q[1]}, MonoOrder::DegRevLex, budget);
}

CommPoly det_1245_factorization(const ModuliParams& params) {
  const auto& l = params.lambda();
  auto y2 = [](std::size_t mu) { return coord(mu) * coord(mu); };
  CommPoly bracket = (y2(1) + y2(2)) * (y2(0) * sq(l[0]) + y2(3) * sq(l[3])) -
                     (y2(0) + y2(3)) * (y2(1) * sq(l[1]) + y2(2) * sq(l[2]));
  return bracket * (l[0] * l[3] + l[1] * l[2]);
}

Det1245Report verify_det_1245(const ModuliParams& params) {
  CommPoly det = det4_rows(char_matrix(params), {0, 1, 3, 4});
  CommPoly shown = det_1245_factorization(params);
  return {det == shown, det == -shown};
}

bool MinorsReport::all() const {
  for (bool b : in_ideal)
    if (!b) return false;
  return true;
}

std::string MinorsReport::first_failure() const {
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!in_ideal[i]) {
      std::string s;
      for (std::size_t r : rows[i]) s += (s.empty() ? "" : ",") + std::to_string(r + 1);
      return s;
    }
  return "";
}

MinorsReport minors_in_ideal(const ModuliParams& params, const Budget& budget) {
  auto gb = curve_groebner(params, kFirstPoint, budget);
  auto m = char_matrix(params);
  MinorsReport rep;
  for (const auto& q : row_quadruples()) {
    budget.check("minors_in_ideal");
    rep.rows.push_back(q);
    rep.in_ideal.push_back(gb.contains(det4_rows(m, q)));
  }
  return rep;
}

MinorFactorReport minors_common_factors(const ModuliParams& params) {
  auto m = char_matrix(params);
  auto q = curve_quadrics(params);
  auto divisible = [&](std::size_t first, const CommPoly& f) {
    auto v = kernel_of_rows<CommPoly>({m[first], m[first + 1], m[first + 2]});
    for (const auto& x : v)
      if (!x.divide_exact(f)) return false;
    return !all_zero(v);
  };
  return {divisible(0, q[0]), divisible(3, q[1])};
}

SpecialPoints special_points(const ModuliParams& params) {
  const auto& l = params.lambda();
  std::array<ParamScalar, 4> L;
  for (std::size_t mu = 0; mu < 4; ++mu) L[mu] = sq(l[mu]);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b)
      if (L[a] == L[b]) {
        std::string f = "λ" + std::to_string(a) + "²-λ" + std::to_string(b) + "²";
        throw SpecialCaseError("coincident λ² values; use the degenerate-case classifier", f);
      }

  SpecialPoints sp;
  sp.squares = {(L[2] - L[3]) * (L[3] - L[1]) * (L[1] - L[2]), (L[2] - L[3]) * (L[0] - L[2]) * (L[0] - L[3]),
                (L[0] - L[1]) * (L[3] - L[1]) * (L[0] - L[3]), (L[0] - L[1]) * (L[0] - L[2]) * (L[1] - L[2])};
  // The product sign follows from the first special equation times y₂y₃.
  ParamScalar product = (L[2] - L[3]) * sp.squares[2] * sp.squares[3] / (L[0] - L[1]);
  sp.ring = RadicalRing::make(sp.squares, product);
  const auto& ring = sp.ring;

  for (std::size_t mu = 0; mu < 4; ++mu) {
    ProjPoint<RadicalElt> p{{RadicalElt(ring), RadicalElt(ring), RadicalElt(ring), RadicalElt(ring)}, 'y'};
    p.c[mu] = RadicalElt(ring, ParamScalar(1));
    sp.points.push_back(std::move(p));
  }
  ProjPoint<RadicalElt> base{{RadicalElt::root(ring, 0), RadicalElt::root(ring, 1), RadicalElt::root(ring, 2),
                              RadicalElt::root(ring, 3)},
                             'y'};
  sp.points.push_back(base);
  for (std::size_t other = 1; other < 4; ++other) {
    auto p = base;
    p.c[0] = -p.c[0];
    p.c[other] = -p.c[other];
    sp.points.push_back(std::move(p));
  }

  sp.satisfy_special_equations = true;
  for (const auto& p : sp.points) {
    const auto& y = p.c;
    RadicalElt e1 = y[0] * y[1] * (L[0] - L[1]) - y[2] * y[3] * (L[2] - L[3]);
    RadicalElt e2 = y[0] * y[2] * (L[0] - L[2]) - y[3] * y[1] * (L[3] - L[1]);
    RadicalElt e3 = y[0] * y[3] * (L[0] - L[3]) - y[1] * y[2] * (L[1] - L[2]);
    if (!e1.is_zero() || !e2.is_zero() || !e3.is_zero()) sp.satisfy_special_equations = false;
  }

  ParamScalar s1(0), s2(0);
  for (std::size_t mu = 0; mu < 4; ++mu) {
    s1 += sp.squares[mu];
    s2 += L[mu] * sp.squares[mu];
  }
  sp.on_both_quadrics = s1.is_zero() && s2.is_zero();

  for (const auto& p : sp.points) {
    auto m = char_matrix_at<RadicalElt>(l, p.c);
    // A nonzero kernel vector checked against all six rows already certifies rank ≤ 3.
    auto v = kernel_rank3(m);
    bool in_e = v.has_value();
    if (!in_e) {
      in_e = true;
      for (const auto& q : row_quadruples())
        if (!det4_rows(m, q).is_zero()) {
          in_e = false;
          break;
        }
    }
    sp.in_E.push_back(in_e);
    sp.sigma_fixed.push_back(v && projectively_equal<RadicalElt>(*v, p.c));
  }
  return sp;
}

Rows6<CommPoly> n_matrix(const std::array<ParamScalar, 3>& a, std::size_t base) {
  auto Y = coords(base);
  const auto &a1 = a[0], &a2 = a[1], &a3 = a[2];
  return {{
      {Y[1], -Y[0], Y[3], Y[2]},
      {Y[2], Y[3], -Y[0], Y[1]},
      {Y[3], Y[2], Y[1], -Y[0]},
      {Y[1] * (a2 - a3), Y[0] * (a2 - a3), Y[3] * -a1, Y[2] * a1},
      {Y[2] * (a3 - a1), Y[3] * a2, Y[0] * (a3 - a1), Y[1] * -a2},
      {Y[3] * (a1 - a2), Y[2] * -a3, Y[1] * a3, Y[0] * (a1 - a2)},
  }};
}

std::array<CommPoly, 2> scaled_quadrics(const ModuliParams& params, std::size_t base) {
  const auto& l = params.lambda();
  ParamScalar prod(1);
  for (const auto& t : kCyclic) prod *= l[static_cast<std::size_t>(t[2])] - l[static_cast<std::size_t>(t[1])];
  auto Y2 = [&](std::size_t mu) { return coord(mu, base) * coord(mu, base); };
  CommPoly e1 = Y2(0) * prod, e2 = Y2(0) * (sq(l[0]) * prod);
  for (const auto& t : kCyclic) {
    auto k = static_cast<std::size_t>(t[0]), p = static_cast<std::size_t>(t[1]), q = static_cast<std::size_t>(t[2]);
    ParamScalar c = (l[0] + l[q]) * (l[0] + l[p]) * (l[q] - l[p]);
    e1 += Y2(k) * c;
    e2 += Y2(k) * (sq(l[k]) * c);
  }
  return {e1, e2};
}

std::array<CommPoly, 4> sigma_scaled(std::size_t base) {
  auto n = n_matrix({ParamScalar(0), ParamScalar(0), ParamScalar(0)}, base);
  return kernel_of_rows<CommPoly>({n[0], n[1], n[2]});
}

std::array<CommPoly, 4> sigma_inverse_scaled(std::size_t base) {
  return flip0(compose_all(sigma_scaled(base), flip0(coords(base)), base));
}

std::array<CommPoly, 4> involution_product(std::size_t base) {
  auto m = involutive_m();
  auto y = flip0(coords(base));
  std::array<CommPoly, 4> l, inv, out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) l[r] += y[c] * ParamScalar(m(r, c));
  for (std::size_t r = 0; r < 4; ++r) {
    inv[r] = CommPoly(ParamScalar(1));
    for (std::size_t c = 0; c < 4; ++c)
      if (c != r) inv[r] = inv[r] * l[c];
  }
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out[r] += inv[c] * ParamScalar(m(r, c));
  return out;
}

ProjPoint<ParamScalar> sigma_apply(const ProjPoint<ParamScalar>& z) {
  auto s = sigma_scaled();
  std::vector<ParamScalar> vals(z.c.begin(), z.c.end());
  ProjPoint<ParamScalar> out{{s[0].evaluate(vals), s[1].evaluate(vals), s[2].evaluate(vals), s[3].evaluate(vals)},
                             'Y'};
  if (all_zero(out.c)) throw SpecialCaseError("first three rows of N(Z) drop rank at this point", "N(Z)");
  return out;
}

std::array<CommPoly, 4> sigma_y(const ModuliParams& params, std::size_t base) {
  auto m = char_matrix(params, base);
  return kernel_of_rows<CommPoly>({m[0], m[1], m[3]});
}

std::array<CommPoly, 4> sigma_inverse_y(const ModuliParams& params, std::size_t base) {
  return flip0(compose_all(sigma_y(params, base), flip0(coords(base)), base));
}

ProjPoint<ParamScalar> reality_j(const ModuliParams& params, const ProjPoint<ParamScalar>& p) {
  ProjPoint<ParamScalar> out = p;
  for (std::size_t mu = 0; mu < 4; ++mu) out.c[mu] = params[mu].star() * p.c[mu].star();
  return out;
}

RealityReport reality_checks(const ModuliParams& params, const Budget& budget) {
  RealityReport rep;
  const auto& l = params.lambda();
  auto star = [](const ParamScalar& x) { return x.star(); };

  rep.involutive = true;
  const std::array<std::array<GaussRat, 4>, 3> samples{{{GaussRat(1), GaussRat(2), GaussRat(3), GaussRat(4)},
                                                        {GaussRat(1), GaussRat::i(), GaussRat(-2), GaussRat(Rat(1), Rat(1))},
                                                        {GaussRat(Rat(1, 2)), GaussRat(0), GaussRat(Rat(3), Rat(-5)), GaussRat(7)}}};
  for (const auto& s : samples) {
    ProjPoint<ParamScalar> p{{s[0], s[1], s[2], s[3]}, 'y'};
    auto jj = reality_j(params, reality_j(params, p));
    if (!projectively_equal<ParamScalar>(jj.c, p.c)) rep.involutive = false;
  }

  auto gb = curve_groebner(params, kFirstPoint, budget);
  auto zero = [&](const CommPoly& x) { return gb.contains(x); };
  std::vector<CommPoly> scaled_by_lambda;
  for (std::size_t mu = 0; mu < 4; ++mu) scaled_by_lambda.push_back(coord(mu) * l[mu]);

  rep.preserves_curve = true;
  for (const auto& q : curve_quadrics(params))
    if (!zero(q.map_coeffs(star).compose(scaled_by_lambda))) rep.preserves_curve = false;

  auto s = sigma_y(params);
  std::array<CommPoly, 4> lhs;
  for (std::size_t mu = 0; mu < 4; ++mu) lhs[mu] = s[mu].map_coeffs(star).compose(scaled_by_lambda) * l[mu].star();
  rep.intertwines_sigma = projectively_equal<CommPoly>(lhs, sigma_inverse_y(params), zero);
  return rep;
}

Matrix<GaussRat> involutive_m() {
  return half_sign_matrix({{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}});
}

Matrix<GaussRat> printed_m() {
  return half_sign_matrix({{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -1, -1, 1}}});
}

CurveIdentification curve_identification(const ModuliParams& params) {
  const auto& l = params.lambda();
  CurveIdentification rep;
  auto sk = rescale_sklyanin(params);
  auto e = scaled_quadrics(params);

  std::vector<ParamScalar> ones(4, ParamScalar(1));
  rep.coefficient_sums_vanish = e[0].evaluate(ones).is_zero() && e[1].evaluate(ones).is_zero();

  auto square_coeff = [](const CommPoly& p, std::size_t mu) {
    Monomial m{};
    m[mu] = 2;
    return p.coeff(m);
  };
  // With vanishing coefficient sums, Σ c_μY_μ² = −Σ_k c_k B_k.
  std::array<ParamScalar, 3> u, w, v;
  for (std::size_t k = 0; k < 3; ++k) {
    u[k] = -square_coeff(e[0], k + 1);
    w[k] = -square_coeff(e[1], k + 1);
  }
  v = {u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
  auto a = moduli_a(l);
  rep.b_ratio_matches_a = !(v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) &&
                          (v[0] * a[1] - v[1] * a[0]).is_zero() && (v[0] * a[2] - v[2] * a[0]).is_zero();

  rep.scaled_quadrics_match = true;
  for (std::size_t mu = 1; mu < 4; ++mu) {
    ParamScalar r1 = square_coeff(e[0], mu) * sk.rho_sq[mu] / (square_coeff(e[0], 0) * sk.rho_sq[0]);
    ParamScalar r2 = square_coeff(e[1], mu) * sk.rho_sq[mu] / (square_coeff(e[1], 0) * sk.rho_sq[0]);
    if (!(r1 == ParamScalar(1)) || !(r2 == sq(l[mu]) / sq(l[0]))) rep.scaled_quadrics_match = false;
  }

  auto m = involutive_m();
  rep.m_involutive = m * m == Matrix<GaussRat>::identity(4);
  auto pm = printed_m();
  rep.printed_m_involutive = pm * pm == Matrix<GaussRat>::identity(4);

  // B_k(Mλ) = a_k(λ) with λ as polynomial variables.
  auto lv = coords(kFirstPoint);
  std::array<CommPoly, 4> y;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) y[r] += lv[c] * ParamScalar(m(r, c));
  rep.m_maps_b_to_a = true;
  for (const auto& t : kCyclic) {
    auto k = static_cast<std::size_t>(t[0]), p = static_cast<std::size_t>(t[1]), q = static_cast<std::size_t>(t[2]);
    CommPoly ak = (lv[k] + lv[0]) * (lv[p] + lv[q]);
    if (!(y[0] * y[0] - y[k] * y[k] == ak)) rep.m_maps_b_to_a = false;
  }

  rep.n_rows_display = display_holds(m);
  rep.printed_m_display = display_holds(pm);

  // Search all ½·(±1) matrices: M² = I first, then the display.
  for (unsigned bits = 0; bits < (1u << 16); ++bits) {
    std::array<std::array<int, 4>, 4> s;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) s[r][c] = (bits >> (4 * r + c)) & 1u ? -1 : 1;
    bool inv = true;
    for (std::size_t r = 0; r < 4 && inv; ++r)
      for (std::size_t c = 0; c < 4 && inv; ++c) {
        int acc = 0;
        for (std::size_t k = 0; k < 4; ++k) acc += s[r][k] * s[k][c];
        inv = acc == (r == c ? 4 : 0);
      }
    if (!inv) continue;
    auto cand = half_sign_matrix(s);
    if (display_holds(cand)) rep.sign_solutions.push_back(cand);
  }
  return rep;
}

CommPoly curve_normal_form(const CommPoly& p, const std::array<ParamScalar, 3>& a, std::size_t base,
                           std::size_t tvar) {
  std::array<std::vector<CommPoly>, 3> powers;  // (Y₀² − t·a_k)^e
  auto power = [&](std::size_t k, std::size_t e) -> const CommPoly& {
    auto& v = powers[k];
    if (v.empty()) v.push_back(CommPoly(ParamScalar(1)));
    CommPoly step = coord(0, base) * coord(0, base) - CommPoly::var(tvar) * a[k];
    while (v.size() <= e) v.push_back(v.back() * step);
    return v[e];
  };
  CommPoly out;
  for (const auto& [mono, c] : p.terms()) {
    Monomial rest = mono;
    CommPoly factor(ParamScalar(1));
    for (std::size_t k = 1; k < 4; ++k) {
      std::size_t e = mono[base + k];
      rest[base + k] = static_cast<std::uint8_t>(e % 2);
      if (e >= 2) factor = factor * power(k - 1, e / 2);
    }
    out += factor.times_monomial(rest, c);
  }
  return out;
}

CommPoly CentralQuadraticForm::evaluate(const std::array<CommPoly, 4>& u, const std::array<CommPoly, 4>& v) const {
  CommPoly s;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!q[i][j].is_zero()) s += u[i] * v[j] * q[i][j];
  return s;
}

bool CentralQuadraticForm::symmetric() const {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!(q[i][j] == q[j][i])) return false;
  return true;
}

CentralQuadraticForm central_form(const std::array<ParamScalar, 3>& a, int k) {
  if (k < 1 || k > 3) throw DomainError("central form index must be 1, 2 or 3");
  const auto& t = kCyclic[static_cast<std::size_t>(k - 1)];
  auto K = static_cast<std::size_t>(t[0]), l = static_cast<std::size_t>(t[1]), m = static_cast<std::size_t>(t[2]);
  CentralQuadraticForm f{};
  ParamScalar d = a[m - 1] - a[l - 1];
  f.q[0][0] += d;
  f.q[K][K] += d;
  f.q[m][m] += a[K - 1];
  f.q[l][l] -= a[K - 1];
  return f;
}

std::array<std::array<std::array<ParamScalar, 4>, 4>, 6> relation_forms(const std::array<ParamScalar, 3>& a) {
  std::array<std::array<std::array<ParamScalar, 4>, 4>, 6> w{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& t = kCyclic[i];
    auto k = static_cast<std::size_t>(t[0]), l = static_cast<std::size_t>(t[1]), m = static_cast<std::size_t>(t[2]);
    w[i][0][k] = 1;
    w[i][k][0] = -1;
    w[i][l][m] = -1;
    w[i][m][l] = -1;
    ParamScalar c = a[m - 1] - a[l - 1];
    w[i + 3][0][k] = c;
    w[i + 3][k][0] = c;
    w[i + 3][l][m] = -a[k - 1];
    w[i + 3][m][l] = a[k - 1];
  }
  return w;
}

bool CentralFormReport::all() const {
  for (std::size_t i = 0; i < 6; ++i)
    if (!sigma_annihilates[i] || !identity_holds[i]) return false;
  return q_on_sigma_graph && strategies_agree;
}

CentralFormReport central_form_check(const ModuliParams& params, int k, const Budget& budget) {
  CentralFormReport rep;
  rep.k = k;
  auto a = moduli_a(params.lambda());
  auto Q = central_form(a, k);
  auto forms = relation_forms(a);
  auto bil = [](const std::array<std::array<ParamScalar, 4>, 4>& w, const std::array<CommPoly, 4>& u,
                const std::array<CommPoly, 4>& v) {
    CentralQuadraticForm f{w};
    return f.evaluate(u, v);
  };
  auto nf1 = [&](const CommPoly& p) { return curve_normal_form(p, a, kFirstPoint, kCurveParam); };
  auto nf2 = [&](const CommPoly& p) {
    return curve_normal_form(nf1(p), a, kSecondPoint, kSecondCurveParam);
  };

  auto Z = coords(kFirstPoint), Zp = coords(kSecondPoint);
  auto sZ = sigma_scaled(kFirstPoint);
  auto sZp = sigma_scaled(kSecondPoint);
  auto siZ = sigma_inverse_scaled(kFirstPoint);

  for (std::size_t i = 0; i < 6; ++i) {
    budget.check("central_form_check");
    rep.sigma_annihilates[i] = nf1(bil(forms[i], Z, sZ)).is_zero();
    CommPoly expr = bil(forms[i], Z, Zp) * Q.evaluate(sZp, siZ) + bil(forms[i], sZp, siZ) * Q.evaluate(Z, Zp);
    rep.identity_holds[i] = nf2(expr).is_zero();
  }

  CommPoly graph = Q.evaluate(Z, sZ);
  rep.q_on_sigma_graph = nf1(graph).is_zero();

  auto sq2 = scaled_quadrics(params);
  auto gb = groebner_basis({sq2[0], sq2[1]}, MonoOrder::DegRevLex, budget);
  std::vector<CommPoly> probes{graph, coord(0) * coord(0) * coord(1), sq2[0] * coord(2) + sq2[1] * coord(3),
                               Q.evaluate(Z, Z)};
  for (std::size_t i = 0; i < 6; ++i) probes.push_back(bil(forms[i], Z, sZ));
  rep.strategies_agree = true;
  for (const auto& p : probes)
    if (nf1(p).is_zero() != gb.contains(p)) rep.strategies_agree = false;

  for (std::size_t mu = 0; mu < 4; ++mu) {
    std::vector<CommPoly> images;
    for (std::size_t v = 0; v < 4; ++v) images.push_back(CommPoly(ParamScalar(v == mu ? 1 : 0)));
    for (std::size_t v = 4; v < 8; ++v) images.push_back(CommPoly::var(v));
    bool ok = true;
    for (std::size_t i = 0; i < 6 && ok; ++i) {
      CommPoly expr = bil(forms[i], Z, Zp) * Q.evaluate(sZp, siZ) + bil(forms[i], sZp, siZ) * Q.evaluate(Z, Zp);
      CommPoly at = expr.compose(images);
      ok = curve_normal_form(at, a, kSecondPoint, kSecondCurveParam).is_zero();
    }
    rep.at_special_points[mu] = ok;
  }
  return rep;
}

VarietyReport classify_variety(const ModuliParams& params) {
  VarietyReport rep;
  auto tag = classify_case(params);
  rep.case_name = tag.name;
  const auto& l = params.lambda();
  auto m = char_matrix(params);
  auto q = curve_quadrics(params);

  auto minors_vanish_on = [&](const std::vector<CommPoly>& images) {
    for (const auto& quad : row_quadruples())
      if (!det4_rows(m, quad).compose(images).is_zero()) return false;
    return true;
  };
  auto with_zero = [&](std::initializer_list<std::size_t> zeros) {
    std::vector<CommPoly> images;
    for (std::size_t mu = 0; mu < 4; ++mu) images.push_back(coord(mu));
    for (std::size_t z : zeros) images[z] = CommPoly();
    return images;
  };
  auto at_point = [&](const std::array<ParamScalar, 4>& p) { return char_matrix_at<ParamScalar>(l, p); };
  auto record_rank = [&](const std::array<ParamScalar, 4>& p) {
    rep.rank_profile.emplace_back(point_string(p), numeric_rank(at_point(p)));
  };
  auto P = [](std::size_t mu) {
    std::array<ParamScalar, 4> p{ParamScalar(0), ParamScalar(0), ParamScalar(0), ParamScalar(0)};
    p[mu] = ParamScalar(1);
    return p;
  };
  auto point_in_E = [&](const std::array<ParamScalar, 4>& p) { return numeric_rank(at_point(p)) < 4; };
  const ParamScalar i = ParamScalar::i();

  if (tag.name == "commutative") {
    rep.components = {"full projective space"};
    rep.checks.emplace_back("all minors vanish identically", minors_vanish_on(with_zero({})));
    bool identity = true;
    auto y = coords();
    for (const auto& row : m) {
      CommPoly s = row[0] * y[0] + row[1] * y[1] + row[2] * y[2] + row[3] * y[3];
      if (!s.is_zero()) identity = false;
    }
    rep.checks.emplace_back("point lies in its own kernel (sigma = id)", identity);
    record_rank({ParamScalar(1), ParamScalar(2), ParamScalar(3), ParamScalar(4)});
    return rep;
  }

  if (tag.name == "three-relations") {
    Matrix<GaussRat> forms(6, 16);
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        for (std::size_t mu = 0; mu < 4; ++mu) {
          Monomial mono{};
          mono[mu] = 1;
          forms(r, 4 * c + mu) = to_gauss(m[r][c].coeff(mono));
        }
    std::size_t independent = rank(forms);
    rep.components = {"full projective space (rank at most 3)", "rank-2 surface Σy²=0"};
    rep.checks.emplace_back("three independent rows", independent == 3);
    rep.checks.emplace_back("all minors vanish identically", minors_vanish_on(with_zero({})));
    std::vector<std::array<ParamScalar, 4>> surface{{ParamScalar(3), ParamScalar(4), ParamScalar(5) * i, ParamScalar(0)},
                                                    {ParamScalar(2), ParamScalar(3), ParamScalar(6), ParamScalar(7) * i},
                                                    {ParamScalar(1), ParamScalar(2), ParamScalar(2), ParamScalar(3) * i},
                                                    {ParamScalar(1), i, ParamScalar(0), ParamScalar(0)}};
    bool rank2 = true;
    for (const auto& p : surface) {
      record_rank(p);
      if (numeric_rank(at_point(p)) != 2) rank2 = false;
    }
    std::array<ParamScalar, 4> off{ParamScalar(1), ParamScalar(2), ParamScalar(3), ParamScalar(4)};
    record_rank(off);
    rep.checks.emplace_back("rank 2 on Σy²=0", rank2);
    rep.checks.emplace_back("rank 3 off the surface", numeric_rank(at_point(off)) == 3);
    return rep;
  }

  std::vector<std::vector<int>> groups = tag.partition;

  if (tag.name == "generic") {
    rep.components = {"elliptic curve Σy²=Σλ²y²=0", "P0", "P1", "P2", "P3"};
    rep.checks.emplace_back("minors in the curve ideal", minors_in_ideal(params).all());
    bool pts = true;
    for (std::size_t mu = 0; mu < 4; ++mu) pts = pts && point_in_E(P(mu));
    rep.checks.emplace_back("P0..P3 lie in E", pts);
    return rep;
  }

  if (tag.name == "two-conics") {
    std::size_t a = 0, b = 0;
    for (const auto& g : groups)
      if (g.size() == 2) {
        a = static_cast<std::size_t>(g[0]);
        b = static_cast<std::size_t>(g[1]);
      }
    std::vector<std::size_t> others;
    for (std::size_t mu = 0; mu < 4; ++mu)
      if (mu != a && mu != b) others.push_back(mu);
    CommPoly pencil = q[1] - q[0] * sq(l[a]);
    rep.components = {"conic", "conic", "line P" + std::to_string(a) + "P" + std::to_string(b), "P0", "P1", "P2",
                      "P3"};
    rep.checks.emplace_back("pencil contains a rank-2 quadric", pencil.size() == 2);
    rep.checks.emplace_back("minors vanish on the line", minors_vanish_on(with_zero({others[0], others[1]})));
    rep.checks.emplace_back("minors in the curve ideal", minors_in_ideal(params).all());
    return rep;
  }

  if (tag.name == "plane") {
    std::size_t single = 0;
    for (const auto& g : groups)
      if (g.size() == 1) single = static_cast<std::size_t>(g[0]);
    std::string plane = "plane y" + std::to_string(single) + "=0 through";
    for (std::size_t mu = 0; mu < 4; ++mu)
      if (mu != single) plane += " P" + std::to_string(mu);
    rep.components = {plane, "P" + std::to_string(single)};
    rep.checks.emplace_back("minors vanish on the plane", minors_vanish_on(with_zero({single})));
    rep.checks.emplace_back("isolated point lies in E", point_in_E(P(single)));
    // σ on sample points of the plane
    bool identity = true;
    std::vector<std::array<ParamScalar, 4>> samples{
        {ParamScalar(1), ParamScalar(2), ParamScalar(3), ParamScalar(5)},
        {ParamScalar(2), ParamScalar(-1), i, ParamScalar(1)}};
    for (auto p : samples) {
      p[single] = ParamScalar(0);
      record_rank(p);
      auto v = kernel_rank3(at_point(p));
      if (!v || !projectively_equal<ParamScalar>(*v, p)) identity = false;
    }
    // Only asserted when the three moduli agree, not just their squares.
    std::vector<std::size_t> triple;
    for (std::size_t mu = 0; mu < 4; ++mu)
      if (mu != single) triple.push_back(mu);
    if (l[triple[0]] == l[triple[1]] && l[triple[1]] == l[triple[2]])
      rep.checks.emplace_back("sigma is the identity on the plane", identity);
    return rep;
  }

  // paired / coarse: two pairs of equal λ²; the quadrics cut four lines.
  std::size_t a = static_cast<std::size_t>(groups[0][0]), b = static_cast<std::size_t>(groups[0][1]);
  std::size_t c = static_cast<std::size_t>(groups[1][0]), d = static_cast<std::size_t>(groups[1][1]);
  rep.components = {};
  bool coarse = false;
  for (int ea : {1, -1})
    for (int ec : {1, -1}) {
      rep.components.push_back("line y" + std::to_string(a) + "=" + (ea > 0 ? "" : "-") + "i·y" + std::to_string(b) +
                               ", y" + std::to_string(c) + "=" + (ec > 0 ? "" : "-") + "i·y" + std::to_string(d));
      for (long s : {1L, 2L, 3L}) {
        std::array<ParamScalar, 4> p{};
        p[b] = ParamScalar(1);
        p[a] = ParamScalar(ea) * i;
        p[d] = ParamScalar(s);
        p[c] = ParamScalar(ec * s) * i;
        record_rank(p);
        if (numeric_rank(at_point(p)) <= 2) coarse = true;
      }
    }
  rep.checks.emplace_back("minors in the curve ideal", minors_in_ideal(params).all());
  std::size_t independent = span_dimension(unitarity_relations(params).nonzero_relations());
  if (tag.name == "coarse") {
    rep.checks.emplace_back("two relations coincide", independent == 5);
    rep.checks.emplace_back("coarse correspondence (rank 2 on the curve)", coarse);
  } else {
    rep.checks.emplace_back("six independent relations", independent == 6);
    rep.checks.emplace_back("no coarse correspondence", !coarse);
  }
  return rep;
}

std::string to_json(const ProjPoint<ParamScalar>& p) {
  nlohmann::ordered_json j;
  j["alphabet"] = std::string(1, p.alphabet);
  auto& c = j["coords"] = nlohmann::ordered_json::array();
  for (const auto& x : p.c) c.push_back(x.to_string());
  return j.dump();
}

}  // namespace ncs
