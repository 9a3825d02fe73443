#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "ncsphere/geomdata.hpp"
#include "ncsphere/sphere.hpp"

using namespace ncs;

namespace {

UnitCirclePoint pyth(long p, long q) { return UnitCirclePoint::from_pythagorean(p, q); }

std::vector<ModuliParams> generic_samples() {
  return {
      ModuliParams::preset("generic-sample"),
      ModuliParams::numeric({UnitCirclePoint(), pyth(5, 2), pyth(7, 4), pyth(6, 1)}),
      ModuliParams::numeric({UnitCirclePoint(), pyth(5, 4), pyth(9, 2), pyth(8, 3)}),
      ModuliParams::numeric({UnitCirclePoint(), pyth(7, 2), pyth(3, 1), pyth(4, 3)}),
      ModuliParams::numeric({UnitCirclePoint(), pyth(9, 4), pyth(11, 6), pyth(10, 3)}),
  };
}

std::array<ParamScalar, 3> a_of(const ModuliParams& m) {
  const auto& l = m.lambda();
  return {(l[1] + l[0]) * (l[2] + l[3]), (l[2] + l[0]) * (l[3] + l[1]), (l[3] + l[0]) * (l[1] + l[2])};
}

// Oracle: read each homogeneous relation Σ c_ab z_a z_b as the bilinear form
// Σ c_ab y_a y'_b; the row is the coefficient vector of y'.
Rows6<CommPoly> matrix_from_relations(const ModuliParams& m) {
  auto p = unitarity_relations(m);
  Rows6<CommPoly> out;
  for (std::size_t r = 0; r < 6; ++r)
    for (const auto& [w, c] : p.homogeneous[r].terms()) {
      REQUIRE(w.size() == 2);
      out[r][w[1]] += coord(w[0]) * c;
    }
  return out;
}

std::vector<CommPoly> images_of(const std::array<CommPoly, 4>& f) { return {f.begin(), f.end()}; }

GroebnerBasis scaled_gb(const ModuliParams& m) {
  auto q = scaled_quadrics(m);
  return groebner_basis({q[0], q[1]}, MonoOrder::DegRevLex);
}

}  // namespace

TEST_CASE("characteristic matrix matches the relations read as bilinear forms") {
  for (const auto& m : generic_samples()) CHECK(char_matrix(m) == matrix_from_relations(m));
  auto sym = ModuliParams::symbolic();
  CHECK(char_matrix(sym) == matrix_from_relations(sym));
  for (const auto& name : ModuliParams::preset_names()) {
    auto m = ModuliParams::preset(name);
    CHECK(char_matrix(m) == matrix_from_relations(m));
  }
}

TEST_CASE("kernel at the coordinate points") {
  auto m = ModuliParams::preset("generic-sample");
  for (std::size_t mu = 0; mu < 4; ++mu) {
    std::array<ParamScalar, 4> p{ParamScalar(0), ParamScalar(0), ParamScalar(0), ParamScalar(0)};
    p[mu] = ParamScalar(1);
    auto v = kernel_rank3(char_matrix_at<ParamScalar>(m.lambda(), p));
    REQUIRE(v.has_value());
    CHECK(projectively_equal<ParamScalar>(*v, p));
  }
}

TEST_CASE("determinant of rows 1,2,4,5") {
  // The displayed product carries the opposite overall sign.
  auto sym = verify_det_1245(ModuliParams::symbolic());
  CHECK_FALSE(sym.equals_display);
  CHECK(sym.equals_negated_display);
  auto ones = ModuliParams::preset("commutative");
  CHECK(verify_det_1245(ones).equals_display);
  CHECK(det_1245_factorization(ones).is_zero());

  std::mt19937 rng(20261018);
  std::uniform_int_distribution<long> small(1, 12), coord_d(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    std::array<UnitCirclePoint, 4> v;
    for (auto& u : v) {
      long p = small(rng), q = small(rng);
      while (q == p) q = small(rng);
      u = pyth(p, q);
    }
    auto m = ModuliParams::numeric(v);
    std::array<ParamScalar, 4> y;
    for (auto& x : y) x = ParamScalar(GaussRat(Rat(coord_d(rng)), Rat(coord_d(rng))));
    ParamScalar lhs = det4_rows(char_matrix_at<ParamScalar>(m.lambda(), y), {0, 1, 3, 4});
    ParamScalar rhs = det_1245_factorization(m).evaluate({y.begin(), y.end()});
    CHECK(lhs == -rhs);
  }
}

TEST_CASE("all fifteen minors lie in the curve ideal") {
  CHECK(row_quadruples().size() == 15);
  for (const auto& m : generic_samples()) {
    auto rep = minors_in_ideal(m);
    CHECK_MESSAGE(rep.all(), rep.first_failure());
  }
  CHECK(minors_in_ideal(ModuliParams::preset("commutative")).all());

  // A polynomial off the curve is not in the ideal.
  auto gb = curve_groebner(ModuliParams::preset("generic-sample"));
  CHECK_FALSE(gb.contains(coord(0) * coord(0)));
}

TEST_CASE("minors in the curve ideal, symbolic") {
  auto rep = minors_in_ideal(ModuliParams::symbolic(), Budget::with_millis(60000));
  CHECK_MESSAGE(rep.all(), rep.first_failure());
}

TEST_CASE("common quadratic factors of the row triples") {
  for (const auto& m : generic_samples()) {
    auto f = minors_common_factors(m);
    CHECK(f.upper_divisible);
    CHECK(f.lower_divisible);
  }
  auto f = minors_common_factors(ModuliParams::symbolic());
  CHECK(f.upper_divisible);
  CHECK(f.lower_divisible);
}

TEST_CASE("special points, symbolic") {
  auto sp = special_points(ModuliParams::symbolic());
  REQUIRE(sp.points.size() == 8);
  CHECK(sp.on_both_quadrics);
  CHECK(sp.satisfy_special_equations);
  for (std::size_t i = 0; i < 8; ++i) {
    CAPTURE(i);
    CHECK(sp.in_E[i]);
    CHECK(sp.sigma_fixed[i] == (i < 4));
  }
}

TEST_CASE("special points at numeric moduli") {
  for (const auto& m : generic_samples()) {
    auto sp = special_points(m);
    CHECK(sp.on_both_quadrics);
    CHECK(sp.satisfy_special_equations);
    for (std::size_t i = 0; i < 8; ++i) CHECK(sp.sigma_fixed[i] == (i < 4));
  }
  try {
    special_points(ModuliParams::preset("two-conics"));
    FAIL("expected SpecialCaseError");
  } catch (const SpecialCaseError& e) {
    CHECK(std::string(e.factor()) == "λ1²-λ2²");
  }
}

TEST_CASE("sigma in scaled coordinates") {
  auto s = sigma_scaled();
  SUBCASE("degree-3 homogeneity") {
    auto Z = coords();
    std::array<CommPoly, 4> twice;
    for (std::size_t mu = 0; mu < 4; ++mu) twice[mu] = Z[mu] * ParamScalar(2);
    for (std::size_t mu = 0; mu < 4; ++mu) CHECK(s[mu].compose(images_of(twice)) == s[mu] * ParamScalar(8));
  }
  SUBCASE("coordinate points are fixed") {
    for (std::size_t mu = 0; mu < 4; ++mu) {
      ProjPoint<ParamScalar> p{{ParamScalar(0), ParamScalar(0), ParamScalar(0), ParamScalar(0)}, 'Y'};
      p.c[mu] = ParamScalar(1);
      CHECK(projectively_equal<ParamScalar>(sigma_apply(p).c, p.c));
    }
  }
  SUBCASE("independent of the moduli, equal to I∘I₀") {
    // σ and I∘I₀ agree identically up to a constant factor.
    auto prod = involution_product();
    CHECK(projectively_equal<CommPoly>(s, prod));
    for (std::size_t mu = 0; mu < 4; ++mu) CHECK(prod[mu] * ParamScalar(4) == s[mu]);
  }
  SUBCASE("rank drop raises") {
    // M·I₀Y = (1,0,0,0): every product of three λ-coordinates vanishes.
    ProjPoint<ParamScalar> p{{ParamScalar(-1), ParamScalar(1), ParamScalar(1), ParamScalar(1)}, 'Y'};
    CHECK_THROWS_AS(sigma_apply(p), SpecialCaseError);
  }
}

TEST_CASE("sigma preserves the curve and is inverted by I₀σI₀") {
  auto s = sigma_scaled();
  auto si = sigma_inverse_scaled();
  for (std::size_t idx = 0; idx < 3; ++idx) {
    auto m = generic_samples()[idx];
    auto gb = scaled_gb(m);
    auto zero = [&](const CommPoly& x) { return gb.contains(x); };
    for (const auto& q : scaled_quadrics(m)) CHECK(zero(q.compose(images_of(s))));
    std::array<CommPoly, 4> round;
    for (std::size_t mu = 0; mu < 4; ++mu) round[mu] = si[mu].compose(images_of(s));
    CHECK(projectively_equal<CommPoly>(round, coords(), zero));
  }
}

TEST_CASE("sigma in y-coordinates") {
  for (std::size_t idx = 0; idx < 3; ++idx) {
    auto m = generic_samples()[idx];
    auto gb = curve_groebner(m);
    auto zero = [&](const CommPoly& x) { return gb.contains(x); };
    auto s = sigma_y(m);
    auto M = char_matrix(m);
    for (const auto& row : M) {
      CommPoly r = row[0] * s[0] + row[1] * s[1] + row[2] * s[2] + row[3] * s[3];
      CHECK(zero(r));
    }
    for (const auto& q : curve_quadrics(m)) CHECK(zero(q.compose(images_of(s))));
    // The triple 1,2,3 vanishes on the curve, so it cannot define σ.
    auto upper = kernel_of_rows<CommPoly>({M[0], M[1], M[2]});
    for (const auto& x : upper) CHECK(zero(x));
  }
}

TEST_CASE("reality map") {
  for (std::size_t idx = 0; idx < 3; ++idx) {
    auto rep = reality_checks(generic_samples()[idx]);
    CHECK(rep.involutive);
    CHECK(rep.preserves_curve);
    CHECK(rep.intertwines_sigma);
  }
  auto m = ModuliParams::preset("generic-sample");
  ProjPoint<ParamScalar> p{{ParamScalar(1), ParamScalar::i(), ParamScalar(2), ParamScalar(0)}, 'y'};
  auto q = reality_j(m, p);
  CHECK(q.c[1] == m[1].star() * -ParamScalar::i());
}

TEST_CASE("elliptic identification") {
  for (std::size_t idx = 0; idx < 2; ++idx) {
    auto rep = curve_identification(generic_samples()[idx]);
    CHECK(rep.coefficient_sums_vanish);
    CHECK(rep.b_ratio_matches_a);
    CHECK(rep.scaled_quadrics_match);
    CHECK(rep.m_involutive);
    CHECK(rep.m_maps_b_to_a);
    CHECK(rep.n_rows_display);
    CHECK_FALSE(rep.printed_m_involutive);
    CHECK_FALSE(rep.printed_m_display);
    // Unique up to the overall sign, which the display cannot see.
    REQUIRE(rep.sign_solutions.size() == 2);
    Matrix<GaussRat> neg = involutive_m();
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) neg(r, c) = -neg(r, c);
    CHECK(((rep.sign_solutions[0] == involutive_m() && rep.sign_solutions[1] == neg) ||
           (rep.sign_solutions[1] == involutive_m() && rep.sign_solutions[0] == neg)));
  }
}

TEST_CASE("elliptic identification, symbolic") {
  auto rep = curve_identification(ModuliParams::symbolic());
  CHECK(rep.coefficient_sums_vanish);
  CHECK(rep.b_ratio_matches_a);
  CHECK(rep.scaled_quadrics_match);
}

TEST_CASE("square-substitution normal form") {
  auto m = ModuliParams::preset("generic-sample");
  auto a = a_of(m);
  auto Y = coords();
  CommPoly t = CommPoly::var(kCurveParam);
  CommPoly b1 = Y[0] * Y[0] - Y[1] * Y[1] - t * a[0];
  CHECK(curve_normal_form(b1, a, kFirstPoint, kCurveParam).is_zero());
  CommPoly b2b3 = (Y[0] * Y[0] - Y[2] * Y[2]) * ParamScalar(a[2]) - (Y[0] * Y[0] - Y[3] * Y[3]) * ParamScalar(a[1]);
  CHECK(curve_normal_form(b2b3, a, kFirstPoint, kCurveParam).is_zero());
  CHECK_FALSE(curve_normal_form(Y[1] * Y[2], a, kFirstPoint, kCurveParam).is_zero());

  // Agrees with Gröbner reduction of the scaled quadrics on sample polynomials.
  auto gb = scaled_gb(m);
  auto sq = scaled_quadrics(m);
  std::vector<CommPoly> probes{sq[0] * Y[1], sq[1] * Y[2] * Y[3] + sq[0] * Y[0] * Y[0], Y[1] * Y[1] * Y[1],
                               Y[0] * Y[1] + sq[1], sq[0] * sq[1]};
  for (const auto& p : probes)
    CHECK(curve_normal_form(p, a, kFirstPoint, kCurveParam).is_zero() == gb.contains(p));
}

TEST_CASE("central quadratic forms") {
  auto m = ModuliParams::preset("generic-sample");
  auto a = a_of(m);
  for (int k = 1; k <= 3; ++k) {
    auto f = central_form(a, k);
    CHECK(f.symmetric());
    ParamScalar trace(0);
    for (std::size_t i = 0; i < 4; ++i) trace += f.q[i][i];
    const auto& t = kCyclic[static_cast<std::size_t>(k - 1)];
    CHECK(trace == ParamScalar(2) * (a[static_cast<std::size_t>(t[2] - 1)] - a[static_cast<std::size_t>(t[1] - 1)]));
  }
  CHECK_THROWS_AS(central_form(a, 0), DomainError);

  std::array<std::array<ParamScalar, 4>, 4> zero{};
  auto Z = coords(kFirstPoint), Zp = coords(kSecondPoint);
  CHECK(CentralQuadraticForm{zero}.evaluate(Z, Zp).is_zero());
}

TEST_CASE("central form identity at generic samples") {
  for (std::size_t idx = 0; idx < 2; ++idx) {
    auto m = generic_samples()[idx];
    for (int k = 1; k <= 3; ++k) {
      CAPTURE(idx);
      CAPTURE(k);
      auto rep = central_form_check(m, k);
      for (std::size_t i = 0; i < 6; ++i) {
        CAPTURE(i);
        CHECK(rep.sigma_annihilates[i]);
        CHECK(rep.identity_holds[i]);
      }
      CHECK(rep.q_on_sigma_graph);
      CHECK(rep.strategies_agree);
      MESSAGE("special points: " << rep.at_special_points[0] << rep.at_special_points[1]
                                 << rep.at_special_points[2] << rep.at_special_points[3]);
    }
  }
}

TEST_CASE("degenerate varieties") {
  auto find = [](const VarietyReport& r, const std::string& name) {
    for (const auto& [n, ok] : r.checks)
      if (n == name) return ok;
    FAIL("missing check " << name);
    return false;
  };
  auto all_checks = [](const VarietyReport& r) {
    for (const auto& [n, ok] : r.checks) {
      CAPTURE(n);
      CHECK(ok);
    }
  };

  auto c = classify_variety(ModuliParams::preset("commutative"));
  CHECK(c.case_name == "commutative");
  CHECK(c.components == std::vector<std::string>{"full projective space"});
  all_checks(c);

  auto t = classify_variety(ModuliParams::preset("three-relations"));
  CHECK(find(t, "three independent rows"));
  CHECK(find(t, "rank 2 on Σy²=0"));
  all_checks(t);

  auto two = classify_variety(ModuliParams::preset("two-conics"));
  CHECK(two.components[2] == "line P1P2");
  all_checks(two);

  auto pl = classify_variety(ModuliParams::preset("plane"));
  CHECK(pl.components[0] == "plane y0=0 through P1 P2 P3");
  all_checks(pl);

  auto g = classify_variety(ModuliParams::preset("generic-sample"));
  CHECK(g.components.size() == 5);
  all_checks(g);

  for (const std::string name : {"coarse", "paired"}) {
    auto r = classify_variety(ModuliParams::preset(name));
    CAPTURE(name);
    CHECK(r.components.size() == 4);
    CHECK(find(r, "minors in the curve ideal"));
    all_checks(r);
    if (name == "coarse") {
      CHECK(find(r, "two relations coincide"));
      CHECK(find(r, "coarse correspondence (rank 2 on the curve)"));
    } else {
      CHECK(find(r, "no coarse correspondence"));
    }
    CHECK_FALSE(r.rank_profile.empty());
    std::string profile;
    for (const auto& [p, rk] : r.rank_profile) profile += p + ":" + std::to_string(rk) + " ";
    MESSAGE(profile);
  }
}

TEST_CASE("point serialization") {
  ProjPoint<ParamScalar> p{{ParamScalar(1), ParamScalar::i(), ParamScalar(0), ParamScalar(GaussRat(Rat(1, 2)))}, 'y'};
  auto j = nlohmann::json::parse(to_json(p));
  CHECK(j["alphabet"] == "y");
  CHECK(j["coords"].size() == 4);
}
