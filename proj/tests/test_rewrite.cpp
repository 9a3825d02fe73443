#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "ncsphere/rewrite.hpp"
#include "ncsphere/sphere.hpp"

using namespace ncs;

namespace {

FreeElt z(int k) { return FreeElt::gen(static_cast<GenId>(k)); }

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

std::vector<FreeElt> quadratic(const ModuliParams& m) {
  auto p = unitarity_relations(m);
  return p.nonzero_relations();
}

std::vector<FreeElt> with_c(const ModuliParams& m) {
  auto p = unitarity_relations(m);
  auto r = p.nonzero_relations();
  r.push_back(p.central_C);
  return r;
}

std::size_t binom3(int n) { return static_cast<std::size_t>((n + 3) * (n + 2) * (n + 1) / 6); }

}  // namespace

TEST_CASE("monomial order") {
  MonomialOrder o;
  CHECK(o.less(word({3}), word({0, 0})));
  CHECK(o.less(word({0, 1}), word({1, 0})));
  CHECK_FALSE(o.less(word({1, 0}), word({1, 0})));
  MonomialOrder rev({3, 2, 1, 0});
  CHECK(rev.less(word({1, 0}), word({0, 1})));
  CHECK_THROWS_AS(MonomialOrder({0, 0}), DomainError);
  // multiplicative on samples
  std::vector<Word> ws{word({0, 1}), word({1, 0}), word({2, 2}), word({3, 0}), word({0, 3})};
  for (const auto& a : ws)
    for (const auto& b : ws)
      if (o.less(a, b)) {
        CHECK(o.less(word({2}) + a, word({2}) + b));
        CHECK(o.less(a + word({1}), b + word({1})));
      }
}

TEST_CASE("commutative point gives the sorting rules") {
  auto rs = complete<GaussRat>(quadratic(ModuliParams::preset("commutative")), 5);
  REQUIRE(rs.rules().size() == 6);
  for (const auto& r : rs.rules()) {
    REQUIRE(r.lead.size() == 2);
    CHECK(r.lead[0] > r.lead[1]);
    REQUIRE(r.rest.size() == 1);
    CHECK(r.rest.begin()->first == word({r.lead[1], r.lead[0]}));
    CHECK(r.rest.begin()->second == GaussRat(1));
  }
  CHECK(rs.normal_form(z(1) * z(0)) == z(0) * z(1));
  CHECK(rs.normal_form(z(3) * z(2) * z(1) * z(0)) == z(0) * z(1) * z(2) * z(3));
  CHECK(rs.confluence_failures().empty());
  auto counts = rs.normal_word_counts(5);
  for (int n = 0; n <= 5; ++n) CHECK(counts[static_cast<std::size_t>(n)] == binom3(n));
  CHECK_THROWS_AS(rs.normal_form(z(0) * z(0) * z(0) * z(0) * z(0) * z(0)), DomainError);
}

TEST_CASE("defining relations reduce to zero") {
  for (const auto& m : generic_samples()) {
    auto rels = quadratic(m);
    auto rs = complete<GaussRat>(rels, 4);
    for (const auto& r : rels) CHECK(rs.normal_form(r).is_zero());
    CHECK(rs.confluence_failures().empty());
    // reduction is linear
    FreeElt x = z(3) * z(2) * z(1) + z(2) * z(0) * z(3), y = z(1) * z(1) * z(0);
    CHECK(rs.normal_form(x + y) == rs.normal_form(x) + rs.normal_form(y));
    // normal forms of ideal elements vanish
    FreeElt ideal = z(2) * rels[0] * z(1) + rels[3] * z(3) * z(0) - ParamScalar(7) * z(1) * z(1) * rels[5];
    CHECK(rs.normal_form(ideal).is_zero());
  }
}

TEST_CASE("Hilbert dimensions: rewrite count against the elimination oracle") {
  std::vector<ModuliParams> pts{ModuliParams::preset("commutative")};
  auto gs = generic_samples();
  pts.insert(pts.end(), gs.begin(), gs.begin() + 3);
  for (const auto& m : pts) {
    auto rs = complete<GaussRat>(quadratic(m), 5);
    auto counts = rs.normal_word_counts(5);
    for (int n = 0; n <= 5; ++n) {
      CHECK(counts[static_cast<std::size_t>(n)] == binom3(n));
      CHECK(graded_dimension_oracle<GaussRat>(quadratic(m), n) == binom3(n));
    }
    auto rc = complete<GaussRat>(with_c(m), 4);
    auto cc = rc.normal_word_counts(4);
    for (int n = 0; n <= 4; ++n) {
      auto sq = static_cast<std::size_t>((n + 1) * (n + 1));
      CHECK(cc[static_cast<std::size_t>(n)] == sq);
      CHECK(graded_dimension_oracle<GaussRat>(with_c(m), n) == sq);
    }
  }
  CHECK(graded_dimension_rewrite<GaussRat>(quadratic(gs[0]), 2) == 10);
}

TEST_CASE("degenerate three-relations case grows faster") {
  auto rels = quadratic(ModuliParams::preset("three-relations"));
  CHECK(span_dimension(rels) == 3);
  auto rs = complete<GaussRat>(rels, 4);
  auto counts = rs.normal_word_counts(4);
  CHECK(counts[3] > binom3(3));
  CHECK(counts[2] == 13);
  for (int n = 0; n <= 4; ++n) CHECK(counts[static_cast<std::size_t>(n)] == graded_dimension_oracle<GaussRat>(rels, n));
  CHECK(rs.confluence_failures().empty());
}

TEST_CASE("centrality of C and of the Q_k") {
  for (const auto& m : generic_samples()) {
    auto p = unitarity_relations(m);
    auto rs = complete<GaussRat>(p.nonzero_relations(), 4);
    auto cert = is_central(p.central_C, rs);
    CHECK(cert.central);
    CHECK(cert.reduced.size() == 4);
    for (const auto& [g, r] : cert.reduced) CHECK(r.is_zero());

    auto sk = rescale_sklyanin(m);
    for (const auto& q : central_elements_z(sk)) CHECK(is_central(q, rs).central);
    CHECK_FALSE(is_central(z(0), rs).central);
    CHECK_FALSE(is_central(z(0) * z(0), rs).central);

    // the same statements in the rescaled generators
    auto zr = sk.relations_Z();
    auto rz = complete<GaussRat>(std::vector<FreeElt>(zr.begin(), zr.end()), 4);
    for (const auto& q : central_elements(sk)) CHECK(is_central(q, rz).central);
  }
}

TEST_CASE("z0 is central when the last three moduli agree") {
  auto p = unitarity_relations(ModuliParams::preset("plane"));
  auto rs = complete<GaussRat>(p.nonzero_relations(), 4);
  CHECK(is_central(z(0), rs).central);
  CHECK(is_central(p.central_C, rs).central);
  CHECK(rs.confluence_failures().empty());
}

TEST_CASE("dimensions are invariant under twists and under the opposite algebra") {
  auto gs = generic_samples();
  for (std::size_t s = 0; s < 2; ++s) {
    auto m = gs[s];
    auto base = complete<GaussRat>(quadratic(m), 5).normal_word_counts(5);
    auto tw = twist(m, 0b0110, {0, 1, 2, 3});
    CHECK(complete<GaussRat>(quadratic(tw), 5).normal_word_counts(5) == base);
    auto tw2 = twist(m, 0b1001, {3, 1, 2, 0});
    CHECK(complete<GaussRat>(quadratic(tw2), 5).normal_word_counts(5) == base);
    std::vector<FreeElt> rev;
    for (const auto& r : quadratic(m)) rev.push_back(r.reversed());
    CHECK(complete<GaussRat>(rev, 5).normal_word_counts(5) == base);
    for (int n = 0; n <= 4; ++n) CHECK(graded_dimension_oracle<GaussRat>(rev, n) == base[static_cast<std::size_t>(n)]);
  }
  auto th = ModuliParams::preset("three-relations");
  auto b3 = complete<GaussRat>(quadratic(th), 4).normal_word_counts(4);
  std::vector<FreeElt> rev;
  for (const auto& r : quadratic(th)) rev.push_back(r.reversed());
  CHECK(complete<GaussRat>(rev, 4).normal_word_counts(4) == b3);
}

TEST_CASE("other generator precedences give the same counts") {
  auto m = generic_samples()[1];
  auto a = complete<GaussRat>(quadratic(m), 4).normal_word_counts(4);
  auto b = complete<GaussRat>(quadratic(m), 4, MonomialOrder({2, 0, 3, 1})).normal_word_counts(4);
  CHECK(a == b);
}

TEST_CASE("inhomogeneous relation C - 1") {
  auto p = unitarity_relations(generic_samples()[0]);
  auto rels = p.nonzero_relations();
  rels.push_back(p.central_C - FreeElt(1));
  auto rs = complete<GaussRat>(rels, 4);
  CHECK(rs.confluence_failures().empty());
  CHECK(rs.normal_form(p.central_C).is_zero() == false);
  CHECK(rs.normal_form(p.central_C) == FreeElt(1));
  auto counts = rs.normal_word_counts(4);
  // words of length n that are normal form the graded pieces of the
  // associated graded algebra
  for (int n = 0; n <= 4; ++n) CHECK(counts[static_cast<std::size_t>(n)] == static_cast<std::size_t>((n + 1) * (n + 1)));

  auto hom = complete<GaussRat>(p.nonzero_relations(), 4);
  FreeElt x = p.central_C * z(1) * z(2);
  auto f = filtered_normal_form(x, hom, p.central_C);
  CHECK(rs.normal_form(f) == rs.normal_form(z(1) * z(2)));
}

TEST_CASE("symbolic coefficients at low degree") {
  auto p = unitarity_relations(ModuliParams::symbolic());
  auto rs = complete<ParamScalar>(p.nonzero_relations(), 3, MonomialOrder(), Budget::with_millis(20000));
  for (const auto& r : p.nonzero_relations()) CHECK(rs.normal_form(r).is_zero());
  CHECK(rs.normal_word_counts(3)[2] == 10);
  CHECK(is_central(p.central_C, rs).central);
}

TEST_CASE("budget exhaustion is reported") {
  auto p = unitarity_relations(ModuliParams::symbolic());
  Budget tight;
  tight.max_terms(1);
  try {
    complete<ParamScalar>(p.nonzero_relations(), 4, MonomialOrder(), tight);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(e.partial().find("rules") != std::string::npos);
  }
}

TEST_CASE("certificate dump") {
  auto rs = complete<GaussRat>(quadratic(ModuliParams::preset("commutative")), 3);
  auto j = nlohmann::json::parse(rs.to_json(rs.normal_word_counts(3)));
  CHECK(j["degree_bound"] == 3);
  CHECK(j["rules"].size() == 6);
  CHECK(j["rules"][0]["lead"] == "z1.z0");
  CHECK(j["rules"][0]["tail"][0]["word"] == "z0.z1");
  CHECK(j["dimensions"] == nlohmann::json::array({1, 4, 10, 20}));
}
