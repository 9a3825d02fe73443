// One line per acceptance criterion; exact arithmetic throughout.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "ncsphere/chern.hpp"
#include "ncsphere/geomdata.hpp"
#include "ncsphere/report.hpp"
#include "ncsphere/rewrite.hpp"
#include "ncsphere/sphere.hpp"

using namespace ncs;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

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

// The two relation shapes for k = 1 written out by hand, then cycled over (1,2,3).
std::vector<FreeElt> transcribed_relations(const std::array<ParamScalar, 4>& l) {
  const int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  std::vector<FreeElt> out;
  for (auto& t : cyc) {
    int k = t[0], a = t[1], b = t[2];
    auto K = static_cast<std::size_t>(k), A = static_cast<std::size_t>(a), B = static_cast<std::size_t>(b);
    out.push_back(l[0] * (z(k) * z(0)) - l[K] * (z(0) * z(k)) + l[B] * (z(a) * z(b)) - l[A] * (z(b) * z(a)));
    out.push_back(-l[K] * (z(k) * z(0)) + l[0] * (z(0) * z(k)) + l[A] * (z(a) * z(b)) - l[B] * (z(b) * z(a)));
  }
  return out;
}

bool passes(const std::string& id, const ModuliParams& m, int degree = 4) {
  return run_check(id, m, degree, 0).status == CheckStatus::Pass;
}

std::string flag(bool b) { return b ? "yes" : "no"; }

Outcome relation_generation() {
  auto sym = ModuliParams::symbolic();
  auto p = unitarity_relations(sym);
  std::vector<FreeElt> six(p.homogeneous.begin(), p.homogeneous.end());
  FreeElt c;
  for (int mu = 0; mu < 4; ++mu) c += sym.lambda()[static_cast<std::size_t>(mu)] * (z(mu) * z(mu));
  bool rank = span_dimension(six) == 6;
  bool span = same_span(six, transcribed_relations(sym.lambda()));
  bool norm = p.identity_part_uu == c && p.identity_part_uu_star == c;
  return {rank && span && norm, "rank 6: " + flag(rank) + ", row space equal: " + flag(span) +
                                    ", norm part Σλz²: " + flag(norm)};
}

Outcome centrality() {
  int ok = 0;
  auto samples = generic_samples();
  for (const auto& m : samples) {
    bool z_side = central_check(m, 4, Budget()).status == CheckStatus::Pass;
    auto sk = rescale_sklyanin(m);
    auto zr = sk.relations_Z();
    auto rz = complete<GaussRat>(std::vector<FreeElt>(zr.begin(), zr.end()), 4);
    bool Z_side = true;
    for (const auto& q : central_elements(sk)) Z_side = Z_side && is_central(q, rz).central;
    if (z_side && Z_side) ++ok;
  }
  return {ok == static_cast<int>(samples.size()),
          std::to_string(ok) + "/" + std::to_string(samples.size()) + " samples with C and Q1..Q3 central"};
}

Outcome hilbert() {
  const nlohmann::ordered_json dims{1, 4, 10, 20, 35, 56}, dims_c{1, 4, 9, 16, 25};
  std::vector<ModuliParams> points{ModuliParams::preset("commutative")};
  auto samples = generic_samples();
  points.insert(points.end(), samples.begin(), samples.begin() + 3);
  int ok = 0;
  for (const auto& m : points) {
    auto r = run_check("hilbert", m, 5, 0);
    const auto& c = r.certificate;
    if (r.status == CheckStatus::Pass && c["dimensions"] == dims && c["oracle"] == dims &&
        c["dimensions_with_C"] == dims_c && c["oracle_with_C"] == dims_c)
      ++ok;
  }
  return {ok == 4, std::to_string(ok) + "/4 points (commutative + 3 generic) give 1,4,10,20,35,56 and 1,4,9,16,25"};
}

Outcome characteristic_variety() {
  auto det = verify_det_1245(ModuliParams::symbolic());
  int ok = 0;
  for (const auto& m : generic_samples())
    if (minors_in_ideal(m).all()) ++ok;
  auto sym = minors_in_ideal(ModuliParams::symbolic(), Budget::with_millis(60000));
  std::ostringstream d;
  d << "det(rows 1,2,4,5) equals displayed product: " << flag(det.equals_display)
    << ", equals its negative: " << flag(det.equals_negated_display) << "; minors in ideal at " << ok
    << "/5 samples, symbolic: " << flag(sym.all());
  return {det.equals_display && ok == 5 && sym.all(), d.str()};
}

Outcome special_points_check() {
  auto sp = special_points(ModuliParams::symbolic());
  bool fixed = sp.points.size() == 8;
  for (std::size_t i = 0; fixed && i < 8; ++i) fixed = sp.sigma_fixed[i] == (i < 4);
  bool ok = sp.satisfy_special_equations && sp.on_both_quadrics && fixed;
  return {ok, "Σy²=0 and Σλ²y²=0: " + flag(sp.satisfy_special_equations && sp.on_both_quadrics) +
                  ", σ fixes exactly the four coordinate-type points: " + flag(fixed)};
}

Outcome sigma_structure() {
  auto samples = generic_samples();
  int ok = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (passes("sigma", samples[i])) ++ok;
  return {ok == 3, std::to_string(ok) + "/3 samples: σ preserves the curve, σ ∝ I∘I₀, j∘σ = σ⁻¹∘j"};
}

Outcome elliptic_identification() {
  auto sym = curve_identification(ModuliParams::symbolic());
  bool symbolic = sym.coefficient_sums_vanish && sym.b_ratio_matches_a && sym.scaled_quadrics_match;
  auto samples = generic_samples();
  int ok = 0;
  for (std::size_t i = 0; i < 2; ++i)
    if (passes("curveid", samples[i])) ++ok;
  return {symbolic && ok == 2, "symbolic B_k sums and B1:B2 = a1:a2: " + flag(symbolic) + ", corrected M at " +
                                   std::to_string(ok) + "/2 samples"};
}

Outcome central_quadratic_form() {
  auto samples = generic_samples();
  int ok = 0;
  for (std::size_t i = 0; i < 2; ++i)
    if (passes("centralform", samples[i])) ++ok;
  return {ok == 2, std::to_string(ok) + "/2 samples, k = 1,2,3, six relations each"};
}

Outcome chern() {
  auto pu = pauli_unitary();
  TensorElt c = ch1(pu.u, pu.ustar);
  bool expansion = c == expected_ch1();
  bool vanishes = impose_adjoint(c, ModuliParams::symbolic().lambda()).is_zero();
  auto rig = two_sphere_rigidity();
  bool fuzzy = true;
  for (int n = 2; n <= 3; ++n) {
    auto f = fuzzy_casimir(n);
    fuzzy = fuzzy && f.casimir_matches && f.commutators_match;
  }
  bool ok = expansion && vanishes && rig.spans_match && rig.trace_free && fuzzy;
  return {ok, "ch1 expansion: " + flag(expansion) + ", z*=λz kills it: " + flag(vanishes) +
                  ", two-sphere relations: " + flag(rig.spans_match && rig.trace_free) +
                  ", fuzzy n=2,3: " + flag(fuzzy)};
}

Outcome degenerate_taxonomy() {
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"commutative", 6}, {"three-relations", 3}, {"coarse", 5}, {"plane", 6}};
  int ok = 0;
  std::ostringstream d;
  for (const auto& [name, count] : cases) {
    auto m = ModuliParams::preset(name);
    auto r = run_check("classify", m, 4, 0);
    bool good = r.status == CheckStatus::Pass && r.certificate["case"] == name &&
                r.certificate["relation_count"] == count;
    if (name == "three-relations") good = good && r.certificate["checks"].value("rank 2 on Σy²=0", false);
    if (good) ++ok;
    d << name << ":" << (good ? "ok" : "bad") << " ";
  }
  return {ok == 4, d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    long limit_ms;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "relation generation", 1000, relation_generation},
      {2, "centrality", 30000, centrality},
      {3, "Hilbert dimensions", 120000, hilbert},
      {4, "characteristic variety", 120000, characteristic_variety},
      {5, "special points", 10000, special_points_check},
      {6, "sigma structure", 60000, sigma_structure},
      {7, "elliptic identification", 30000, elliptic_identification},
      {8, "central quadratic form", 120000, central_quadratic_form},
      {9, "Chern characters", 10000, chern},
      {10, "degenerate taxonomy", 30000, degenerate_taxonomy},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    long ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    bool in_time = ms < c.limit_ms;
    bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::cout << "criterion " << c.number << " [" << c.name << "]: " << (pass ? "PASS" : "FAIL") << " (" << ms
              << " ms, limit " << c.limit_ms << " ms" << (in_time ? "" : ", over limit") << ") " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria pass"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
