#include "ncsphere/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include <toml.hpp>

#include "ncsphere/chern.hpp"
#include "ncsphere/errors.hpp"
#include "ncsphere/geomdata.hpp"
#include "ncsphere/rewrite.hpp"

namespace ncs {

using ojson = nlohmann::ordered_json;

namespace {

struct CheckSpec {
  const char* id;
  const char* anchor;
};

const std::vector<CheckSpec>& check_specs() {
  static const std::vector<CheckSpec> specs{
      {"central", "C and Q1..Q3 commute with every generator modulo the quadratic relations"},
      {"hilbert", "graded dimensions by rewriting and by linear algebra"},
      {"charvariety", "4x4 minors of the characteristic matrix vanish on the quadric intersection"},
      {"sigma", "special points, sigma = I o I0, and j o sigma = sigma^-1 o j on the curve"},
      {"curveid", "scaled quadrics as combinations of B_k, B_k(M lambda) = a_k, N(Z)M rows"},
      {"centralform", "central quadratic form identity on the doubled curve"},
      {"chern", "ch1 of the Pauli unitary, its vanishing for z* = lambda z, ch0 and fuzzy Casimirs"},
      {"classify", "degenerate-case classification and fundamental-domain representative"},
  };
  return specs;
}

std::string anchor_of(const std::string& id) {
  for (const auto& s : check_specs())
    if (id == s.id) return s.anchor;
  return "";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return out;
}

long parse_long(const std::string& s, const std::string& where) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw DomainError(where + ": expected an integer, got '" + s + "'");
  return v;
}

ojson bools(const std::vector<bool>& v) {
  ojson a = ojson::array();
  for (bool b : v) a.push_back(b);
  return a;
}

template <std::size_t N>
ojson bools(const std::array<bool, N>& v) {
  return bools(std::vector<bool>(v.begin(), v.end()));
}

ojson strings(const std::vector<FreeElt>& v, const Alphabet& alphabet = Alphabet()) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(x.to_string(alphabet));
  return a;
}

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

bool is_generic(const ModuliParams& params) { return classify_case(params).name == "generic"; }

CheckResult hilbert_check(const ModuliParams& params, int degree, const Budget& budget) {
  CheckResult r;
  auto p = unitarity_relations(params);
  auto rels = p.nonzero_relations();
  auto with_c = rels;
  with_c.push_back(p.central_C);
  std::string name = classify_case(params).name;
  bool expect = name == "generic" || name == "commutative";

  auto rs = complete<GaussRat>(rels, degree, MonomialOrder(), budget);
  auto counts = rs.normal_word_counts(degree);
  int c_degree = std::min(degree, 4);
  auto rc = complete<GaussRat>(with_c, c_degree, MonomialOrder(), budget);
  auto c_counts = rc.normal_word_counts(c_degree);

  ojson dims = ojson::array(), oracle = ojson::array(), dims_c = ojson::array(), oracle_c = ojson::array();
  bool agree = true, expected = true;
  for (int n = 0; n <= degree; ++n) {
    budget.check("hilbert");
    std::size_t o = n < 2 ? static_cast<std::size_t>(1) << (2 * n) : graded_dimension_oracle<GaussRat>(rels, n);
    dims.push_back(counts[static_cast<std::size_t>(n)]);
    oracle.push_back(o);
    agree = agree && o == counts[static_cast<std::size_t>(n)];
    auto binom = static_cast<std::size_t>((n + 3) * (n + 2) * (n + 1) / 6);
    if (expect && counts[static_cast<std::size_t>(n)] != binom) expected = false;
  }
  for (int n = 0; n <= c_degree; ++n) {
    budget.check("hilbert");
    std::size_t o = n < 2 ? static_cast<std::size_t>(1) << (2 * n) : graded_dimension_oracle<GaussRat>(with_c, n);
    dims_c.push_back(c_counts[static_cast<std::size_t>(n)]);
    oracle_c.push_back(o);
    agree = agree && o == c_counts[static_cast<std::size_t>(n)];
    if (expect && c_counts[static_cast<std::size_t>(n)] != static_cast<std::size_t>((n + 1) * (n + 1)))
      expected = false;
  }
  r.certificate["dimensions"] = dims;
  r.certificate["oracle"] = oracle;
  r.certificate["dimensions_with_C"] = dims_c;
  r.certificate["oracle_with_C"] = oracle_c;
  // Filtered reading with C = 1, reported only.
  auto inhom = rels;
  inhom.push_back(p.central_C - FreeElt(1));
  budget.check("hilbert");
  auto rf = complete<GaussRat>(inhom, c_degree, MonomialOrder(), budget);
  r.certificate["filtered_C_equals_1"] = rf.normal_word_counts(c_degree);
  r.certificate["expected_formula"] = expect ? "C(n+3,3) and (n+1)^2" : "none for this case";
  r.certificate["rules"] = rs.rules().size();
  r.status = pass_if(agree && expected);
  return r;
}

CheckResult charvariety_check(const ModuliParams& params, const Budget& budget) {
  CheckResult r;
  auto det = verify_det_1245(params);
  auto minors = minors_in_ideal(params, budget);
  r.certificate["det_1245_equals_display"] = det.equals_display;
  r.certificate["det_1245_equals_negated_display"] = det.equals_negated_display;
  r.certificate["minors_in_ideal"] = bools(minors.in_ideal);
  if (!minors.all()) r.certificate["first_failure"] = minors.first_failure();
  r.status = pass_if(minors.all() && (det.equals_display || det.equals_negated_display));
  return r;
}

CheckResult sigma_check(const ModuliParams& params, const Budget& budget) {
  CheckResult r;
  auto sp = special_points(params);
  std::vector<bool> fixed_ok;
  for (std::size_t i = 0; i < sp.sigma_fixed.size(); ++i) fixed_ok.push_back(sp.sigma_fixed[i] == (i < 4));

  auto q = scaled_quadrics(params);
  auto gb = groebner_basis({q[0], q[1]}, MonoOrder::DegRevLex, budget);
  auto zero = [&](const CommPoly& x) { return gb.contains(x); };
  auto s = sigma_scaled();
  std::vector<CommPoly> images(s.begin(), s.end());
  bool preserves = zero(q[0].compose(images)) && zero(q[1].compose(images));
  bool product = projectively_equal<CommPoly>(s, involution_product(), zero);
  budget.check("sigma");
  auto real = reality_checks(params, budget);

  bool fixed = std::all_of(fixed_ok.begin(), fixed_ok.end(), [](bool b) { return b; });
  r.certificate["special_points_on_quadrics"] = sp.on_both_quadrics;
  r.certificate["special_points_in_E"] = bools(sp.in_E);
  r.certificate["sigma_fixed"] = bools(sp.sigma_fixed);
  r.certificate["sigma_preserves_curve"] = preserves;
  r.certificate["sigma_equals_I_I0"] = product;
  r.certificate["j_involutive"] = real.involutive;
  r.certificate["j_preserves_curve"] = real.preserves_curve;
  r.certificate["j_intertwines_sigma"] = real.intertwines_sigma;
  r.status = pass_if(sp.on_both_quadrics && sp.satisfy_special_equations && fixed && preserves && product &&
                     real.involutive && real.preserves_curve && real.intertwines_sigma);
  return r;
}

CheckResult curveid_check(const ModuliParams& params) {
  CheckResult r;
  auto c = curve_identification(params);
  r.certificate["coefficient_sums_vanish"] = c.coefficient_sums_vanish;
  r.certificate["b_ratio_matches_a"] = c.b_ratio_matches_a;
  r.certificate["scaled_quadrics_match"] = c.scaled_quadrics_match;
  r.certificate["m_involutive"] = c.m_involutive;
  r.certificate["m_maps_b_to_a"] = c.m_maps_b_to_a;
  r.certificate["n_rows_display"] = c.n_rows_display;
  r.certificate["printed_m_involutive"] = c.printed_m_involutive;
  r.certificate["printed_m_display"] = c.printed_m_display;
  r.certificate["sign_solutions"] = c.sign_solutions.size();
  r.status = pass_if(c.coefficient_sums_vanish && c.b_ratio_matches_a && c.scaled_quadrics_match && c.m_involutive &&
                     c.m_maps_b_to_a && c.n_rows_display && c.sign_solutions.size() == 2);
  return r;
}

CheckResult centralform_check(const ModuliParams& params, const Budget& budget) {
  CheckResult r;
  bool ok = true;
  ojson forms = ojson::array();
  for (int k = 1; k <= 3; ++k) {
    auto c = central_form_check(params, k, budget);
    forms.push_back({{"k", k},
                     {"sigma_annihilates", bools(c.sigma_annihilates)},
                     {"identity_holds", bools(c.identity_holds)},
                     {"q_on_sigma_graph", c.q_on_sigma_graph},
                     {"strategies_agree", c.strategies_agree},
                     {"at_special_points", bools(c.at_special_points)}});
    ok = ok && c.all();
  }
  r.certificate["forms"] = forms;
  r.status = pass_if(ok);
  return r;
}

CheckResult chern_check(const ModuliParams& params) {
  CheckResult r;
  auto pu = pauli_unitary();
  TensorElt c = ch1(pu.u, pu.ustar);
  bool matches = c == expected_ch1();
  bool vanishes = impose_adjoint(c, params.lambda()).is_zero();
  auto rig = two_sphere_rigidity();
  bool fuzzy = true;
  for (int n = 1; n <= 3; ++n) {
    auto f = fuzzy_casimir(n);
    fuzzy = fuzzy && f.casimir_matches && f.commutators_match;
  }
  r.certificate["ch1"] = c.to_string(star_alphabet());
  r.certificate["ch1_matches_expansion"] = matches;
  r.certificate["ch1_vanishes_with_adjoint"] = vanishes;
  r.certificate["two_sphere_relations_span"] = rig.spans_match;
  r.certificate["fuzzy_casimir_n_1_2_3"] = fuzzy;
  r.status = pass_if(matches && vanishes && rig.spans_match && rig.trace_free && fuzzy);
  return r;
}

CheckResult classify_check(const ModuliParams& params) {
  CheckResult r;
  auto v = classify_variety(params);
  bool ok = true;
  ojson checks = ojson::object();
  for (const auto& [name, b] : v.checks) {
    checks[name] = b;
    ok = ok && b;
  }
  ojson ranks = ojson::array();
  for (const auto& [pt, rk] : v.rank_profile) ranks.push_back({{"point", pt}, {"rank", rk}});
  r.certificate["case"] = v.case_name;
  r.certificate["components"] = v.components;
  r.certificate["checks"] = checks;
  r.certificate["rank_profile"] = ranks;
  r.certificate["relation_count"] = span_dimension(unitarity_relations(params).nonzero_relations());
  r.status = pass_if(ok);
  return r;
}

ojson case_json(const CaseTag& t) {
  return {{"name", t.name}, {"partition", t.partition}, {"sign_relations", t.sign_relations}};
}

ojson header(const RunConfig& config, const ModuliParams& params, const char* command) {
  ojson j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = "ncsphere";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["lambda"] = ojson::parse(params.to_json());
  std::string source = config.preset          ? "preset:" + *config.preset
                       : config.pythagorean   ? "pythagorean:" + *config.pythagorean
                       : config.lambda_file   ? "file:" + *config.lambda_file
                                              : "json";
  j["lambda_source"] = source;
  j["case"] = case_json(classify_case(params));
  return j;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& s : check_specs()) v.emplace_back(s.id);
    return v;
  }();
  return ids;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::SkippedBudget:
      return "skipped(budget)";
    case CheckStatus::SkippedSpecial:
      return "skipped(special-case)";
  }
  return "fail";
}

ModuliParams parse_pythagorean(const std::string& list) {
  auto parts = split(list, ',');
  if (parts.size() != 4) throw DomainError("--pythagorean needs four entries, got " + std::to_string(parts.size()));
  std::array<UnitCirclePoint, 4> v;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    std::string where = "pythagorean entry " + std::to_string(mu);
    const auto& e = parts[mu];
    if (e == "1") {
      v[mu] = UnitCirclePoint();
    } else if (e == "-1") {
      v[mu] = -UnitCirclePoint();
    } else {
      auto pq = split(e, ':');
      if (pq.size() != 2) throw DomainError(where + ": expected p:q, got '" + e + "'");
      v[mu] = UnitCirclePoint::from_pythagorean(parse_long(pq[0], where), parse_long(pq[1], where));
    }
  }
  return ModuliParams::numeric(v);
}

void RunConfig::merge_toml(const std::string& path) {
  toml::table t;
  try {
    t = toml::parse_file(path);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << "config " << path << ":" << e.source().begin.line << ":" << e.source().begin.column << ": "
        << e.description();
    throw UsageError(msg.str());
  }
  auto str = [&](const char* key) -> std::optional<std::string> {
    if (auto v = t[key].value<std::string>()) return *v;
    if (t.contains(key)) throw UsageError(std::string("config key '") + key + "' must be a string");
    return std::nullopt;
  };
  auto integer = [&](const char* key) -> std::optional<long> {
    if (auto v = t[key].value<int64_t>()) return static_cast<long>(*v);
    if (t.contains(key)) throw UsageError(std::string("config key '") + key + "' must be an integer");
    return std::nullopt;
  };
  for (const auto& [k, v] : t) {
    static const std::vector<std::string> known{"lambda", "lambda_file", "pythagorean", "preset", "degree",
                                                "checks", "budget_ms", "workers", "out"};
    if (std::find(known.begin(), known.end(), std::string(k.str())) == known.end())
      throw UsageError("unknown config key '" + std::string(k.str()) + "'");
    (void)v;
  }
  if (auto v = str("lambda")) lambda_json = v;
  if (auto v = str("lambda_file")) lambda_file = v;
  if (auto v = str("pythagorean")) pythagorean = v;
  if (auto v = str("preset")) preset = v;
  if (auto v = integer("degree")) degree = static_cast<int>(*v);
  if (auto v = integer("budget_ms")) budget_ms = *v;
  if (auto v = integer("workers")) workers = static_cast<int>(*v);
  if (auto v = str("out")) out = v;
  if (const auto* arr = t["checks"].as_array()) {
    checks.clear();
    for (const auto& e : *arr) {
      auto s = e.value<std::string>();
      if (!s) throw UsageError("config key 'checks' must be an array of strings");
      checks.push_back(*s);
    }
  } else if (auto v = str("checks")) {
    checks = split(*v, ',');
  }
}

void RunConfig::validate() const {
  int sources = (lambda_json ? 1 : 0) + (lambda_file ? 1 : 0) + (pythagorean ? 1 : 0) + (preset ? 1 : 0);
  if (sources != 1)
    throw UsageError("exactly one of --lambda, --lambda-file, --pythagorean, --preset is required (got " +
                     std::to_string(sources) + ")");
  if (degree < 2) throw UsageError("--degree must be at least 2");
  if (workers < 1) throw UsageError("--workers must be at least 1");
  if (budget_ms < 0) throw UsageError("--budget-ms must be non-negative");
  for (const auto& c : checks)
    if (std::find(check_ids().begin(), check_ids().end(), c) == check_ids().end())
      throw UsageError("unknown check '" + c + "'");
}

ModuliParams RunConfig::moduli() const {
  try {
    if (preset) return ModuliParams::preset(*preset);
    if (pythagorean) return parse_pythagorean(*pythagorean);
    if (lambda_file) {
      std::ifstream in(*lambda_file);
      if (!in) throw UsageError("cannot read lambda file " + *lambda_file);
      std::ostringstream buf;
      buf << in.rdbuf();
      return ModuliParams::from_json(buf.str());
    }
    if (lambda_json) return ModuliParams::from_json(*lambda_json);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  throw UsageError("no lambda source given");
}

std::vector<std::string> RunConfig::selected_checks() const {
  if (checks.empty()) return check_ids();
  std::vector<std::string> out;
  for (const auto& id : check_ids())
    if (std::find(checks.begin(), checks.end(), id) != checks.end()) out.push_back(id);
  return out;
}

CheckResult central_check(const ModuliParams& params, int degree, const Budget& budget,
                          const std::vector<std::pair<std::string, FreeElt>>& candidates) {
  CheckResult r;
  r.id = "central";
  r.anchor = anchor_of(r.id);
  auto p = unitarity_relations(params);
  int bound = std::max(degree, 3);
  auto rs = complete<GaussRat>(p.nonzero_relations(), bound, MonomialOrder(), budget);

  std::vector<std::pair<std::string, FreeElt>> elements{{"C", p.central_C}};
  try {
    auto sk = rescale_sklyanin(params);
    auto q = central_elements_z(sk);
    for (std::size_t k = 0; k < 3; ++k) elements.emplace_back("Q" + std::to_string(k + 1), q[k]);
  } catch (const SpecialCaseError& e) {
    r.certificate["Q_skipped"] = "rescaling undefined: " + e.factor() + " = 0";
  }
  for (const auto& c : candidates) elements.push_back(c);

  bool ok = true;
  ojson list = ojson::array();
  for (const auto& [name, x] : elements) {
    budget.check("central");
    auto cert = is_central(x, rs);
    ojson e{{"name", name}, {"central", cert.central}};
    if (!cert.central) {
      ojson red = ojson::object();
      for (const auto& [g, nf] : cert.reduced)
        if (!nf.is_zero()) red["[x,z" + std::to_string(g) + "]"] = nf.to_string();
      e["reduced_commutators"] = red;
    }
    list.push_back(e);
    ok = ok && cert.central;
  }
  r.certificate["degree_bound"] = bound;
  r.certificate["rules"] = rs.rules().size();
  r.certificate["elements"] = list;
  r.status = pass_if(ok);
  return r;
}

CheckResult run_check(const std::string& id, const ModuliParams& params, int degree, long budget_ms) {
  Budget budget = Budget::with_millis(budget_ms);
  auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    if (id == "central") {
      r = central_check(params, degree, budget);
    } else if (id == "hilbert") {
      r = hilbert_check(params, degree, budget);
    } else if (id == "charvariety") {
      r = charvariety_check(params, budget);
    } else if (id == "sigma" || id == "centralform") {
      if (!is_generic(params)) throw SpecialCaseError("requires pairwise distinct λ²", "λμ²-λν²");
      r = id == "sigma" ? sigma_check(params, budget) : centralform_check(params, budget);
    } else if (id == "curveid") {
      r = curveid_check(params);
    } else if (id == "chern") {
      r = chern_check(params);
    } else if (id == "classify") {
      r = classify_check(params);
    } else {
      throw UsageError("unknown check '" + id + "'");
    }
  } catch (const ResourceError& e) {
    r = CheckResult{};
    r.status = CheckStatus::SkippedBudget;
    r.certificate["reason"] = e.what();
    r.certificate["partial"] = e.partial();
  } catch (const SpecialCaseError& e) {
    r = CheckResult{};
    r.status = CheckStatus::SkippedSpecial;
    r.certificate["reason"] = e.what();
    r.certificate["factor"] = e.factor();
  }
  r.id = id;
  r.anchor = anchor_of(id);
  r.millis = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return r;
}

VerifyOutcome run_verify(const RunConfig& config) {
  config.validate();
  ModuliParams params = config.moduli();
  auto ids = config.selected_checks();

  std::vector<CheckResult> results(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++)
      results[i] = run_check(ids[i], params, config.degree, config.budget_ms);
  };
  std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(config.workers), ids.size());
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ojson report = header(config, params, "verify");
  auto norm = normalize_moduli(params.values());
  report["normalized"] = {{"lambda", ojson::parse(norm.params.to_json())},
                          {"perm", norm.perm},
                          {"domain", std::string(1, norm.domain)}};
  report["degree"] = config.degree;
  ojson checks = ojson::array();
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : results) {
    checks.push_back(
        {{"id", r.id}, {"anchor", r.anchor}, {"status", to_string(r.status)}, {"certificate", r.certificate}});
    if (r.status == CheckStatus::Pass) ++pass;
    else if (r.status == CheckStatus::Fail) ++fail;
    else ++skipped;
  }
  report["checks"] = checks;
  report["summary"] = {{"pass", pass}, {"fail", fail}, {"skipped", skipped}};
  VerifyOutcome out;
  out.exit_code = fail ? 1 : skipped ? 2 : 0;
  report["exit_code"] = out.exit_code;
  if (config.timings) {
    ojson t = ojson::object();
    for (const auto& r : results) t[r.id] = r.millis;
    report["timings_ms"] = t;
  }
  out.report = std::move(report);
  return out;
}

ojson relations_report(const RunConfig& config) {
  config.validate();
  ModuliParams params = config.moduli();
  auto p = unitarity_relations(params);
  ojson j = header(config, params, "relations");
  j["norm"] = p.central_C.to_string();
  j["relations"] = strings({p.homogeneous.begin(), p.homogeneous.end()});
  auto nz = p.nonzero_relations();
  j["nonzero_relations"] = nz.size();
  j["independent_relations"] = span_dimension(nz);
  auto ca = comm_anticomm_form(p);
  j["comm_anticomm"] = strings({ca.begin(), ca.end()});
  try {
    auto sk = rescale_sklyanin(params);
    Alphabet Z("Z");
    auto rz = sk.relations_Z();
    ojson a = ojson::array(), rho = ojson::array();
    for (const auto& x : sk.a) a.push_back(x.to_string());
    for (const auto& x : sk.rho_sq) rho.push_back(x.to_string());
    auto q = central_elements(sk);
    j["rescaled"] = {{"a", a},
                     {"rho_squared", rho},
                     {"relations", strings({rz.begin(), rz.end()}, Z)},
                     {"central", strings({q.begin(), q.end()}, Z)}};
    auto h = hermiticity(sk);
    ojson flags = ojson::array();
    for (auto f : h.flags) flags.push_back(to_string(f));
    j["rescaled"]["hermiticity"] = flags;
  } catch (const SpecialCaseError& e) {
    j["rescaled"] = {{"skipped", std::string(e.what())}, {"factor", e.factor()}};
  }
  return j;
}

std::vector<std::string> validate_report(const nlohmann::json& r) {
  std::vector<std::string> problems;
  auto need = [&](const char* key, bool ok) {
    if (!r.contains(key)) problems.push_back(std::string("missing key '") + key + "'");
    else if (!ok) problems.push_back(std::string("key '") + key + "' has the wrong type");
  };
  if (!r.is_object()) return {"report is not a JSON object"};
  need("schema_version", r.contains("schema_version") && r["schema_version"].is_number_integer());
  if (r.contains("schema_version") && r["schema_version"] != kReportSchemaVersion)
    problems.push_back("unsupported schema_version");
  need("tool", r.contains("tool") && r["tool"].is_string());
  need("version", r.contains("version") && r["version"].is_string());
  need("command", r.contains("command") && r["command"].is_string());
  need("lambda", r.contains("lambda") && (r["lambda"].is_array() || r["lambda"].is_string()));
  need("case", r.contains("case") && r["case"].is_object());
  if (r.value("command", "") != "verify") return problems;
  need("checks", r.contains("checks") && r["checks"].is_array());
  need("summary", r.contains("summary") && r["summary"].is_object());
  need("exit_code", r.contains("exit_code") && r["exit_code"].is_number_integer());
  if (r.contains("checks") && r["checks"].is_array())
    for (const auto& c : r["checks"]) {
      if (!c.is_object() || !c.contains("id") || !c.contains("status") || !c.contains("certificate")) {
        problems.push_back("malformed check entry");
        continue;
      }
      auto id = c["id"].get<std::string>();
      if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end())
        problems.push_back("unknown check id '" + id + "'");
      static const std::vector<std::string> statuses{"pass", "fail", "skipped(budget)", "skipped(special-case)"};
      auto st = c["status"].get<std::string>();
      if (std::find(statuses.begin(), statuses.end(), st) == statuses.end())
        problems.push_back("unknown status '" + st + "' for check " + id);
    }
  return problems;
}

int exit_code_of(const nlohmann::json& report) {
  bool fail = false, skip = false;
  for (const auto& c : report.at("checks")) {
    auto st = c.at("status").get<std::string>();
    fail = fail || st == "fail";
    skip = skip || st.rfind("skipped", 0) == 0;
  }
  return fail ? 1 : skip ? 2 : 0;
}

std::string summarize(const nlohmann::json& report) {
  std::ostringstream out;
  out << report.value("tool", "ncsphere") << " " << report.value("version", "?") << " "
      << report.value("command", "?") << "\n";
  out << "lambda: " << report.at("lambda").dump() << "\n";
  out << "case:   " << report.at("case").value("name", "?") << "\n";
  if (report.contains("checks"))
    for (const auto& c : report["checks"]) {
      std::string id = c.at("id").get<std::string>();
      out << "  " << id << std::string(id.size() < 12 ? 12 - id.size() : 1, ' ') << c.at("status").get<std::string>()
          << "\n";
    }
  if (report.contains("summary")) {
    const auto& s = report["summary"];
    out << s.value("pass", 0) << " pass, " << s.value("fail", 0) << " fail, " << s.value("skipped", 0)
        << " skipped\n";
  }
  return out.str();
}

}  // namespace ncs
