#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ncsphere/errors.hpp"
#include "ncsphere/report.hpp"

using namespace ncs;

namespace {

RunConfig preset(const std::string& name, std::vector<std::string> checks = {}, int degree = 4) {
  RunConfig c;
  c.preset = name;
  c.checks = std::move(checks);
  c.degree = degree;
  return c;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

const nlohmann::ordered_json& find_check(const nlohmann::ordered_json& report, const std::string& id) {
  for (const auto& c : report["checks"])
    if (c["id"] == id) return c;
  throw std::runtime_error("no check " + id);
}

}  // namespace

TEST_CASE("relations report matches the audited golden file") {
  auto j = relations_report(preset("generic-sample"));
  std::string golden = read_file(std::filesystem::path(NCS_GOLDEN_DIR) / "relations_generic_sample.json");
  CHECK(j.dump(2) + "\n" == golden);
}

TEST_CASE("relations of the named cases") {
  auto c = relations_report(preset("commutative"));
  // In comm/anticomm form the commutative point gives six commutators.
  CHECK(c["comm_anticomm"] == nlohmann::json::array({
                                  "(-2)·z2.z3 + (2)·z3.z2",
                                  "(2)·z1.z3 + (-2)·z3.z1",
                                  "(-2)·z1.z2 + (2)·z2.z1",
                                  "(2)·z0.z1 + (-2)·z1.z0",
                                  "(2)·z0.z2 + (-2)·z2.z0",
                                  "(2)·z0.z3 + (-2)·z3.z0",
                              }));
  CHECK(c["independent_relations"] == 6);

  auto t = relations_report(preset("three-relations"));
  CHECK(t["independent_relations"] == 3);
  CHECK(t["rescaled"].contains("skipped"));

  CHECK(relations_report(preset("coarse"))["independent_relations"] == 5);
}

TEST_CASE("verify is deterministic and independent of the worker count") {
  auto a = preset("generic-sample", {"central", "hilbert", "charvariety", "classify"});
  auto b = a;
  b.workers = 4;
  auto ra = run_verify(a), rb = run_verify(b), rc = run_verify(a);
  CHECK(ra.report.dump() == rb.report.dump());
  CHECK(ra.report.dump() == rc.report.dump());
  CHECK(ra.exit_code == 0);
  CHECK_FALSE(ra.report.contains("timings_ms"));
  a.timings = true;
  CHECK(run_verify(a).report.contains("timings_ms"));
}

TEST_CASE("hilbert dimensions through the report") {
  auto r = run_verify(preset("commutative", {"hilbert"}, 5));
  const auto& c = find_check(r.report, "hilbert");
  CHECK(c["status"] == "pass");
  CHECK(c["certificate"]["dimensions"] == nlohmann::json::array({1, 4, 10, 20, 35, 56}));
  CHECK(c["certificate"]["dimensions_with_C"] == nlohmann::json::array({1, 4, 9, 16, 25}));

  auto g = run_verify(preset("generic-sample", {"central", "hilbert"}, 4));
  CHECK(g.exit_code == 0);
}

TEST_CASE("classification through the report") {
  RunConfig c;
  c.lambda_json = "[[1,0],[2,1],[3,2],[4,1]]";
  c.checks = {"classify"};
  auto r = run_verify(c);
  CHECK(r.exit_code == 0);
  CHECK(r.report["case"]["name"] == "generic");

  auto t = run_verify(preset("three-relations", {"classify"}));
  const auto& cert = find_check(t.report, "classify")["certificate"];
  CHECK(cert["relation_count"] == 3);
  CHECK(cert["checks"]["rank 2 on Σy²=0"] == true);
}

TEST_CASE("special cases skip the generic-only checks") {
  auto r = run_verify(preset("two-conics", {"sigma", "classify"}));
  CHECK(find_check(r.report, "sigma")["status"] == "skipped(special-case)");
  CHECK(find_check(r.report, "classify")["status"] == "pass");
  CHECK(r.exit_code == 2);
}

TEST_CASE("budget exhaustion is reported as a skip") {
  auto c = preset("generic-sample", {"hilbert"}, 7);
  c.budget_ms = 1;
  auto r = run_verify(c);
  CHECK(find_check(r.report, "hilbert")["status"] == "skipped(budget)");
  CHECK(r.exit_code == 2);
}

TEST_CASE("a failing candidate carries its reduced commutators") {
  auto params = ModuliParams::preset("generic-sample");
  FreeElt wrong = FreeElt::gen(0) * FreeElt::gen(1);
  auto r = central_check(params, 4, Budget(), {{"z0.z1", wrong}});
  CHECK(r.status == CheckStatus::Fail);
  const auto& last = r.certificate["elements"].back();
  CHECK(last["name"] == "z0.z1");
  CHECK(last["central"] == false);
  CHECK_FALSE(last["reduced_commutators"].empty());
  for (const auto& [k, v] : last["reduced_commutators"].items()) CHECK(v.get<std::string>() != "0");
}

TEST_CASE("report schema round trip") {
  auto r = run_verify(preset("generic-sample", {"chern", "classify"}));
  auto parsed = nlohmann::json::parse(r.report.dump());
  CHECK(validate_report(parsed).empty());
  CHECK(exit_code_of(parsed) == r.exit_code);
  CHECK(summarize(parsed).find("chern       pass") != std::string::npos);

  auto broken = parsed;
  broken.erase("schema_version");
  broken["checks"][0]["status"] = "maybe";
  auto problems = validate_report(broken);
  CHECK(problems.size() == 2);
  CHECK_FALSE(validate_report(nlohmann::json::array()).empty());
  CHECK(validate_report(nlohmann::json::parse(relations_report(preset("plane")).dump())).empty());
}

TEST_CASE("configuration") {
  SUBCASE("TOML file") {
    auto p = temp_file("ncs_config_ok.toml",
                       "pythagorean = \"1, 2:1, 3:2, 4:1\"\ndegree = 3\nchecks = [\"hilbert\", \"central\"]\n"
                       "workers = 2\nbudget_ms = 5000\n");
    RunConfig c;
    c.merge_toml(p.string());
    CHECK(c.degree == 3);
    CHECK(c.workers == 2);
    CHECK(c.budget_ms == 5000);
    CHECK(c.selected_checks() == std::vector<std::string>{"central", "hilbert"});
    CHECK_NOTHROW(c.validate());
    CHECK(c.moduli() == ModuliParams::preset("generic-sample"));
  }
  SUBCASE("malformed TOML") {
    auto p = temp_file("ncs_config_bad.toml", "degree = = 3\n");
    RunConfig c;
    CHECK_THROWS_AS(c.merge_toml(p.string()), UsageError);
    auto q = temp_file("ncs_config_unknown.toml", "colour = \"red\"\n");
    CHECK_THROWS_AS(c.merge_toml(q.string()), UsageError);
    auto w = temp_file("ncs_config_type.toml", "degree = \"three\"\n");
    CHECK_THROWS_AS(c.merge_toml(w.string()), UsageError);
  }
  SUBCASE("validation") {
    RunConfig none;
    CHECK_THROWS_AS(none.validate(), UsageError);
    RunConfig two = preset("plane");
    two.lambda_json = "[1,1,1,1]";
    CHECK_THROWS_AS(two.validate(), UsageError);
    RunConfig low = preset("plane");
    low.degree = 1;
    CHECK_THROWS_AS(low.validate(), UsageError);
    RunConfig unknown = preset("plane", {"nonsense"});
    CHECK_THROWS_AS(unknown.validate(), UsageError);
    CHECK_THROWS_AS(preset("nope").moduli(), UsageError);
  }
  SUBCASE("λ from a file") {
    auto p = temp_file("ncs_lambda.json", "[[1,0],[2,1],[3,2],[4,1]]");
    RunConfig c;
    c.lambda_file = p.string();
    CHECK(c.moduli() == ModuliParams::preset("generic-sample"));
    c.lambda_file = "/nonexistent/lambda.json";
    CHECK_THROWS_AS(c.moduli(), UsageError);
  }
}

TEST_CASE("Pythagorean lists") {
  CHECK(parse_pythagorean("1,2:1,3:2,4:1") == ModuliParams::preset("generic-sample"));
  CHECK(parse_pythagorean("1,1,1,-1") == ModuliParams::preset("three-relations"));
  CHECK_THROWS_AS(parse_pythagorean("1,2:1,3:2"), DomainError);
  CHECK_THROWS_AS(parse_pythagorean("1,2:x,3:2,4:1"), DomainError);
  CHECK_THROWS_AS(parse_pythagorean("1,2-1,3:2,4:1"), DomainError);
}
