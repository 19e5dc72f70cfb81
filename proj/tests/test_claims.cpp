#include <doctest.h>

#include "revpal/claims.hpp"

using namespace revpal;

namespace {

// Desk-size configuration so the whole registry runs in well under a second.
ClaimConfig small_config() {
  ClaimConfig cfg;
  cfg.prefix_length = 1 << 12;
  cfg.confirm_length = 1 << 11;
  cfg.max_m = 8;
  cfg.closure_step_max_n = 6;
  cfg.decompose_max_p = 2;
  cfg.decompose_max_n = 4;
  cfg.t_factor_generations = {8, 12};
  return cfg;
}

// Zeroes the fields that legitimately differ between runs: timings and the
// requested worker count.
nlohmann::ordered_json normalize_report(nlohmann::ordered_json j) {
  for (auto& result : j["results"]) {
    result["runtime_ms"] = 0.0;
  }
  j["config"]["jobs"] = 0;
  return j;
}

}  // namespace

TEST_CASE("registry lists the twelve claims in order") {
  const auto ids = claim_ids();
  REQUIRE(ids.size() == 12);
  CHECK(ids.front() == "C1");
  CHECK(ids.back() == "C12");
}

TEST_CASE("unknown claim ids are rejected") {
  CHECK_THROWS_AS(run_claim("C99", small_config()), ParameterError);
  const std::vector<std::string> filter{"C1", "nope"};
  CHECK_THROWS_AS(run_all(small_config(), filter), ParameterError);
}

TEST_CASE("config validation") {
  ClaimConfig bad = small_config();
  bad.confirm_length = bad.prefix_length;
  CHECK_THROWS_AS(run_claim("C1", bad), ParameterError);
  bad = small_config();
  bad.max_m = 0;
  CHECK_THROWS_AS(run_claim("C1", bad), ParameterError);
}

TEST_CASE("C3 finds exactly the four letters") {
  const ClaimResult r = run_claim("C3", small_config());
  CHECK(r.status == ClaimStatus::kPass);
  CHECK(r.details["palindromes"] ==
        nlohmann::ordered_json::array({"0", "1", "2", "3"}));
}

TEST_CASE("C5 collects only the separators 23 and 32") {
  const ClaimResult r = run_claim("C5", small_config());
  CHECK(r.status == ClaimStatus::kPass);
  CHECK(r.kind == ClaimKind::kExact);
  CHECK(r.details["distinct_separators"] ==
        nlohmann::ordered_json::array({"23", "32"}));
}

TEST_CASE("C9 matches g(x) against z") {
  const ClaimResult r = run_claim("C9", small_config());
  CHECK(r.status == ClaimStatus::kPass);
  CHECK(r.details["identical"] == true);
}

TEST_CASE("C11 reports the inverted asymmetry on t") {
  const ClaimResult r = run_claim("C11", small_config());
  CHECK(r.status == ClaimStatus::kFail);
  CHECK(r.details["contains_01000"] == false);
  CHECK(r.details["contains_00010"] == true);
  CHECK(r.details["factor_set_stable"] == true);
  CHECK(r.details["diagnosis"]["mirror_contains_01000"] == true);
  CHECK(r.details["diagnosis"]["mirror_contains_00010"] == false);
}

TEST_CASE("C12 adjudicates f(t) to z") {
  const ClaimResult r = run_claim("C12", small_config());
  CHECK(r.status == ClaimStatus::kPass);
  CHECK(r.details["matches"] == "z");
  const auto& candidates = r.details["candidates"];
  REQUIRE(candidates.size() == 2);
  CHECK(candidates[0]["word"] == "y");
  CHECK(candidates[0]["full_match"] == false);
  CHECK(candidates[0]["first_mismatch"] == 0);
  CHECK(candidates[1]["word"] == "z");
  CHECK(candidates[1]["full_match"] == true);
}

TEST_CASE("run_all covers the registry and tallies the summary") {
  const VerificationReport report = run_all(small_config());
  REQUIRE(report.results.size() == 12);
  for (std::size_t i = 0; i < report.results.size(); ++i) {
    CHECK(report.results[i].id == claim_ids()[i]);
  }
  CHECK(report.pass == 11);
  CHECK(report.fail == 1);
  CHECK(report.error == 0);
  // the single failure is the inverted asymmetry claim
  CHECK(report.results[10].id == "C11");
  CHECK(report.results[10].status == ClaimStatus::kFail);
  CHECK(exit_code_for(report) == 1);
}

TEST_CASE("a filter selects single claims") {
  const std::vector<std::string> filter{"C5"};
  const VerificationReport report = run_all(small_config(), filter);
  REQUIRE(report.results.size() == 1);
  CHECK(report.results[0].id == "C5");
  CHECK(report.pass == 1);
  CHECK(exit_code_for(report) == 0);
}

TEST_CASE("reports are deterministic and independent of concurrency") {
  ClaimConfig cfg = small_config();
  const auto first = normalize_report(report_to_json(run_all(cfg)));
  const auto second = normalize_report(report_to_json(run_all(cfg)));
  CHECK(first.dump() == second.dump());

  cfg.jobs = 4;
  const auto parallel = normalize_report(report_to_json(run_all(cfg)));
  CHECK(parallel.dump() == second.dump());
}

TEST_CASE("claims stay executable at tiny prefixes") {
  ClaimConfig cfg = small_config();
  cfg.prefix_length = 1 << 10;
  cfg.confirm_length = 1 << 9;
  const VerificationReport report = run_all(cfg);
  REQUIRE(report.results.size() == 12);
  CHECK(report.error == 0);
}

TEST_CASE("resource caps surface as error status, not exceptions") {
  ClaimConfig cfg = small_config();
  cfg.length_cap = 1 << 10;  // below the configured prefix length
  const ClaimResult r = run_claim("C1", cfg);
  CHECK(r.status == ClaimStatus::kError);
  CHECK(r.details["error_kind"] == "resource");

  VerificationReport report;
  report.results.push_back(r);
  report.error = 1;
  CHECK(exit_code_for(report) == 3);
}

TEST_CASE("report schema fixtures") {
  VerificationReport empty;
  const auto j = report_to_json(empty);
  CHECK(j["version"] == "1");
  CHECK(j["results"].is_array());
  CHECK(j["results"].empty());
  CHECK(j["summary"]["pass"] == 0);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["error"] == 0);

  const VerificationReport one = run_all(small_config(),
                                         std::vector<std::string>{"C9"});
  const auto text = render_report_text(one);
  CHECK(text.find("C9") != std::string::npos);
  CHECK(text.find("pass") != std::string::npos);
  CHECK(text.find("summary: 1 pass, 0 fail, 0 error") != std::string::npos);

  const auto full = report_to_json(run_all(small_config()));
  CHECK(full["summary"]["pass"].get<int>() +
            full["summary"]["fail"].get<int>() +
            full["summary"]["error"].get<int>() ==
        static_cast<int>(full["results"].size()));
}
