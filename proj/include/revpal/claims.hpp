#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "revpal/word.hpp"

namespace revpal {

enum class ClaimKind { kExact, kEvidence };
enum class ClaimStatus { kPass, kFail, kError };

std::string to_string(ClaimKind kind);
std::string to_string(ClaimStatus status);

/// Knobs shared by every claim; defaults match the reference verification run
/// and are echoed into each result so reports are reproducible.
struct ClaimConfig {
  std::size_t prefix_length = std::size_t{1} << 20;
  std::size_t confirm_length = std::size_t{1} << 19;
  int max_m = 20;
  int closure_step_max_n = 12;
  int decompose_max_p = 3;
  int decompose_max_n = 8;
  std::array<int, 2> t_factor_generations{12, 20};
  int t_factor_length = 5;
  std::size_t length_cap = kDefaultLengthCap;
  int jobs = 1;
};

struct ClaimResult {
  std::string id;
  std::string description;
  ClaimKind kind = ClaimKind::kEvidence;
  ClaimStatus status = ClaimStatus::kError;
  nlohmann::ordered_json parameters;
  nlohmann::ordered_json details;
  double runtime_ms = 0.0;
};

struct VerificationReport {
  ClaimConfig config;
  std::vector<ClaimResult> results;
  int pass = 0;
  int fail = 0;
  int error = 0;
};

/// All registered claim ids, in execution order (C1..C12).
std::vector<std::string> claim_ids();

/// Runs one claim.  Throws ParameterError for an unknown id; resource-cap and
/// other runtime failures are captured as an error-status result.
ClaimResult run_claim(const std::string& id, const ClaimConfig& config);

/// Runs the selected claims (all of them when the filter is empty), possibly
/// concurrently per config.jobs; the report order is always registry order.
VerificationReport run_all(const ClaimConfig& config,
                           std::span<const std::string> filter = {});

nlohmann::ordered_json config_to_json(const ClaimConfig& config);
nlohmann::ordered_json report_to_json(const VerificationReport& report);
std::string render_report_text(const VerificationReport& report);

/// 0 all pass; 1 any failure; 3 any error (resource caps surface as errors).
int exit_code_for(const VerificationReport& report);

}  // namespace revpal
