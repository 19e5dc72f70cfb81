#include "revpal/claims.hpp"

#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include "revpal/analysis.hpp"
#include "revpal/generators.hpp"
#include "revpal/morphism.hpp"
#include "revpal/palindromic_tree.hpp"
#include "revpal/suffix_automaton.hpp"

namespace revpal {

namespace {

using nlohmann::ordered_json;

// --- deterministic content hashes for stabilization certificates ---------

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;

std::string to_hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

std::string hash_of_word(const Word& w) {
  return to_hex(fnv1a(kFnvOffset, w.letters().data(), w.size()));
}

std::string hash_of_words(const std::vector<Word>& words) {
  std::uint64_t h = kFnvOffset;
  for (const Word& w : words) {
    h = fnv1a(h, w.letters().data(), w.size());
    const char bar = '|';
    h = fnv1a(h, &bar, 1);
  }
  return to_hex(h);
}

std::string hash_of_factor_sets(const Word& w, int max_m) {
  std::uint64_t h = kFnvOffset;
  for (int m = 1; m <= max_m; ++m) {
    const FactorSet fs(w, m);
    std::vector<PackedFactor> packed(fs.packed().begin(), fs.packed().end());
    std::sort(packed.begin(), packed.end());
    h = fnv1a(h, &m, sizeof(m));
    for (const PackedFactor& f : packed) {
      h = fnv1a(h, &f.hi, sizeof(f.hi));
      h = fnv1a(h, &f.lo, sizeof(f.lo));
    }
  }
  return to_hex(h);
}

// --- shared claim bodies --------------------------------------------------

struct ClaimOutcome {
  ClaimStatus status = ClaimStatus::kError;
  ordered_json parameters;
  ordered_json details;
};

std::optional<std::size_t> first_mismatch(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return i;
  }
  if (a.size() != b.size()) return n;
  return std::nullopt;
}

Word make_prefix(const std::string& selector, std::size_t length,
                 std::size_t cap) {
  if (selector == "x") return prefix_of_limit(family_x(), length, cap);
  if (selector == "z") return prefix_of_limit(family_z(), length, cap);
  if (selector == "t") return prefix_of_limit(family_t(), length, cap);
  if (selector == "y") return prefix_of_morphic(word_y(), length, cap);
  if (selector == "gx") return prefix_of_morphic(word_gx(), length, cap);
  if (selector == "ft") return prefix_of_morphic(word_ft(), length, cap);
  throw ParameterError("unknown word selector: " + selector);
}

ordered_json certificate(std::size_t full, std::size_t confirm,
                         const std::string& hash_full,
                         const std::string& hash_confirm) {
  return ordered_json{{"prefix_length", full},
                      {"confirm_length", confirm},
                      {"hash_full", hash_full},
                      {"hash_confirm", hash_confirm}};
}

ClaimOutcome recurrence_claim(const std::string& selector,
                              const ClaimConfig& cfg) {
  const Word w = make_prefix(selector, cfg.prefix_length, cfg.length_cap);
  const RecurrenceProfile profile =
      recurrence_profile(w, cfg.max_m, cfg.confirm_length);

  bool all_stable = true;
  ordered_json rows = ordered_json::array();
  std::uint64_t h_full = kFnvOffset;
  std::uint64_t h_confirm = kFnvOffset;
  std::size_t max_bound = 0;
  for (const auto& row : profile.rows) {
    all_stable = all_stable && row.stable;
    max_bound = std::max(max_bound, row.window_bound);
    rows.push_back(ordered_json{{"m", row.m},
                                {"factor_count", row.factor_count},
                                {"max_gap", row.max_gap},
                                {"window_bound", row.window_bound},
                                {"stable", row.stable}});
    h_full = fnv1a(h_full, &row.factor_count, sizeof(row.factor_count));
    h_full = fnv1a(h_full, &row.max_gap, sizeof(row.max_gap));
    h_confirm = fnv1a(h_confirm, &row.confirm_factor_count,
                      sizeof(row.confirm_factor_count));
    h_confirm =
        fnv1a(h_confirm, &row.confirm_max_gap, sizeof(row.confirm_max_gap));
  }

  ClaimOutcome out;
  out.status = all_stable ? ClaimStatus::kPass : ClaimStatus::kFail;
  out.parameters = ordered_json{{"word", selector},
                                {"prefix_length", cfg.prefix_length},
                                {"confirm_length", cfg.confirm_length},
                                {"max_m", cfg.max_m}};
  out.details = ordered_json{
      {"summary", all_stable
                      ? "window bounds stable for m <= " +
                            std::to_string(cfg.max_m) + ", largest R(m) = " +
                            std::to_string(max_bound)
                      : "recurrence profile not stable across prefixes"},
      {"method",
       "gaps measured between occurrence start positions; windows overlapping "
       "the prefix end are not extrapolated"},
      {"profile", rows},
      {"certificate", certificate(cfg.prefix_length, cfg.confirm_length,
                                  to_hex(h_full), to_hex(h_confirm))}};
  return out;
}

ClaimOutcome closure_claim(const std::string& selector,
                           const RecursiveFamily* step_family,
                           const ClaimConfig& cfg) {
  const Word w = make_prefix(selector, cfg.prefix_length, cfg.length_cap);
  const Word confirm = w.prefix(cfg.confirm_length);

  bool all_ok = true;
  ordered_json rows = ordered_json::array();
  std::optional<Word> witness;
  for (int m = 1; m <= cfg.max_m; ++m) {
    const FactorSet full = factor_set(w, m);
    const bool stabilized = full == factor_set(confirm, m);
    const ClosureCheckResult res = reversal_closure_check(full);
    ordered_json row{{"m", m},
                     {"factor_count", res.factor_count},
                     {"stabilized", stabilized},
                     {"closed", res.closed}};
    if (res.witness) {
      row["witness"] = res.witness->str();
      if (!witness) witness = res.witness;
    }
    rows.push_back(std::move(row));
    all_ok = all_ok && stabilized && res.closed;
  }

  ordered_json details{
      {"summary", all_ok ? "factor sets stabilized and closed under reversal "
                           "for m <= " +
                               std::to_string(cfg.max_m)
                         : witness ? "closure violated, witness " +
                                         witness->str()
                                   : "factor sets not stabilized"},
      {"factors", rows},
      {"certificate",
       certificate(cfg.prefix_length, cfg.confirm_length,
                   hash_of_factor_sets(w, cfg.max_m),
                   hash_of_factor_sets(confirm, cfg.max_m))}};

  if (step_family != nullptr) {
    ordered_json steps = ordered_json::array();
    for (int n = 0; n <= cfg.closure_step_max_n; ++n) {
      const bool ok = closure_step_check(*step_family, n, cfg.length_cap);
      steps.push_back(ordered_json{{"n", n}, {"reversal_embeds", ok}});
      all_ok = all_ok && ok;
    }
    details["closure_steps"] = std::move(steps);
  }

  ClaimOutcome out;
  out.status = all_ok ? ClaimStatus::kPass : ClaimStatus::kFail;
  out.parameters = ordered_json{{"word", selector},
                                {"prefix_length", cfg.prefix_length},
                                {"confirm_length", cfg.confirm_length},
                                {"max_m", cfg.max_m}};
  if (step_family != nullptr) {
    out.parameters["closure_step_max_n"] = cfg.closure_step_max_n;
  }
  out.details = std::move(details);
  return out;
}

// --- the twelve claims ----------------------------------------------------

ClaimOutcome claim_c1(const ClaimConfig& cfg) { return recurrence_claim("x", cfg); }

ClaimOutcome claim_c2(const ClaimConfig& cfg) {
  return closure_claim("x", &family_x(), cfg);
}

ClaimOutcome claim_c3(const ClaimConfig& cfg) {
  const Word w = make_prefix("x", cfg.prefix_length, cfg.length_cap);
  const std::vector<Word> pals = PalindromicTree(w).palindromic_factors();
  const std::vector<std::string> expected{"0", "1", "2", "3"};
  std::vector<std::string> got;
  got.reserve(pals.size());
  for (const Word& p : pals) got.push_back(p.str());

  const bool ok = got == expected;
  ClaimOutcome out;
  out.status = ok ? ClaimStatus::kPass : ClaimStatus::kFail;
  out.parameters = ordered_json{{"word", "x"},
                                {"prefix_length", cfg.prefix_length}};
  out.details = ordered_json{
      {"summary", ok ? "palindromic factors are exactly {0,1,2,3}"
                     : "unexpected palindromic factor set"},
      {"palindrome_count", got.size()},
      {"palindromes", got}};
  return out;
}

ClaimOutcome claim_c4(const ClaimConfig& cfg) {
  const Word w = make_prefix("x", cfg.prefix_length, cfg.length_cap);
  const BlockFormResult blocks = block_form_check(w);
  const ForbiddenFactorResult forbidden = forbidden_factor_check(w);

  ClaimOutcome out;
  out.status = blocks.ok && forbidden.ok ? ClaimStatus::kPass
                                         : ClaimStatus::kFail;
  out.parameters = ordered_json{{"word", "x"},
                                {"prefix_length", cfg.prefix_length}};
  out.details = ordered_json{
      {"summary", blocks.ok && forbidden.ok
                      ? "block form holds and no aa or aba factor occurs"
                      : "structural violation found"},
      {"block_form_ok", blocks.ok},
      {"forbidden_factors_ok", forbidden.ok}};
  if (!blocks.ok) out.details["block_violation_index"] = blocks.violation_index;
  if (!forbidden.ok) {
    out.details["forbidden_witness"] = forbidden.witness->str();
    out.details["forbidden_position"] = forbidden.position;
  }
  return out;
}

ClaimOutcome claim_c5(const ClaimConfig& cfg) {
  bool all_valid = true;
  ordered_json cases = ordered_json::array();
  std::vector<std::string> distinct_separators;
  for (int p = 0; p <= cfg.decompose_max_p; ++p) {
    for (int n = 1; n <= cfg.decompose_max_n; ++n) {
      const Decomposition d =
          decompose_generation(family_x(), p, n, cfg.length_cap);
      const std::size_t expected_count = (std::size_t{1} << n) - 1;
      const bool ok = d.valid && d.separators.size() == expected_count;
      all_valid = all_valid && ok;
      for (const Word& sep : d.separators) {
        std::string s = sep.str();
        if (std::find(distinct_separators.begin(), distinct_separators.end(),
                      s) == distinct_separators.end()) {
          distinct_separators.push_back(std::move(s));
        }
      }
      cases.push_back(ordered_json{{"p", p},
                                   {"n", n},
                                   {"separator_count", d.separators.size()},
                                   {"valid", ok}});
    }
  }
  std::sort(distinct_separators.begin(), distinct_separators.end());

  ClaimOutcome out;
  out.status = all_valid ? ClaimStatus::kPass : ClaimStatus::kFail;
  out.parameters = ordered_json{{"word", "x"},
                                {"max_p", cfg.decompose_max_p},
                                {"max_n", cfg.decompose_max_n}};
  out.details = ordered_json{
      {"summary", all_valid ? "all decompositions valid with separators in "
                              "{23,32}"
                            : "decomposition failure"},
      {"distinct_separators", distinct_separators},
      {"cases", cases}};
  return out;
}

ClaimOutcome claim_c6(const ClaimConfig& cfg) { return recurrence_claim("y", cfg); }

ClaimOutcome claim_c7(const ClaimConfig& cfg) {
  return closure_claim("y", nullptr, cfg);
}

ClaimOutcome claim_c8(const ClaimConfig& cfg) {
  const Word w = make_prefix("y", cfg.prefix_length, cfg.length_cap);
  const std::vector<Word> pals_full = PalindromicTree(w).palindromic_factors();
  const std::vector<Word> pals_confirm =
      PalindromicTree(w.prefix(cfg.confirm_length)).palindromic_factors();
  const bool sets_identical = pals_full == pals_confirm;

  bool image_palindromes = true;
  for (Letter a = 0; a < 4; ++a) {
    image_palindromes = image_palindromes && is_palindrome(morphism_h().image(a));
  }
  // h commutes with reversal; spot-check on the first generations of x.
  bool commutes = true;
  for (int k = 0; k <= 6; ++k) {
    const Word xk = build_generation(family_x(), k, cfg.length_cap);
    commutes = commutes && apply_morphism(morphism_h(), reverse(xk)) ==
                               reverse(apply_morphism(morphism_h(), xk));
  }

  std::vector<std::string> set_str;
  set_str.reserve(pals_full.size());
  std::size_t max_len = 0;
  for (const Word& p : pals_full) {
    max_len = std::max(max_len, p.size());
    set_str.push_back(p.str());
  }

  const bool ok = sets_identical && image_palindromes && commutes;
  ClaimOutcome out;
  out.status = ok ? ClaimStatus::kPass : ClaimStatus::kFail;
  out.parameters = ordered_json{{"word", "y"},
                                {"prefix_length", cfg.prefix_length},
                                {"confirm_length", cfg.confirm_length}};
  out.details = ordered_json{
      {"summary",
       ok ? "palindromic factor set stabilized at " +
                std::to_string(set_str.size()) + " factors, max length " +
                std::to_string(max_len)
          : "palindromic factor set did not stabilize"},
      {"sets_identical", sets_identical},
      {"palindrome_count", set_str.size()},
      {"max_palindrome_length", max_len},
      {"image_palindromes_ok", image_palindromes},
      {"reversal_commutes_ok", commutes},
      {"palindromes", set_str},
      {"certificate", certificate(cfg.prefix_length, cfg.confirm_length,
                                  hash_of_words(pals_full),
                                  hash_of_words(pals_confirm))}};
  return out;
}

ClaimOutcome claim_c9(const ClaimConfig& cfg) {
  const Word gx = make_prefix("gx", cfg.prefix_length, cfg.length_cap);
  const Word z = make_prefix("z", cfg.prefix_length, cfg.length_cap);
  const auto mismatch = first_mismatch(gx, z);

  ClaimOutcome out;
  out.status = mismatch ? ClaimStatus::kFail : ClaimStatus::kPass;
  out.parameters = ordered_json{{"words", "g(x) vs z"},
                                {"prefix_length", cfg.prefix_length}};
  out.details = ordered_json{
      {"summary", mismatch ? "g(x) and z disagree at index " +
                                 std::to_string(*mismatch)
                           : "g(x) equals z over the full tested prefix"},
      {"identical", !mismatch.has_value()},
      {"match_length", mismatch ? *mismatch : gx.size()},
      {"hash_gx", hash_of_word(gx)},
      {"hash_z", hash_of_word(z)}};
  return out;
}

ClaimOutcome claim_c10(const ClaimConfig& cfg) {
  const std::array<std::size_t, 2> lengths{13, 14};
  const Word z2 = build_generation(family_z(), 2, cfg.length_cap);
  const Word z3 = build_generation(family_z(), 3, cfg.length_cap);
  const Word mirror_seam = concat(concat(reverse(z2), Word::parse("01", 2)), z2);

  const PalindromeAbsenceResult base_z3 = palindrome_absence_check(z3, lengths);
  const PalindromeAbsenceResult base_seam =
      palindrome_absence_check(mirror_seam, lengths);

  const Word z_prefix = make_prefix("z", cfg.prefix_length, cfg.length_cap);
  const PalindromicTree tree(z_prefix);
  const bool prefix_ok = !tree.has_palindrome_of_length(13) &&
                         !tree.has_palindrome_of_length(14);
  const std::size_t max_len = tree.max_palindrome_length();

  std::vector<std::string> set_str;
  for (const Word& p : tree.palindromic_factors()) set_str.push_back(p.str());

  const bool ok = base_z3.ok && base_seam.ok && prefix_ok && max_len <= 12;
  ClaimOutcome out;
  out.status = ok ? ClaimStatus::kPass : ClaimStatus::kFail;
  out.parameters = ordered_json{{"word", "z"},
                                {"prefix_length", cfg.prefix_length},
                                {"forbidden_lengths", lengths}};
  out.details = ordered_json{
      {"summary",
       ok ? "no palindrome of length 13 or 14; observed maximum " +
                std::to_string(max_len)
          : "palindrome bound violated"},
      {"base_z3_ok", base_z3.ok},
      {"base_mirror_seam_ok", base_seam.ok},
      {"prefix_ok", prefix_ok},
      {"max_palindrome_length", max_len},
      {"palindrome_count", set_str.size()},
      {"palindromes", set_str}};
  if (!base_z3.ok) out.details["base_z3_witness"] = base_z3.witness->str();
  if (!base_seam.ok) {
    out.details["base_mirror_seam_witness"] = base_seam.witness->str();
  }
  return out;
}

ClaimOutcome claim_c11(const ClaimConfig& cfg) {
  const Word t = make_prefix("t", cfg.prefix_length, cfg.length_cap);
  const SuffixAutomaton automaton(t);
  const bool has_01000 = automaton.contains(Word::parse("01000", 2));
  const bool has_00010 = automaton.contains(Word::parse("00010", 2));

  // When the checks come out inverted, test the mirror fold orientation
  // (seed 1, separator 1) so the report can say which word the catalogued
  // asymmetry actually belongs to.
  ordered_json diagnosis;
  if (!has_01000 || has_00010) {
    const RecursiveFamily mirror("t-mirror", Word::parse("1", 2),
                                 Word::parse("1", 2),
                                 Transform::kReverseComplement);
    const SuffixAutomaton mirror_automaton(
        prefix_of_limit(mirror, cfg.prefix_length, cfg.length_cap));
    diagnosis = ordered_json{
        {"note",
         "the stated asymmetry holds for the mirror fold orientation (seed "
         "1, separator 1), not for t itself"},
        {"mirror_contains_01000",
         mirror_automaton.contains(Word::parse("01000", 2))},
        {"mirror_contains_00010",
         mirror_automaton.contains(Word::parse("00010", 2))}};
  }

  const Word early = build_generation(family_t(), cfg.t_factor_generations[0],
                                      cfg.length_cap);
  const Word late = build_generation(family_t(), cfg.t_factor_generations[1],
                                     cfg.length_cap);
  const FactorSet fs_early(early, cfg.t_factor_length);
  const FactorSet fs_late(late, cfg.t_factor_length);
  const bool stable = fs_early == fs_late;

  const bool ok = has_01000 && !has_00010 && stable;
  ClaimOutcome out;
  out.status = ok ? ClaimStatus::kPass : ClaimStatus::kFail;
  out.parameters = ordered_json{
      {"word", "t"},
      {"prefix_length", cfg.prefix_length},
      {"factor_length", cfg.t_factor_length},
      {"stabilization_generations", cfg.t_factor_generations}};
  out.details = ordered_json{
      {"summary",
       ok ? "01000 occurs, 00010 does not; factor set of length " +
                std::to_string(cfg.t_factor_length) + " stable"
          : "asymmetry inverted on t: contains(01000)=" +
                std::string(has_01000 ? "true" : "false") +
                ", contains(00010)=" + (has_00010 ? "true" : "false")},
      {"contains_01000", has_01000},
      {"contains_00010", has_00010},
      {"factor_count", fs_late.size()},
      {"factor_set_stable", stable},
      {"certificate",
       ordered_json{{"generations", cfg.t_factor_generations},
                    {"hash_early", hash_of_words(fs_early.words())},
                    {"hash_late", hash_of_words(fs_late.words())}}}};
  if (!diagnosis.is_null()) out.details["diagnosis"] = std::move(diagnosis);
  return out;
}

ClaimOutcome claim_c12(const ClaimConfig& cfg) {
  const Word ft = make_prefix("ft", cfg.prefix_length, cfg.length_cap);

  ordered_json candidates = ordered_json::array();
  int full_matches = 0;
  std::string conclusion = "none";
  for (const std::string& name : {std::string("y"), std::string("z")}) {
    const Word candidate = make_prefix(name, cfg.prefix_length, cfg.length_cap);
    const auto mismatch = first_mismatch(ft, candidate);
    ordered_json entry{{"word", name},
                       {"full_match", !mismatch.has_value()},
                       {"match_length", mismatch ? *mismatch : ft.size()}};
    if (mismatch) {
      entry["first_mismatch"] = *mismatch;
    } else {
      ++full_matches;
      conclusion = name;
    }
    candidates.push_back(std::move(entry));
  }
  if (full_matches > 1) conclusion = "ambiguous";

  const bool ok = full_matches == 1;
  ClaimOutcome out;
  out.status = ok ? ClaimStatus::kPass : ClaimStatus::kFail;
  out.parameters = ordered_json{{"word", "ft"},
                                {"prefix_length", cfg.prefix_length}};
  out.details = ordered_json{
      {"summary", ok ? "f(t) matches " + conclusion +
                           " over the full tested prefix"
                     : "f(t) matches " + std::to_string(full_matches) +
                           " of the candidates"},
      {"candidates", candidates},
      {"matches", conclusion},
      {"hash_ft", hash_of_word(ft)}};
  return out;
}

// --- registry ---------------------------------------------------------------

struct ClaimSpec {
  const char* id;
  ClaimKind kind;
  const char* description;
  ClaimOutcome (*fn)(const ClaimConfig&);
};

constexpr std::array<ClaimSpec, 12> kRegistry{{
    {"C1", ClaimKind::kEvidence,
     "x is uniformly recurrent: window bounds R(m) stable across nested "
     "prefixes",
     claim_c1},
    {"C2", ClaimKind::kEvidence,
     "the factor set of x is closed under reversal", claim_c2},
    {"C3", ClaimKind::kEvidence,
     "the palindromic factors of x are exactly the four letters", claim_c3},
    {"C4", ClaimKind::kEvidence,
     "x lies in ((01+10)(23+32))^omega and avoids factors aa and aba",
     claim_c4},
    {"C5", ClaimKind::kExact,
     "x_{p+n} splits into alternating x_p / reversed-x_p blocks with "
     "separators in {23,32}",
     claim_c5},
    {"C6", ClaimKind::kEvidence, "y = h(x) is uniformly recurrent", claim_c6},
    {"C7", ClaimKind::kEvidence,
     "the factor set of y is closed under reversal", claim_c7},
    {"C8", ClaimKind::kEvidence,
     "y has finitely many palindromic factors: the set stabilizes across "
     "prefixes",
     claim_c8},
    {"C9", ClaimKind::kEvidence, "z equals g(x)", claim_c9},
    {"C10", ClaimKind::kExact,
     "no palindrome of length 13 or 14 occurs in z, so palindromic factors "
     "have length at most 12",
     claim_c10},
    {"C11", ClaimKind::kEvidence,
     "the factor set of t is not closed under reversal: 01000 occurs but "
     "00010 does not",
     claim_c11},
    {"C12", ClaimKind::kEvidence,
     "adjudication: f(t) is compared against y and z and must match exactly "
     "one of them",
     claim_c12},
}};

const ClaimSpec* find_claim(const std::string& id) {
  for (const ClaimSpec& spec : kRegistry) {
    if (id == spec.id) return &spec;
  }
  return nullptr;
}

void validate_config(const ClaimConfig& cfg) {
  if (cfg.confirm_length == 0 || cfg.confirm_length >= cfg.prefix_length) {
    throw ParameterError(
        "confirm length must be positive and below the prefix length");
  }
  if (cfg.max_m < 1 || cfg.max_m > kMaxFactorLength) {
    throw ParameterError("max_m out of range 1..64");
  }
  if (cfg.jobs < 1) {
    throw ParameterError("jobs must be at least 1");
  }
}

ClaimResult run_spec(const ClaimSpec& spec, const ClaimConfig& cfg) {
  ClaimResult result;
  result.id = spec.id;
  result.description = spec.description;
  result.kind = spec.kind;

  const auto start = std::chrono::steady_clock::now();
  try {
    ClaimOutcome outcome = spec.fn(cfg);
    result.status = outcome.status;
    result.parameters = std::move(outcome.parameters);
    result.details = std::move(outcome.details);
  } catch (const ResourceLimitError& e) {
    result.status = ClaimStatus::kError;
    result.details = ordered_json{{"summary", "resource cap exceeded"},
                                  {"error_kind", "resource"},
                                  {"error", e.what()}};
  } catch (const std::exception& e) {
    result.status = ClaimStatus::kError;
    result.details = ordered_json{{"summary", "internal error"},
                                  {"error_kind", "internal"},
                                  {"error", e.what()}};
  }
  const auto stop = std::chrono::steady_clock::now();
  result.runtime_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return result;
}

}  // namespace

std::string to_string(ClaimKind kind) {
  return kind == ClaimKind::kExact ? "exact" : "evidence";
}

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::kPass: return "pass";
    case ClaimStatus::kFail: return "fail";
    default: return "error";
  }
}

std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  ids.reserve(kRegistry.size());
  for (const ClaimSpec& spec : kRegistry) ids.emplace_back(spec.id);
  return ids;
}

ClaimResult run_claim(const std::string& id, const ClaimConfig& config) {
  validate_config(config);
  const ClaimSpec* spec = find_claim(id);
  if (spec == nullptr) {
    throw ParameterError("unknown claim id: " + id);
  }
  return run_spec(*spec, config);
}

VerificationReport run_all(const ClaimConfig& config,
                           std::span<const std::string> filter) {
  validate_config(config);

  std::vector<const ClaimSpec*> selected;
  if (filter.empty()) {
    for (const ClaimSpec& spec : kRegistry) selected.push_back(&spec);
  } else {
    for (const std::string& id : filter) {
      if (find_claim(id) == nullptr) {
        throw ParameterError("unknown claim id: " + id);
      }
    }
    for (const ClaimSpec& spec : kRegistry) {
      if (std::find(filter.begin(), filter.end(), spec.id) != filter.end()) {
        selected.push_back(&spec);
      }
    }
  }

  VerificationReport report;
  report.config = config;
  report.results.resize(selected.size());

  const int jobs = std::min<int>(config.jobs,
                                 static_cast<int>(selected.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) {
      report.results[i] = run_spec(*selected[i], config);
    }
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) {
      workers.emplace_back([&] {
        while (true) {
          const std::size_t i = cursor.fetch_add(1);
          if (i >= selected.size()) break;
          report.results[i] = run_spec(*selected[i], config);
        }
      });
    }
    for (std::thread& worker : workers) worker.join();
  }

  for (const ClaimResult& r : report.results) {
    switch (r.status) {
      case ClaimStatus::kPass: ++report.pass; break;
      case ClaimStatus::kFail: ++report.fail; break;
      case ClaimStatus::kError: ++report.error; break;
    }
  }
  return report;
}

nlohmann::ordered_json config_to_json(const ClaimConfig& config) {
  return ordered_json{{"prefix_length", config.prefix_length},
                      {"confirm_length", config.confirm_length},
                      {"max_m", config.max_m},
                      {"closure_step_max_n", config.closure_step_max_n},
                      {"decompose_max_p", config.decompose_max_p},
                      {"decompose_max_n", config.decompose_max_n},
                      {"t_factor_generations", config.t_factor_generations},
                      {"t_factor_length", config.t_factor_length},
                      {"length_cap", config.length_cap},
                      {"jobs", config.jobs}};
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  ordered_json results = ordered_json::array();
  for (const ClaimResult& r : report.results) {
    results.push_back(ordered_json{{"id", r.id},
                                   {"description", r.description},
                                   {"status", to_string(r.status)},
                                   {"kind", to_string(r.kind)},
                                   {"parameters", r.parameters},
                                   {"details", r.details},
                                   {"runtime_ms", r.runtime_ms}});
  }
  return ordered_json{{"version", "1"},
                      {"config", config_to_json(report.config)},
                      {"results", std::move(results)},
                      {"summary", ordered_json{{"pass", report.pass},
                                               {"fail", report.fail},
                                               {"error", report.error}}}};
}

std::string render_report_text(const VerificationReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(5) << "id" << std::setw(7) << "status"
     << std::setw(10) << "kind" << std::right << std::setw(12) << "time_ms"
     << "  summary\n";
  for (const ClaimResult& r : report.results) {
    std::string summary;
    if (r.details.contains("summary")) {
      summary = r.details["summary"].get<std::string>();
    }
    os << std::left << std::setw(5) << r.id << std::setw(7)
       << to_string(r.status) << std::setw(10) << to_string(r.kind)
       << std::right << std::setw(12) << std::fixed << std::setprecision(1)
       << r.runtime_ms << "  " << summary << "\n";
  }
  os << "summary: " << report.pass << " pass, " << report.fail << " fail, "
     << report.error << " error\n";
  return os.str();
}

int exit_code_for(const VerificationReport& report) {
  if (report.error > 0) return 3;
  if (report.fail > 0) return 1;
  return 0;
}

}  // namespace revpal
