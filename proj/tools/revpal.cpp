// revpal - build prefixes of the self-similar words x, y, z, t, index them,
// and verify the structural claims about their factors and palindromes.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "revpal/analysis.hpp"
#include "revpal/claims.hpp"
#include "revpal/generators.hpp"
#include "revpal/palindromic_tree.hpp"
#include "revpal/word.hpp"

namespace {

using nlohmann::ordered_json;
using namespace revpal;

constexpr std::size_t kDefaultPrefixLength = std::size_t{1} << 20;

struct CommonOptions {
  std::string family = "x";
  std::size_t length = kDefaultPrefixLength;
  std::string format = "text";
  std::string output_path;
  std::size_t length_cap = kDefaultLengthCap;
};

Word family_prefix(const std::string& family, std::size_t length,
                   std::size_t cap) {
  if (family == "x") return prefix_of_limit(family_x(), length, cap);
  if (family == "z") return prefix_of_limit(family_z(), length, cap);
  if (family == "t") return prefix_of_limit(family_t(), length, cap);
  if (family == "y") return prefix_of_morphic(word_y(), length, cap);
  if (family == "gx") return prefix_of_morphic(word_gx(), length, cap);
  if (family == "ft") return prefix_of_morphic(word_ft(), length, cap);
  throw ParameterError("unknown family: " + family);
}

Word family_generation(const std::string& family, int n, std::size_t cap) {
  if (family == "x") return build_generation(family_x(), n, cap);
  if (family == "z") return build_generation(family_z(), n, cap);
  if (family == "t") return build_generation(family_t(), n, cap);
  if (family == "y") return morphic_generation(word_y(), n, cap);
  if (family == "gx") return morphic_generation(word_gx(), n, cap);
  if (family == "ft") return morphic_generation(word_ft(), n, cap);
  throw ParameterError("unknown family: " + family);
}

const RecursiveFamily& recursive_family(const std::string& family) {
  if (family == "x") return family_x();
  if (family == "z") return family_z();
  if (family == "t") return family_t();
  throw ParameterError("family " + family +
                       " is not a recursive family (use x, z or t)");
}

void emit(const CommonOptions& opts, const std::string& text) {
  if (opts.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.output_path, std::ios::binary);
  if (!out) {
    throw ParameterError("cannot open output file: " + opts.output_path);
  }
  out << text;
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

// --- subcommand bodies; each returns the process exit code -----------------

int run_gen(const CommonOptions& opts, bool has_generation, int generation) {
  const Word w = has_generation
                     ? family_generation(opts.family, generation, opts.length_cap)
                     : family_prefix(opts.family, opts.length, opts.length_cap);
  if (opts.format == "json") {
    ordered_json j{{"family", opts.family}};
    if (has_generation) {
      j["generation"] = generation;
    } else {
      j["length"] = w.size();
    }
    j["word"] = w.str();
    emit(opts, dump_json(j));
  } else {
    emit(opts, w.str() + "\n");
  }
  return 0;
}

int run_palindromes(const CommonOptions& opts, bool list, bool count,
                    bool max_len) {
  const Word w = family_prefix(opts.family, opts.length, opts.length_cap);
  const PalindromicTree tree(w);
  if (opts.format == "json") {
    ordered_json j{{"family", opts.family}, {"length", w.size()}};
    if (list) {
      std::vector<std::string> pals;
      for (const Word& p : tree.palindromic_factors()) pals.push_back(p.str());
      j["palindromes"] = pals;
    } else if (count) {
      j["count"] = tree.distinct_palindrome_count();
    } else if (max_len) {
      j["max_length"] = tree.max_palindrome_length();
    }
    emit(opts, dump_json(j));
    return 0;
  }
  std::ostringstream os;
  if (list) {
    for (const Word& p : tree.palindromic_factors()) os << p << "\n";
  } else if (count) {
    os << tree.distinct_palindrome_count() << "\n";
  } else if (max_len) {
    os << tree.max_palindrome_length() << "\n";
  }
  emit(opts, os.str());
  return 0;
}

int run_factors(const CommonOptions& opts, int m, bool list) {
  const Word w = family_prefix(opts.family, opts.length, opts.length_cap);
  const FactorSet fs = factor_set(w, m);
  if (opts.format == "json") {
    ordered_json j{
        {"family", opts.family}, {"length", w.size()}, {"m", m}};
    if (list) {
      std::vector<std::string> words;
      for (const Word& f : fs.words()) words.push_back(f.str());
      j["factors"] = words;
    } else {
      j["count"] = fs.size();
    }
    emit(opts, dump_json(j));
    return 0;
  }
  std::ostringstream os;
  if (list) {
    for (const Word& f : fs.words()) os << f << "\n";
  } else {
    os << fs.size() << "\n";
  }
  emit(opts, os.str());
  return 0;
}

int run_closure(const CommonOptions& opts, int max_m) {
  const Word w = family_prefix(opts.family, opts.length, opts.length_cap);
  bool all_closed = true;
  ordered_json rows = ordered_json::array();
  std::ostringstream os;
  for (int m = 1; m <= max_m; ++m) {
    const ClosureCheckResult res = reversal_closure_check(w, m);
    all_closed = all_closed && res.closed;
    if (opts.format == "json") {
      ordered_json row{{"m", m},
                       {"factor_count", res.factor_count},
                       {"closed", res.closed}};
      if (res.witness) row["witness"] = res.witness->str();
      rows.push_back(std::move(row));
    } else {
      os << "m=" << m << " factors=" << res.factor_count
         << " closed=" << (res.closed ? "yes" : "no");
      if (res.witness) os << " witness=" << *res.witness;
      os << "\n";
    }
  }
  if (opts.format == "json") {
    emit(opts, dump_json(ordered_json{{"family", opts.family},
                                      {"length", w.size()},
                                      {"max_m", max_m},
                                      {"closed", all_closed},
                                      {"results", rows}}));
  } else {
    emit(opts, os.str());
  }
  return all_closed ? 0 : 1;
}

int run_recurrence(const CommonOptions& opts, int max_m,
                   std::size_t confirm) {
  const Word w = family_prefix(opts.family, opts.length, opts.length_cap);
  const RecurrenceProfile profile = recurrence_profile(w, max_m, confirm);
  if (opts.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& row : profile.rows) {
      rows.push_back(ordered_json{{"m", row.m},
                                  {"factor_count", row.factor_count},
                                  {"max_gap", row.max_gap},
                                  {"window_bound", row.window_bound},
                                  {"stable", row.stable}});
    }
    emit(opts, dump_json(ordered_json{{"family", opts.family},
                                      {"length", w.size()},
                                      {"confirm_length", confirm},
                                      {"profile", rows}}));
    return 0;
  }
  std::ostringstream os;
  os << "m factors max_gap window_bound stable\n";
  for (const auto& row : profile.rows) {
    os << row.m << " " << row.factor_count << " " << row.max_gap << " "
       << row.window_bound << " " << (row.stable ? "yes" : "no") << "\n";
  }
  emit(opts, os.str());
  return 0;
}

int run_decompose(const CommonOptions& opts, int p, int n) {
  const Decomposition d =
      decompose_generation(recursive_family(opts.family), p, n, opts.length_cap);
  if (opts.format == "json") {
    std::vector<std::string> seps;
    for (const Word& s : d.separators) seps.push_back(s.str());
    emit(opts, dump_json(ordered_json{{"family", opts.family},
                                      {"p", d.base_generation},
                                      {"n", n},
                                      {"target_generation", d.target_generation},
                                      {"separators", seps},
                                      {"valid", d.valid}}));
  } else {
    std::ostringstream os;
    os << "family=" << opts.family << " p=" << p << " n=" << n
       << " separators=";
    for (std::size_t i = 0; i < d.separators.size(); ++i) {
      if (i != 0) os << ",";
      os << d.separators[i];
    }
    os << " valid=" << (d.valid ? "yes" : "no") << "\n";
    emit(opts, os.str());
  }
  return d.valid ? 0 : 1;
}

int run_verify(const CommonOptions& opts, const std::vector<std::string>& ids,
               const ClaimConfig& config) {
  const VerificationReport report = run_all(config, ids);
  if (opts.format == "json") {
    emit(opts, dump_json(report_to_json(report)));
  } else {
    emit(opts, render_report_text(report));
  }
  return exit_code_for(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"revpal: generators, indexes and claim verification for the "
               "self-similar words x, y, z and t"};
  app.require_subcommand(1);

  const std::vector<std::string> families{"x", "y", "z", "t", "gx", "ft"};
  CommonOptions opts;
  app.add_option("--max-length", opts.length_cap,
                 "Cap on constructed word lengths")
      ->envname("REVPAL_MAX_LENGTH")
      ->capture_default_str();

  auto add_common = [&](CLI::App* cmd, bool with_length = true) {
    cmd->fallthrough();  // lets --max-length appear after the subcommand
    cmd->add_option("--family", opts.family, "Word to operate on")
        ->required()
        ->check(CLI::IsMember(families));
    if (with_length) {
      cmd->add_option("--length", opts.length, "Prefix length")
          ->capture_default_str();
    }
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", opts.output_path, "Write output to a file");
  };

  // gen
  auto* gen = app.add_subcommand("gen", "Emit a generation or a limit prefix");
  int generation = 0;
  auto* gen_generation =
      gen->add_option("--generation", generation, "Generation index n");
  add_common(gen);

  // palindromes
  auto* palindromes =
      app.add_subcommand("palindromes", "Distinct palindromic factors");
  bool pal_list = false;
  bool pal_count = false;
  bool pal_max = false;
  auto* o_list = palindromes->add_flag("--list", pal_list, "List the factors");
  auto* o_count = palindromes->add_flag("--count", pal_count, "Print the count");
  auto* o_max =
      palindromes->add_flag("--max-len", pal_max, "Print the maximum length");
  o_list->excludes(o_count)->excludes(o_max);
  o_count->excludes(o_max);
  add_common(palindromes);

  // factors
  auto* factors = app.add_subcommand("factors", "Distinct factors of length m");
  int factor_m = 1;
  bool factors_list = false;
  factors->add_option("--m", factor_m, "Factor length")->required();
  factors->add_flag("--list", factors_list, "List instead of counting");
  add_common(factors);

  // closure
  auto* closure =
      app.add_subcommand("closure", "Reversal closure of the factor sets");
  int closure_max_m = 20;
  closure->add_option("--max-m", closure_max_m, "Check factor lengths 1..m")
      ->capture_default_str();
  add_common(closure);

  // recurrence
  auto* recurrence =
      app.add_subcommand("recurrence", "Occurrence-gap recurrence profile");
  int rec_max_m = 20;
  std::size_t rec_confirm = 0;
  recurrence->add_option("--max-m", rec_max_m, "Profile factor lengths 1..m")
      ->capture_default_str();
  recurrence->add_option("--confirm", rec_confirm,
                         "Confirm prefix length (default: half the length)");
  add_common(recurrence);

  // decompose
  auto* decompose = app.add_subcommand(
      "decompose", "Split generation p+n into blocks of generation p");
  int dec_p = 0;
  int dec_n = 1;
  decompose->add_option("--p", dec_p, "Base generation")->required();
  decompose->add_option("--n", dec_n, "Doubling depth")->required();
  add_common(decompose, /*with_length=*/false);

  // verify
  auto* verify = app.add_subcommand("verify", "Run the claim registry");
  verify->fallthrough();
  std::vector<std::string> claim_filter;
  ClaimConfig claim_config;
  verify->add_option("--claims", claim_filter,
                     "Comma-separated claim ids (default: all)")
      ->delimiter(',');
  verify->add_option("--prefix-length", claim_config.prefix_length,
                     "Evidence prefix length")
      ->capture_default_str();
  verify->add_option("--confirm-length", claim_config.confirm_length,
                     "Confirmation prefix length")
      ->capture_default_str();
  verify->add_option("--max-m", claim_config.max_m,
                     "Factor lengths for closure/recurrence claims")
      ->capture_default_str();
  verify->add_option("--jobs", claim_config.jobs, "Concurrent claim workers")
      ->capture_default_str();
  verify->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify->add_option("--output", opts.output_path, "Write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      const bool has_generation = gen_generation->count() > 0;
      const bool has_length = gen->count("--length") > 0;
      if (has_generation == has_length) {
        std::cerr << "gen needs exactly one of --generation or --length\n";
        return 2;
      }
      return run_gen(opts, has_generation, generation);
    }
    if (palindromes->parsed()) {
      if (!pal_list && !pal_count && !pal_max) pal_count = true;
      return run_palindromes(opts, pal_list, pal_count, pal_max);
    }
    if (factors->parsed()) return run_factors(opts, factor_m, factors_list);
    if (closure->parsed()) return run_closure(opts, closure_max_m);
    if (recurrence->parsed()) {
      if (rec_confirm == 0) rec_confirm = opts.length / 2;
      return run_recurrence(opts, rec_max_m, rec_confirm);
    }
    if (decompose->parsed()) return run_decompose(opts, dec_p, dec_n);
    if (verify->parsed()) {
      claim_config.length_cap = opts.length_cap;
      return run_verify(opts, claim_filter, claim_config);
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
