#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "revpal/generators.hpp"
#include "revpal/word.hpp"

namespace revpal {

/// A factor of length <= 64 packed at 2 bits per letter, earliest letter in
/// the most significant position, so numeric order is lexicographic order for
/// factors of equal length.
struct PackedFactor {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  friend bool operator==(const PackedFactor&, const PackedFactor&) = default;
  friend auto operator<=>(const PackedFactor&, const PackedFactor&) = default;
};

struct PackedFactorHash {
  std::size_t operator()(const PackedFactor& f) const noexcept {
    constexpr auto mix = [](std::uint64_t x) {
      x += 0x9e3779b97f4a7c15ULL;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      return x ^ (x >> 31);
    };
    return static_cast<std::size_t>(mix(f.lo ^ mix(f.hi)));
  }
};

/// Slides the window one letter to the right; m is the window length.
PackedFactor packed_push(PackedFactor v, Letter a, int m);

/// Packs the whole span (size <= 64).
PackedFactor pack_word(std::span<const Letter> letters);

/// Inverse of pack_word for a factor of length m.
Word unpack_word(PackedFactor f, int m, int alphabet_size);

/// Maximum factor length the packed representation supports.
inline constexpr int kMaxFactorLength = 64;

/// The distinct factors of one length of a source word, stored packed.
class FactorSet {
 public:
  /// Throws ParameterError unless 1 <= m <= min(|w|, 64).
  FactorSet(const Word& w, int m);

  int factor_length() const { return factor_length_; }
  int alphabet_size() const { return alphabet_size_; }
  std::size_t source_prefix_length() const { return source_prefix_length_; }
  std::size_t size() const { return factors_.size(); }

  bool contains(const PackedFactor& f) const { return factors_.count(f) != 0; }
  bool contains(const Word& u) const;

  /// Factors as words, sorted lexicographically.
  std::vector<Word> words() const;

  const std::unordered_set<PackedFactor, PackedFactorHash>& packed() const {
    return factors_;
  }

  /// Same factor length and same factor set (source lengths may differ).
  friend bool operator==(const FactorSet& a, const FactorSet& b);

 private:
  int factor_length_;
  int alphabet_size_;
  std::size_t source_prefix_length_;
  std::unordered_set<PackedFactor, PackedFactorHash> factors_;
};

FactorSet factor_set(const Word& w, int m);

struct ClosureCheckResult {
  bool closed = false;
  /// Lexicographically least factor whose reversal is absent, when not closed.
  std::optional<Word> witness;
  int factor_length = 0;
  std::size_t factor_count = 0;
};

/// Is the factor set equal to its elementwise reversal?
ClosureCheckResult reversal_closure_check(const FactorSet& factors);
ClosureCheckResult reversal_closure_check(const Word& w, int m);

/// True iff reverse(w_n) is a factor of w_{n+1}; only meaningful for families
/// with the reverse transform (throws ParameterError otherwise).
bool closure_step_check(const RecursiveFamily& family, int n,
                        std::size_t length_cap = kDefaultLengthCap);

/// Occurrence-gap statistics per factor length, with a stability flag that
/// compares against the same computation on a shorter prefix.
struct RecurrenceProfile {
  struct Row {
    int m = 0;
    std::size_t factor_count = 0;
    std::size_t max_gap = 0;       // largest start-to-start gap over all factors
    std::size_t window_bound = 0;  // max_gap + m
    std::size_t confirm_factor_count = 0;
    std::size_t confirm_max_gap = 0;
    bool stable = false;
  };

  std::size_t prefix_length = 0;
  std::size_t confirm_length = 0;
  std::vector<Row> rows;
};

/// Throws ParameterError unless 1 <= max_m <= 64 and
/// 0 < confirm_prefix < |w|.
RecurrenceProfile recurrence_profile(const Word& w, int max_m,
                                     std::size_t confirm_prefix);

struct BlockFormResult {
  bool ok = false;
  std::size_t violation_index = 0;  // start of the offending 2-block
};

/// Checks membership in ((01+10)(23+32))^omega on a quaternary word: 2-blocks
/// at positions 0,4,8,... must be 01 or 10 and those at 2,6,10,... must be 23
/// or 32.  A trailing odd letter is ignored.
BlockFormResult block_form_check(const Word& w);

struct ForbiddenFactorResult {
  bool ok = false;
  std::optional<Word> witness;  // the offending aa or aba factor
  std::size_t position = 0;
};

/// Scans for factors aa and aba (any letters a, b); reports the leftmost,
/// shortest violation.
ForbiddenFactorResult forbidden_factor_check(const Word& w);

/// w_{p+n} split at the arithmetic positions implied by |w_p| and the
/// separator length: blocks must alternate w_p / reverse(w_p) and each of the
/// 2^n - 1 separators must be the family separator or its reversal.
struct Decomposition {
  int base_generation = 0;
  int target_generation = 0;
  std::vector<Word> separators;
  bool valid = false;
};

/// Throws ParameterError for n < 1 and StructuralError when the block layout
/// does not cover the target length.
Decomposition decompose_generation(const RecursiveFamily& family, int p, int n,
                                   std::size_t length_cap = kDefaultLengthCap);

struct PalindromeAbsenceResult {
  bool ok = false;
  std::optional<Word> witness;  // least palindrome of a forbidden length
};

/// True iff w has no palindromic factor whose length is in `lengths`.
PalindromeAbsenceResult palindrome_absence_check(
    const Word& w, std::span<const std::size_t> lengths);

}  // namespace revpal
