#include "revpal/analysis.hpp"

#include <algorithm>
#include <unordered_map>

#include "revpal/palindromic_tree.hpp"
#include "revpal/suffix_automaton.hpp"

namespace revpal {

namespace {

void check_factor_length(const Word& w, int m) {
  if (m < 1 || static_cast<std::size_t>(m) > w.size() || m > kMaxFactorLength) {
    throw ParameterError("factor length " + std::to_string(m) +
                         " out of range: need 1 <= m <= min(" +
                         std::to_string(w.size()) + ", " +
                         std::to_string(kMaxFactorLength) + ")");
  }
}

PackedFactor packed_reverse(const PackedFactor& f, int m, int alphabet_size) {
  const Word u = unpack_word(f, m, alphabet_size);
  std::vector<Letter> rev(u.letters().rbegin(), u.letters().rend());
  return pack_word(rev);
}

}  // namespace

PackedFactor packed_push(PackedFactor v, Letter a, int m) {
  v.hi = (v.hi << 2) | (v.lo >> 62);
  v.lo = (v.lo << 2) | a;
  if (m <= 32) {
    v.hi = 0;
    if (m < 32) v.lo &= (std::uint64_t{1} << (2 * m)) - 1;
  } else if (m < 64) {
    v.hi &= (std::uint64_t{1} << (2 * m - 64)) - 1;
  }
  return v;
}

PackedFactor pack_word(std::span<const Letter> letters) {
  const int m = static_cast<int>(letters.size());
  PackedFactor v;
  for (const Letter a : letters) {
    v = packed_push(v, a, m);
  }
  return v;
}

Word unpack_word(PackedFactor f, int m, int alphabet_size) {
  std::vector<Letter> out(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const int bit = 2 * (m - 1 - i);
    const std::uint64_t chunk = bit >= 64 ? f.hi >> (bit - 64) : f.lo >> bit;
    out[static_cast<std::size_t>(i)] = static_cast<Letter>(chunk & 3);
  }
  return Word(std::move(out), alphabet_size);
}

FactorSet::FactorSet(const Word& w, int m)
    : factor_length_(m),
      alphabet_size_(w.alphabet_size()),
      source_prefix_length_(w.size()) {
  check_factor_length(w, m);
  PackedFactor v;
  const auto s = w.letters();
  for (std::size_t i = 0; i < s.size(); ++i) {
    v = packed_push(v, s[i], m);
    if (i + 1 >= static_cast<std::size_t>(m)) factors_.insert(v);
  }
}

bool FactorSet::contains(const Word& u) const {
  if (u.size() != static_cast<std::size_t>(factor_length_)) return false;
  return contains(pack_word(u.letters()));
}

std::vector<Word> FactorSet::words() const {
  std::vector<PackedFactor> packed(factors_.begin(), factors_.end());
  std::sort(packed.begin(), packed.end());
  std::vector<Word> out;
  out.reserve(packed.size());
  for (const PackedFactor& f : packed) {
    out.push_back(unpack_word(f, factor_length_, alphabet_size_));
  }
  return out;
}

bool operator==(const FactorSet& a, const FactorSet& b) {
  return a.factor_length_ == b.factor_length_ && a.factors_ == b.factors_;
}

FactorSet factor_set(const Word& w, int m) { return FactorSet(w, m); }

ClosureCheckResult reversal_closure_check(const FactorSet& factors) {
  ClosureCheckResult result;
  result.factor_length = factors.factor_length();
  result.factor_count = factors.size();
  std::optional<PackedFactor> least_violation;
  for (const PackedFactor& f : factors.packed()) {
    const PackedFactor rev =
        packed_reverse(f, factors.factor_length(), factors.alphabet_size());
    if (!factors.contains(rev) && (!least_violation || f < *least_violation)) {
      least_violation = f;
    }
  }
  result.closed = !least_violation.has_value();
  if (least_violation) {
    result.witness = unpack_word(*least_violation, factors.factor_length(),
                                 factors.alphabet_size());
  }
  return result;
}

ClosureCheckResult reversal_closure_check(const Word& w, int m) {
  return reversal_closure_check(factor_set(w, m));
}

bool closure_step_check(const RecursiveFamily& family, int n,
                        std::size_t length_cap) {
  if (family.transform() != Transform::kReverse) {
    throw ParameterError(
        "closure step check only applies to reverse-transform families");
  }
  const Word wn = build_generation(family, n, length_cap);
  const Word wn1 = build_generation(family, n + 1, length_cap);
  return SuffixAutomaton(wn1).contains(reverse(wn));
}

RecurrenceProfile recurrence_profile(const Word& w, int max_m,
                                     std::size_t confirm_prefix) {
  if (max_m < 1 || max_m > kMaxFactorLength) {
    throw ParameterError("max factor length " + std::to_string(max_m) +
                         " out of range 1..64");
  }
  if (confirm_prefix == 0 || confirm_prefix >= w.size()) {
    throw ParameterError(
        "confirm prefix must be positive and shorter than the word");
  }

  RecurrenceProfile profile;
  profile.prefix_length = w.size();
  profile.confirm_length = confirm_prefix;
  profile.rows.reserve(static_cast<std::size_t>(max_m));
  const auto s = w.letters();

  for (int m = 1; m <= max_m; ++m) {
    std::unordered_map<PackedFactor, std::size_t, PackedFactorHash> last_start;
    RecurrenceProfile::Row row;
    row.m = m;
    std::size_t max_gap = 0;
    bool snapshotted = false;

    PackedFactor v;
    for (std::size_t i = 0; i < s.size(); ++i) {
      v = packed_push(v, s[i], m);
      if (i + 1 < static_cast<std::size_t>(m)) continue;
      const std::size_t start = i + 1 - static_cast<std::size_t>(m);
      // Windows fully inside the confirm prefix satisfy start + m <= confirm.
      if (!snapshotted && start + static_cast<std::size_t>(m) > confirm_prefix) {
        row.confirm_factor_count = last_start.size();
        row.confirm_max_gap = max_gap;
        snapshotted = true;
      }
      const auto [it, inserted] = last_start.try_emplace(v, start);
      if (!inserted) {
        max_gap = std::max(max_gap, start - it->second);
        it->second = start;
      }
    }

    row.factor_count = last_start.size();
    row.max_gap = max_gap;
    row.window_bound = max_gap + static_cast<std::size_t>(m);
    row.stable = row.factor_count > 0 &&
                 row.factor_count == row.confirm_factor_count &&
                 row.max_gap == row.confirm_max_gap;
    profile.rows.push_back(row);
  }
  return profile;
}

BlockFormResult block_form_check(const Word& w) {
  if (w.alphabet_size() != 4) {
    throw ParameterError("block form check expects a quaternary word");
  }
  const auto s = w.letters();
  for (std::size_t i = 0; i + 1 < s.size(); i += 2) {
    const Letter a = s[i];
    const Letter b = s[i + 1];
    const bool binary_slot = i % 4 == 0;
    const bool ok = binary_slot ? (a == 0 && b == 1) || (a == 1 && b == 0)
                                : (a == 2 && b == 3) || (a == 3 && b == 2);
    if (!ok) return BlockFormResult{false, i};
  }
  return BlockFormResult{true, 0};
}

ForbiddenFactorResult forbidden_factor_check(const Word& w) {
  const auto s = w.letters();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i + 1 < s.size() && s[i] == s[i + 1]) {
      return ForbiddenFactorResult{
          false, Word({s[i], s[i]}, w.alphabet_size()), i};
    }
    if (i + 2 < s.size() && s[i] == s[i + 2]) {
      return ForbiddenFactorResult{
          false, Word({s[i], s[i + 1], s[i]}, w.alphabet_size()), i};
    }
  }
  return ForbiddenFactorResult{true, std::nullopt, 0};
}

Decomposition decompose_generation(const RecursiveFamily& family, int p, int n,
                                   std::size_t length_cap) {
  if (n < 1) {
    throw ParameterError("decomposition depth n must be at least 1");
  }
  if (family.transform() != Transform::kReverse) {
    throw ParameterError(
        "decomposition only applies to reverse-transform families");
  }
  const Word base = build_generation(family, p, length_cap);
  const Word target = build_generation(family, p + n, length_cap);
  const Word reversed_base = reverse(base);

  const std::size_t block_count = std::size_t{1} << n;
  const std::size_t bs = base.size();
  const std::size_t ss = family.separator().size();
  if (block_count * bs + (block_count - 1) * ss != target.size()) {
    throw StructuralError("generation " + std::to_string(p + n) +
                          " cannot be split into 2^" + std::to_string(n) +
                          " blocks of generation " + std::to_string(p));
  }

  Decomposition d;
  d.base_generation = p;
  d.target_generation = p + n;
  d.separators.reserve(block_count - 1);
  const auto s = target.letters();
  const Word rev_sep = reverse(family.separator());

  bool blocks_ok = true;
  bool separators_ok = true;
  for (std::size_t i = 0; i < block_count; ++i) {
    const std::size_t offset = i * (bs + ss);
    const Word& expected = i % 2 == 0 ? base : reversed_base;
    if (!std::equal(expected.letters().begin(), expected.letters().end(),
                    s.begin() + static_cast<std::ptrdiff_t>(offset))) {
      blocks_ok = false;
    }
    if (i + 1 < block_count) {
      const auto sep_begin = s.begin() + static_cast<std::ptrdiff_t>(offset + bs);
      Word sep(std::vector<Letter>(sep_begin,
                                   sep_begin + static_cast<std::ptrdiff_t>(ss)),
               family.alphabet_size());
      if (!(sep == family.separator() || sep == rev_sep)) separators_ok = false;
      d.separators.push_back(std::move(sep));
    }
  }
  d.valid = blocks_ok && separators_ok;
  return d;
}

PalindromeAbsenceResult palindrome_absence_check(
    const Word& w, std::span<const std::size_t> lengths) {
  const PalindromicTree tree(w);
  std::vector<std::size_t> sorted(lengths.begin(), lengths.end());
  std::sort(sorted.begin(), sorted.end());
  for (const std::size_t len : sorted) {
    const auto found = tree.palindromes_of_length(len);
    if (!found.empty()) {
      return PalindromeAbsenceResult{false, found.front()};
    }
  }
  return PalindromeAbsenceResult{true, std::nullopt};
}

}  // namespace revpal
