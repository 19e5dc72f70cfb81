#include "revpal/suffix_automaton.hpp"

namespace revpal {

namespace {
constexpr std::array<std::int32_t, 4> kNoTransitions{-1, -1, -1, -1};
}

SuffixAutomaton::SuffixAutomaton(const Word& w)
    : source_length_(w.size()), alphabet_size_(w.alphabet_size()) {
  states_.reserve(2 * w.size() + 2);
  states_.push_back(State{0, -1, kNoTransitions});
  for (const Letter c : w.letters()) {
    extend(c);
  }
}

void SuffixAutomaton::extend(Letter c) {
  const auto cur = static_cast<std::int32_t>(states_.size());
  states_.push_back(State{states_[last_].len + 1, -1, kNoTransitions});
  std::int32_t p = last_;
  while (p != -1 && states_[p].next[c] == -1) {
    states_[p].next[c] = cur;
    p = states_[p].link;
  }
  if (p == -1) {
    states_[cur].link = 0;
  } else {
    const std::int32_t q = states_[p].next[c];
    if (states_[p].len + 1 == states_[q].len) {
      states_[cur].link = q;
    } else {
      const auto clone = static_cast<std::int32_t>(states_.size());
      State cloned = states_[q];
      cloned.len = states_[p].len + 1;
      states_.push_back(cloned);
      while (p != -1 && states_[p].next[c] == q) {
        states_[p].next[c] = clone;
        p = states_[p].link;
      }
      states_[q].link = clone;
      states_[cur].link = clone;
    }
  }
  last_ = cur;
}

bool SuffixAutomaton::contains(const Word& u) const {
  std::int32_t s = 0;
  for (const Letter c : u.letters()) {
    s = states_[s].next[c];
    if (s == -1) return false;
  }
  return true;
}

std::uint64_t SuffixAutomaton::distinct_factor_count() const {
  std::uint64_t total = 0;
  for (std::size_t v = 1; v < states_.size(); ++v) {
    total += static_cast<std::uint64_t>(states_[v].len -
                                        states_[states_[v].link].len);
  }
  return total;
}

}  // namespace revpal
