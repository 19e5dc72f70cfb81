#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "revpal/word.hpp"

namespace revpal {

/// Minimal deterministic acceptor of all factors of one word, built online in
/// linear time.  Build once, then query from any number of threads.
class SuffixAutomaton {
 public:
  struct State {
    std::int32_t len;
    std::int32_t link;
    std::array<std::int32_t, 4> next;  // -1 = no transition
  };

  explicit SuffixAutomaton(const Word& w);

  /// True iff u is a factor of the source word (the empty word always is).
  bool contains(const Word& u) const;

  /// Number of distinct nonempty factors: sum over non-initial states of
  /// len(state) - len(link(state)).
  std::uint64_t distinct_factor_count() const;

  std::size_t state_count() const { return states_.size(); }
  std::size_t source_length() const { return source_length_; }
  int alphabet_size() const { return alphabet_size_; }
  const std::vector<State>& states() const { return states_; }

 private:
  void extend(Letter c);

  std::vector<State> states_;
  std::int32_t last_ = 0;
  std::size_t source_length_;
  int alphabet_size_;
};

}  // namespace revpal
