#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "revpal/word.hpp"

namespace revpal {

/// Eertree: one node per distinct palindromic factor of the source word,
/// built online in linear time.  Immutable once constructed.
class PalindromicTree {
 public:
  struct Node {
    std::int32_t len;     // palindrome length; -1 for the imaginary root
    std::int32_t link;    // longest proper palindromic suffix
    std::int32_t parent;  // node this one extends: word = letter.parent.letter
    Letter letter;
    std::array<std::int32_t, 4> next;
  };

  explicit PalindromicTree(const Word& w);

  /// Number of distinct nonempty palindromic factors.
  std::size_t distinct_palindrome_count() const { return nodes_.size() - 2; }

  /// All distinct nonempty palindromic factors, sorted by (length, lex).
  std::vector<Word> palindromic_factors() const;

  /// Palindromic factors of exactly the given length, sorted.
  std::vector<Word> palindromes_of_length(std::size_t len) const;

  /// Longest palindromic factor length, or 0 when there is none.
  std::size_t max_palindrome_length() const { return max_length_; }

  bool has_palindrome_of_length(std::size_t len) const;

  std::size_t source_length() const { return source_length_; }
  int alphabet_size() const { return alphabet_size_; }

 private:
  Word node_word(std::int32_t v) const;

  std::vector<Node> nodes_;
  std::size_t max_length_ = 0;
  std::size_t source_length_;
  int alphabet_size_;
};

}  // namespace revpal
