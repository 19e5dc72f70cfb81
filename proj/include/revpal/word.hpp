#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revpal/errors.hpp"

namespace revpal {

/// Letters are small integer codes; the alphabets in use are {0,1} and
/// {0,1,2,3}.
using Letter = std::uint8_t;

/// Default cap on constructed word lengths (one byte per letter, so this is
/// also a memory budget of 64 MiB per word).
inline constexpr std::size_t kDefaultLengthCap = std::size_t{1} << 26;

/// A finite word over a 2- or 4-letter alphabet.
///
/// Words are immutable after construction and every operator below returns a
/// fresh value, so they can be shared and queried across threads freely.
class Word {
 public:
  /// The empty binary word.
  Word() = default;

  /// Throws AlphabetError if a letter code is outside the alphabet, and
  /// ParameterError if the alphabet size is not 2 or 4.
  Word(std::vector<Letter> letters, int alphabet_size);

  /// Parses ASCII digits, e.g. "012310".
  static Word parse(std::string_view digits, int alphabet_size);

  /// Parses with the alphabet inferred: binary unless a letter above 1 occurs.
  static Word parse(std::string_view digits);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int alphabet_size() const { return alphabet_size_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }

  /// The first min(k, size()) letters.
  Word prefix(std::size_t k) const;

  /// ASCII digit rendering, one character per letter.
  std::string str() const;

  /// Equality compares letter sequences; the alphabet bound is metadata.
  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }

  /// Canonical enumeration order: by length, then lexicographic.
  friend bool operator<(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
  std::uint8_t alphabet_size_ = 2;
};

/// The word read right to left.
Word reverse(const Word& w);

/// Reverse then complement every letter (0 <-> 1).  Defined on binary words
/// only; throws AlphabetError otherwise.
Word reverse_complement(const Word& w);

/// True iff w equals its reversal.
bool is_palindrome(const Word& w);

/// Concatenation; both operands must share an alphabet size.
Word concat(const Word& a, const Word& b);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace revpal
