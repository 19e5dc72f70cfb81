#include "revpal/word.hpp"

#include <algorithm>
#include <ostream>

namespace revpal {

namespace {

void check_alphabet_size(int alphabet_size) {
  if (alphabet_size != 2 && alphabet_size != 4) {
    throw ParameterError("alphabet size must be 2 or 4, got " +
                         std::to_string(alphabet_size));
  }
}

}  // namespace

Word::Word(std::vector<Letter> letters, int alphabet_size)
    : letters_(std::move(letters)),
      alphabet_size_(static_cast<std::uint8_t>(alphabet_size)) {
  check_alphabet_size(alphabet_size);
  for (const Letter a : letters_) {
    if (a >= alphabet_size_) {
      throw AlphabetError("letter code " + std::to_string(a) +
                          " outside alphabet of size " +
                          std::to_string(alphabet_size));
    }
  }
}

Word Word::parse(std::string_view digits, int alphabet_size) {
  check_alphabet_size(alphabet_size);
  std::vector<Letter> letters;
  letters.reserve(digits.size());
  for (const char c : digits) {
    if (c < '0' || c > '3') {
      throw ParameterError(std::string("invalid word character '") + c +
                           "', expected digits 0..3");
    }
    letters.push_back(static_cast<Letter>(c - '0'));
  }
  return Word(std::move(letters), alphabet_size);
}

Word Word::parse(std::string_view digits) {
  const bool quaternary =
      digits.find_first_of("23") != std::string_view::npos;
  return parse(digits, quaternary ? 4 : 2);
}

Word Word::prefix(std::size_t k) const {
  const std::size_t n = std::min(k, letters_.size());
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + n),
              alphabet_size_);
}

std::string Word::str() const {
  std::string s(letters_.size(), '0');
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    s[i] = static_cast<char>('0' + letters_[i]);
  }
  return s;
}

bool operator<(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.letters_.begin(), a.letters_.end(),
                                      b.letters_.begin(), b.letters_.end());
}

Word reverse(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(out), w.alphabet_size());
}

Word reverse_complement(const Word& w) {
  if (w.alphabet_size() != 2) {
    throw AlphabetError(
        "reverse-complement is only defined on binary words, alphabet size "
        "is " +
        std::to_string(w.alphabet_size()));
  }
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(static_cast<Letter>(*it ^ 1));
  }
  return Word(std::move(out), 2);
}

bool is_palindrome(const Word& w) {
  const auto s = w.letters();
  for (std::size_t i = 0, j = s.size(); i + 1 < j; ++i, --j) {
    if (s[i] != s[j - 1]) return false;
  }
  return true;
}

Word concat(const Word& a, const Word& b) {
  if (a.alphabet_size() != b.alphabet_size()) {
    throw ParameterError("cannot concatenate words over different alphabets");
  }
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters().begin(), a.letters().end());
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(out), a.alphabet_size());
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  for (const Letter a : w.letters()) {
    os << static_cast<char>('0' + a);
  }
  return os;
}

}  // namespace revpal
