#include "revpal/generators.hpp"

#include <limits>
#include <utility>

namespace revpal {

namespace {

using U128 = unsigned __int128;

std::string u128_to_string(U128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return std::string(s.rbegin(), s.rend());
}

// |w_n| as a 128-bit value, or throws for absurd n.
U128 generation_length_wide(const RecursiveFamily& f, int n) {
  if (n < 0) {
    throw ParameterError("generation index must be nonnegative, got " +
                         std::to_string(n));
  }
  if (n > 110) {
    throw ResourceLimitError("generation " + std::to_string(n) + " of family " +
                             f.name() + " is beyond any representable length");
  }
  const U128 block = f.seed().size() + f.separator().size();
  return (block << n) - static_cast<U128>(f.separator().size());
}

}  // namespace

Word apply_transform(Transform t, const Word& w) {
  return t == Transform::kReverse ? reverse(w) : reverse_complement(w);
}

RecursiveFamily::RecursiveFamily(std::string name, Word seed, Word separator,
                                 Transform transform)
    : name_(std::move(name)),
      seed_(std::move(seed)),
      separator_(std::move(separator)),
      transform_(transform) {
  if (seed_.alphabet_size() != separator_.alphabet_size()) {
    throw ParameterError("family seed and separator must share an alphabet");
  }
  if (transform_ == Transform::kReverseComplement &&
      seed_.alphabet_size() != 2) {
    throw AlphabetError(
        "reverse-complement families are only defined over the binary "
        "alphabet");
  }
  if (seed_.empty() && separator_.empty()) {
    throw ParameterError("family with empty seed and separator never grows");
  }
}

std::size_t RecursiveFamily::generation_length(int n) const {
  const U128 len = generation_length_wide(*this, n);
  if (len > std::numeric_limits<std::size_t>::max()) {
    throw ResourceLimitError("generation " + std::to_string(n) +
                             " of family " + name_ + " has length " +
                             u128_to_string(len) +
                             ", which is not representable");
  }
  return static_cast<std::size_t>(len);
}

Word build_generation(const RecursiveFamily& family, int n,
                      std::size_t length_cap) {
  const U128 wide = generation_length_wide(family, n);
  if (wide > length_cap) {
    throw ResourceLimitError(
        "generation " + std::to_string(n) + " of family " + family.name() +
        " has length " + u128_to_string(wide) + ", above the length cap of " +
        std::to_string(length_cap) + " letters");
  }
  const std::size_t total = static_cast<std::size_t>(wide);

  std::vector<Letter> out;
  out.reserve(total);
  out.insert(out.end(), family.seed().letters().begin(),
             family.seed().letters().end());
  const auto sep = family.separator().letters();
  const bool complemented = family.transform() == Transform::kReverseComplement;
  for (int step = 0; step < n; ++step) {
    const std::size_t gen = out.size();
    out.insert(out.end(), sep.begin(), sep.end());
    for (std::size_t i = gen; i-- > 0;) {
      out.push_back(complemented ? static_cast<Letter>(out[i] ^ 1) : out[i]);
    }
  }
  return Word(std::move(out), family.alphabet_size());
}

Word prefix_of_limit(const RecursiveFamily& family, std::size_t length,
                     std::size_t length_cap) {
  if (length > length_cap) {
    throw ResourceLimitError(
        "requested a prefix of " + std::to_string(length) +
        " letters of family " + family.name() + ", above the length cap of " +
        std::to_string(length_cap) + " letters");
  }

  std::vector<Letter> out;
  out.reserve(length);
  const auto seed = family.seed().letters();
  out.insert(out.end(), seed.begin(),
             seed.begin() +
                 static_cast<std::ptrdiff_t>(std::min(length, seed.size())));
  const auto sep = family.separator().letters();
  const bool complemented = family.transform() == Transform::kReverseComplement;

  // Invariant at the top of each pass: out is a full generation w_k.  The
  // final pass stops mid-append once `length` letters exist.
  while (out.size() < length) {
    const std::size_t gen = out.size();
    for (const Letter a : sep) {
      out.push_back(a);
      if (out.size() == length) return Word(std::move(out), family.alphabet_size());
    }
    for (std::size_t i = gen; i-- > 0;) {
      out.push_back(complemented ? static_cast<Letter>(out[i] ^ 1) : out[i]);
      if (out.size() == length) return Word(std::move(out), family.alphabet_size());
    }
  }
  return Word(std::move(out), family.alphabet_size());
}

MorphicWord::MorphicWord(std::string name, RecursiveFamily base,
                         Morphism morphism)
    : name_(std::move(name)),
      base_(std::move(base)),
      morphism_(std::move(morphism)) {
  if (morphism_.source_alphabet_size() != base_.alphabet_size()) {
    throw ParameterError(
        "morphism source alphabet must match the base family alphabet");
  }
}

Word prefix_of_morphic(const MorphicWord& mw, std::size_t length,
                       std::size_t length_cap) {
  if (length > length_cap) {
    throw ResourceLimitError(
        "requested a prefix of " + std::to_string(length) + " letters of " +
        mw.name() + ", above the length cap of " + std::to_string(length_cap) +
        " letters");
  }
  const Morphism& m = mw.morphism();
  if (length == 0) return Word({}, m.target_alphabet_size());

  // Images are nonempty, so this many base letters always suffice.
  const std::size_t base_needed =
      (length + m.min_image_length() - 1) / m.min_image_length();
  const Word base = prefix_of_limit(mw.base(), base_needed, length_cap);

  std::vector<Letter> out;
  out.reserve(length + m.max_image_length());
  for (const Letter a : base.letters()) {
    const auto img = m.image(a).letters();
    out.insert(out.end(), img.begin(), img.end());
    if (out.size() >= length) break;
  }
  out.resize(length);
  return Word(std::move(out), m.target_alphabet_size());
}

Word morphic_generation(const MorphicWord& mw, int n, std::size_t length_cap) {
  const Word base = build_generation(mw.base(), n, length_cap);
  const std::size_t total = mw.morphism().expanded_length(base);
  if (total > length_cap) {
    throw ResourceLimitError(
        "generation " + std::to_string(n) + " of " + mw.name() +
        " has length " + std::to_string(total) + ", above the length cap of " +
        std::to_string(length_cap) + " letters");
  }
  return apply_morphism(mw.morphism(), base);
}

const RecursiveFamily& family_x() {
  static const RecursiveFamily f("x", Word::parse("01", 4),
                                 Word::parse("23", 4), Transform::kReverse);
  return f;
}

const RecursiveFamily& family_z() {
  static const RecursiveFamily f("z", Word::parse("01", 2),
                                 Word::parse("01", 2), Transform::kReverse);
  return f;
}

const RecursiveFamily& family_t() {
  static const RecursiveFamily f("t", Word::parse("0", 2), Word::parse("0", 2),
                                 Transform::kReverseComplement);
  return f;
}

const MorphicWord& word_y() {
  static const MorphicWord w("y", family_x(), morphism_h());
  return w;
}

const MorphicWord& word_gx() {
  static const MorphicWord w("gx", family_x(), morphism_g());
  return w;
}

const MorphicWord& word_ft() {
  static const MorphicWord w("ft", family_t(), morphism_f());
  return w;
}

}  // namespace revpal
