#pragma once

#include <cstdint>
#include <vector>

#include "revpal/word.hpp"

namespace revpal {

/// A letter-to-word substitution, extended to words by concatenation.
/// Every image must be nonempty (the morphisms here are nonerasing).
class Morphism {
 public:
  /// images[a] is the image of letter a; the source alphabet size is the
  /// number of images, the target alphabet size that of the images.
  explicit Morphism(std::vector<Word> images);

  int source_alphabet_size() const { return source_alphabet_size_; }
  int target_alphabet_size() const { return target_alphabet_size_; }

  /// Throws AlphabetError for a letter outside the source alphabet.
  const Word& image(Letter a) const;

  std::size_t min_image_length() const { return min_image_length_; }
  std::size_t max_image_length() const { return max_image_length_; }

  /// Length of the image of w, i.e. the sum of the image lengths.
  std::size_t expanded_length(const Word& w) const;

 private:
  std::vector<Word> images_;
  std::uint8_t source_alphabet_size_;
  std::uint8_t target_alphabet_size_;
  std::size_t min_image_length_;
  std::size_t max_image_length_;
};

/// Image of w, the concatenation image(w[0]) ... image(w[n-1]).
Word apply_morphism(const Morphism& m, const Word& w);

/// h: 0->101, 1->1001, 2->10001, 3->100001.  Quaternary to binary; every
/// image is a palindrome and h commutes with reversal.
const Morphism& morphism_h();

/// g: 0,2 -> 0 and 1,3 -> 1, the letterwise projection onto {0,1}.
const Morphism& morphism_g();

/// f: 0 -> 01, 1 -> 10.
const Morphism& morphism_f();

}  // namespace revpal
