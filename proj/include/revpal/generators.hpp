#pragma once

#include <string>

#include "revpal/morphism.hpp"
#include "revpal/word.hpp"

namespace revpal {

enum class Transform { kReverse, kReverseComplement };

Word apply_transform(Transform t, const Word& w);

/// A seed-and-separator doubling rule: w_0 = seed and
/// w_{n+1} = w_n . separator . transform(w_n).  Every generation is a prefix
/// of the next, so the family has a well-defined limit word.
class RecursiveFamily {
 public:
  RecursiveFamily(std::string name, Word seed, Word separator,
                  Transform transform);

  const std::string& name() const { return name_; }
  const Word& seed() const { return seed_; }
  const Word& separator() const { return separator_; }
  Transform transform() const { return transform_; }
  int alphabet_size() const { return seed_.alphabet_size(); }

  /// |w_n| = 2^n (|seed| + |separator|) - |separator|.  Throws
  /// ResourceLimitError when the value does not fit in size_t.
  std::size_t generation_length(int n) const;

 private:
  std::string name_;
  Word seed_;
  Word separator_;
  Transform transform_;
};

/// w_n, built by n doubling steps.  Throws ResourceLimitError (naming the
/// offending length) when |w_n| exceeds length_cap.
Word build_generation(const RecursiveFamily& family, int n,
                      std::size_t length_cap = kDefaultLengthCap);

/// First `length` letters of the family's limit word, built by iterated
/// doubling with a truncated final step; peak memory stays O(length).
Word prefix_of_limit(const RecursiveFamily& family, std::size_t length,
                     std::size_t length_cap = kDefaultLengthCap);

/// A morphic image of a recursive family's limit word.
class MorphicWord {
 public:
  MorphicWord(std::string name, RecursiveFamily base, Morphism morphism);

  const std::string& name() const { return name_; }
  const RecursiveFamily& base() const { return base_; }
  const Morphism& morphism() const { return morphism_; }

 private:
  std::string name_;
  RecursiveFamily base_;
  Morphism morphism_;
};

/// First `length` letters of morphism(base limit).  Expands only the
/// ceil(length / min-image-length) base letters that are needed.
Word prefix_of_morphic(const MorphicWord& mw, std::size_t length,
                       std::size_t length_cap = kDefaultLengthCap);

/// morphism(w_n) of the base family, cap-checked before expansion.
Word morphic_generation(const MorphicWord& mw, int n,
                        std::size_t length_cap = kDefaultLengthCap);

/// x: quaternary, seed 01, separator 23, reverse.
const RecursiveFamily& family_x();
/// z: binary, seed 01, separator 01, reverse.
const RecursiveFamily& family_z();
/// t: binary paperfolding, seed 0, separator 0, reverse-complement.
const RecursiveFamily& family_t();

/// y = h(x).
const MorphicWord& word_y();
/// g(x), the projection of x onto {0,1}.
const MorphicWord& word_gx();
/// f(t).
const MorphicWord& word_ft();

}  // namespace revpal
