#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "revpal/morphism.hpp"
#include "revpal/word.hpp"

using namespace revpal;
using revpal::testing::random_word;

TEST_CASE("word construction validates letters and alphabet") {
  CHECK_THROWS_AS(Word({0, 2}, 2), AlphabetError);
  CHECK_THROWS_AS(Word({0, 1}, 3), ParameterError);
  CHECK_THROWS_AS(Word::parse("0a1", 2), ParameterError);
  CHECK_THROWS_AS(Word::parse("04", 4), ParameterError);

  const Word w = Word::parse("0123");
  CHECK(w.alphabet_size() == 4);
  CHECK(w.size() == 4);
  CHECK(Word::parse("0101").alphabet_size() == 2);
  CHECK(Word::parse("").empty());
  CHECK(Word::parse("012310", 4).str() == "012310");
}

TEST_CASE("reverse") {
  CHECK(reverse(Word::parse("01000")) == Word::parse("00010"));
  CHECK(reverse(Word::parse("")) == Word::parse(""));
  CHECK(reverse(Word::parse("012310")) == Word::parse("013210"));
}

TEST_CASE("reverse_complement") {
  CHECK(reverse_complement(Word::parse("0", 2)) == Word::parse("1", 2));
  CHECK(reverse_complement(Word::parse("001", 2)) == Word::parse("011", 2));
  CHECK(reverse_complement(Word::parse("", 2)) == Word::parse("", 2));
  CHECK_THROWS_AS(reverse_complement(Word::parse("01", 4)), AlphabetError);
}

TEST_CASE("is_palindrome") {
  CHECK(is_palindrome(Word::parse("1001")));
  CHECK_FALSE(is_palindrome(Word::parse("01")));
  CHECK(is_palindrome(Word::parse("")));
  CHECK(is_palindrome(Word::parse("0", 2)));
}

TEST_CASE("apply_morphism fixtures") {
  CHECK(apply_morphism(morphism_h(), Word::parse("0", 4)) ==
        Word::parse("101"));
  CHECK(apply_morphism(morphism_h(), Word::parse("", 4)) == Word::parse(""));
  CHECK(apply_morphism(morphism_f(), Word::parse("0010011", 2)) ==
        Word::parse("01011001011010"));
  // letters outside the source alphabet are rejected
  CHECK_THROWS_AS(apply_morphism(morphism_f(), Word::parse("02", 4)),
                  AlphabetError);
}

TEST_CASE("morphism construction rejects empty images") {
  CHECK_THROWS_AS(Morphism({Word::parse("01", 2), Word::parse("", 2)}),
                  ParameterError);
  CHECK_THROWS_AS(Morphism({Word::parse("01", 2)}), ParameterError);
}

TEST_CASE("word ordering is length then lexicographic") {
  CHECK(Word::parse("11") < Word::parse("000"));
  CHECK(Word::parse("01") < Word::parse("10"));
  CHECK_FALSE(Word::parse("10") < Word::parse("10"));
}

TEST_CASE("concat requires matching alphabets") {
  CHECK(concat(Word::parse("01", 2), Word::parse("10", 2)) ==
        Word::parse("0110", 2));
  CHECK_THROWS_AS(concat(Word::parse("01", 2), Word::parse("01", 4)),
                  ParameterError);
}

TEST_CASE("reversal is an involution") {
  std::mt19937 rng(20260808);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(rng, 200, i % 2 == 0 ? 2 : 4);
    CHECK(reverse(reverse(w)) == w);
  }
}

TEST_CASE("reverse_complement is an involution on binary words") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(rng, 200, 2);
    CHECK(reverse_complement(reverse_complement(w)) == w);
  }
}

TEST_CASE("h commutes with reversal and maps letters to palindromes") {
  for (Letter a = 0; a < 4; ++a) {
    CHECK(is_palindrome(morphism_h().image(a)));
  }
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(rng, 200, 4);
    CHECK(apply_morphism(morphism_h(), reverse(w)) ==
          reverse(apply_morphism(morphism_h(), w)));
  }
}

TEST_CASE("morphism output length is the sum of image lengths") {
  std::mt19937 rng(31);
  for (int i = 0; i < 100; ++i) {
    const Word w = random_word(rng, 200, 4);
    std::size_t expected = 0;
    for (const Letter a : w.letters()) {
      expected += morphism_h().image(a).size();
    }
    CHECK(apply_morphism(morphism_h(), w).size() == expected);
    CHECK(morphism_h().expanded_length(w) == expected);
  }
}

TEST_CASE("parse and str round-trip") {
  std::mt19937 rng(1234);
  for (int i = 0; i < 100; ++i) {
    const Word w = random_word(rng, 300, 4);
    CHECK(Word::parse(w.str(), 4) == w);
  }
}
