#include <doctest.h>

#include "oracles.hpp"
#include "revpal/generators.hpp"

using namespace revpal;
using revpal::testing::paperfolding_letter;

TEST_CASE("printed generations of x and z") {
  CHECK(build_generation(family_x(), 0).str() == "01");
  CHECK(build_generation(family_x(), 1).str() == "012310");
  CHECK(build_generation(family_x(), 2).str() == "01231023013210");
  CHECK(build_generation(family_x(), 3).str() ==
        "012310230132102301231032013210");
  CHECK(build_generation(family_z(), 1).str() == "010110");
  CHECK(build_generation(family_z(), 2).str() == "01011001011010");
  CHECK(build_generation(family_z(), 3).str() ==
        "010110010110100101011010011010");
}

TEST_CASE("paperfolding generations against the closed-form rule") {
  CHECK(build_generation(family_t(), 1).str() == "001");
  CHECK(build_generation(family_t(), 2).str() == "0010011");
  for (int n = 0; n <= 12; ++n) {
    const Word tn = build_generation(family_t(), n);
    for (std::size_t i = 0; i < tn.size(); ++i) {
      REQUIRE(tn[i] == paperfolding_letter(i));
    }
  }
}

TEST_CASE("generation length law") {
  for (int n = 0; n <= 20; ++n) {
    const std::size_t expected = (std::size_t{1} << (n + 2)) - 2;
    CHECK(family_x().generation_length(n) == expected);
    CHECK(family_z().generation_length(n) == expected);
    CHECK(family_t().generation_length(n) == (std::size_t{1} << (n + 1)) - 1);
  }
  CHECK(build_generation(family_x(), 10).size() ==
        family_x().generation_length(10));
}

TEST_CASE("each generation is a proper prefix of the next") {
  for (const RecursiveFamily* f : {&family_x(), &family_z(), &family_t()}) {
    Word prev = build_generation(*f, 0);
    for (int n = 1; n <= 10; ++n) {
      const Word next = build_generation(*f, n);
      REQUIRE(prev.size() < next.size());
      REQUIRE(next.prefix(prev.size()) == prev);
      prev = next;
    }
  }
}

TEST_CASE("reconstruction: w_{n+1} = w_n . s . transform(w_n)") {
  for (const RecursiveFamily* f : {&family_x(), &family_z(), &family_t()}) {
    for (int n = 0; n <= 8; ++n) {
      const Word wn = build_generation(*f, n);
      const Word expected =
          concat(concat(wn, f->separator()), apply_transform(f->transform(), wn));
      CHECK(build_generation(*f, n + 1) == expected);
    }
  }
}

TEST_CASE("prefix_of_limit fixtures") {
  CHECK(prefix_of_limit(family_x(), 6).str() == "012310");
  CHECK(prefix_of_limit(family_x(), 0).empty());
  CHECK(prefix_of_limit(family_z(), 0).empty());
  CHECK(prefix_of_limit(family_t(), 7).str() == "0010011");
}

TEST_CASE("limit prefixes agree with generations and nest") {
  for (const RecursiveFamily* f : {&family_x(), &family_z(), &family_t()}) {
    const Word w10 = build_generation(*f, 10);
    for (const std::size_t n : {std::size_t{1}, std::size_t{5}, std::size_t{17},
                                std::size_t{100}, std::size_t{1000}}) {
      const Word p = prefix_of_limit(*f, n);
      REQUIRE(p.size() == n);
      REQUIRE(p == w10.prefix(n));
    }
    CHECK(prefix_of_limit(*f, 100) ==
          prefix_of_limit(*f, 1000).prefix(100));
  }
}

TEST_CASE("paperfolding limit prefix matches the closed form") {
  const Word t = prefix_of_limit(family_t(), 1 << 12);
  for (std::size_t i = 0; i < t.size(); ++i) {
    REQUIRE(t[i] == paperfolding_letter(i));
  }
}

TEST_CASE("prefix_of_morphic fixtures") {
  CHECK(prefix_of_morphic(word_y(), 39).str() ==
        "101100110001100001100110110001100001101");
  CHECK(prefix_of_morphic(word_gx(), 14).str() == "01011001011010");
  CHECK(prefix_of_morphic(word_ft(), 14).str() == "01011001011010");
  CHECK(prefix_of_morphic(word_y(), 0).empty());
}

TEST_CASE("g(x) equals z letter for letter") {
  for (const std::size_t n : {std::size_t{1}, std::size_t{100},
                              std::size_t{4096}, std::size_t{65536}}) {
    CHECK(prefix_of_morphic(word_gx(), n) == prefix_of_limit(family_z(), n));
  }
}

TEST_CASE("morphic generation expands the base generation") {
  CHECK(morphic_generation(word_gx(), 2) ==
        build_generation(family_z(), 2));
  CHECK(morphic_generation(word_y(), 1) ==
        apply_morphism(morphism_h(), build_generation(family_x(), 1)));
}

TEST_CASE("length cap violations name the offending length") {
  CHECK_THROWS_AS(build_generation(family_x(), 30, 1 << 20),
                  ResourceLimitError);
  CHECK_THROWS_AS(prefix_of_limit(family_x(), (1 << 20) + 1, 1 << 20),
                  ResourceLimitError);
  CHECK_THROWS_AS(prefix_of_morphic(word_y(), (1 << 20) + 1, 1 << 20),
                  ResourceLimitError);
  try {
    build_generation(family_x(), 30, 1 << 20);
    FAIL("expected a resource error");
  } catch (const ResourceLimitError& e) {
    const std::string msg = e.what();
    // |x_30| = 2^32 - 2
    CHECK(msg.find("4294967294") != std::string::npos);
  }
}

TEST_CASE("fabricated families are accepted") {
  const RecursiveFamily tiny("tiny", Word::parse("01", 2), Word::parse("", 2),
                             Transform::kReverse);
  CHECK(build_generation(tiny, 1).str() == "0110");
  CHECK_THROWS_AS(RecursiveFamily("bad", Word::parse("01", 4),
                                  Word::parse("01", 4),
                                  Transform::kReverseComplement),
                  AlphabetError);
  CHECK_THROWS_AS(RecursiveFamily("empty", Word::parse("", 2),
                                  Word::parse("", 2), Transform::kReverse),
                  ParameterError);
}
