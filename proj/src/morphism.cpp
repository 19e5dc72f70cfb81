#include "revpal/morphism.hpp"

#include <array>
#include <limits>

namespace revpal {

Morphism::Morphism(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.size() != 2 && images_.size() != 4) {
    throw ParameterError("a morphism needs one image per source letter (2 or "
                         "4 images), got " +
                         std::to_string(images_.size()));
  }
  source_alphabet_size_ = static_cast<std::uint8_t>(images_.size());
  target_alphabet_size_ = static_cast<std::uint8_t>(images_[0].alphabet_size());
  min_image_length_ = std::numeric_limits<std::size_t>::max();
  max_image_length_ = 0;
  for (const Word& img : images_) {
    if (img.empty()) {
      throw ParameterError("morphism images must be nonempty");
    }
    if (img.alphabet_size() != target_alphabet_size_) {
      throw ParameterError("morphism images must share one target alphabet");
    }
    min_image_length_ = std::min(min_image_length_, img.size());
    max_image_length_ = std::max(max_image_length_, img.size());
  }
}

const Word& Morphism::image(Letter a) const {
  if (a >= source_alphabet_size_) {
    throw AlphabetError("letter code " + std::to_string(a) +
                        " outside the morphism's source alphabet of size " +
                        std::to_string(source_alphabet_size_));
  }
  return images_[a];
}

std::size_t Morphism::expanded_length(const Word& w) const {
  std::array<std::size_t, 4> counts{};
  for (const Letter a : w.letters()) {
    if (a >= source_alphabet_size_) {
      throw AlphabetError("letter code " + std::to_string(a) +
                          " outside the morphism's source alphabet of size " +
                          std::to_string(source_alphabet_size_));
    }
    ++counts[a];
  }
  std::size_t total = 0;
  for (int a = 0; a < source_alphabet_size_; ++a) {
    const std::size_t part = counts[a] * images_[a].size();
    if (counts[a] != 0 && part / counts[a] != images_[a].size()) {
      throw ResourceLimitError("morphism image length is not representable");
    }
    if (total > std::numeric_limits<std::size_t>::max() - part) {
      throw ResourceLimitError("morphism image length is not representable");
    }
    total += part;
  }
  return total;
}

Word apply_morphism(const Morphism& m, const Word& w) {
  const std::size_t total = m.expanded_length(w);  // also validates letters
  std::vector<Letter> out;
  out.reserve(total);
  for (const Letter a : w.letters()) {
    const auto img = m.image(a).letters();
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(std::move(out), m.target_alphabet_size());
}

const Morphism& morphism_h() {
  static const Morphism m({Word::parse("101", 2), Word::parse("1001", 2),
                           Word::parse("10001", 2), Word::parse("100001", 2)});
  return m;
}

const Morphism& morphism_g() {
  static const Morphism m({Word::parse("0", 2), Word::parse("1", 2),
                           Word::parse("0", 2), Word::parse("1", 2)});
  return m;
}

const Morphism& morphism_f() {
  static const Morphism m({Word::parse("01", 2), Word::parse("10", 2)});
  return m;
}

}  // namespace revpal
