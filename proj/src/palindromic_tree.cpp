#include "revpal/palindromic_tree.hpp"

#include <algorithm>

namespace revpal {

namespace {
constexpr std::array<std::int32_t, 4> kNoTransitions{-1, -1, -1, -1};
}

PalindromicTree::PalindromicTree(const Word& w)
    : source_length_(w.size()), alphabet_size_(w.alphabet_size()) {
  nodes_.push_back(Node{-1, 0, -1, 0, kNoTransitions});  // 0: imaginary root
  nodes_.push_back(Node{0, 0, -1, 0, kNoTransitions});   // 1: empty-word root

  const auto s = w.letters();
  std::int32_t suffix = 1;  // longest palindromic suffix of the prefix so far

  // Walks suffix links from v until the palindrome can be extended by s[i].
  const auto extendable = [&](std::int32_t v, std::size_t i) {
    while (true) {
      const auto idx = static_cast<std::int64_t>(i) - nodes_[v].len - 1;
      if (idx >= 0 && s[static_cast<std::size_t>(idx)] == s[i]) return v;
      v = nodes_[v].link;
    }
  };

  for (std::size_t i = 0; i < s.size(); ++i) {
    const Letter c = s[i];
    const std::int32_t base = extendable(suffix, i);
    if (nodes_[base].next[c] != -1) {
      suffix = nodes_[base].next[c];
      continue;
    }
    const auto now = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back(
        Node{nodes_[base].len + 2, 1, base, c, kNoTransitions});
    if (nodes_[now].len > 1) {
      const std::int32_t via = extendable(nodes_[base].link, i);
      nodes_[now].link = nodes_[via].next[c];
    }
    nodes_[base].next[c] = now;
    max_length_ = std::max(max_length_, static_cast<std::size_t>(nodes_[now].len));
    suffix = now;
  }
}

Word PalindromicTree::node_word(std::int32_t v) const {
  std::vector<Letter> buf(static_cast<std::size_t>(nodes_[v].len));
  std::size_t left = 0;
  std::size_t right = buf.size();
  while (nodes_[v].len > 0) {
    buf[left++] = nodes_[v].letter;
    buf[--right] = nodes_[v].letter;
    v = nodes_[v].parent;
  }
  return Word(std::move(buf), alphabet_size_);
}

std::vector<Word> PalindromicTree::palindromic_factors() const {
  std::vector<Word> out;
  out.reserve(nodes_.size() - 2);
  for (std::size_t v = 2; v < nodes_.size(); ++v) {
    out.push_back(node_word(static_cast<std::int32_t>(v)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> PalindromicTree::palindromes_of_length(std::size_t len) const {
  std::vector<Word> out;
  for (std::size_t v = 2; v < nodes_.size(); ++v) {
    if (static_cast<std::size_t>(nodes_[v].len) == len) {
      out.push_back(node_word(static_cast<std::int32_t>(v)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PalindromicTree::has_palindrome_of_length(std::size_t len) const {
  for (std::size_t v = 2; v < nodes_.size(); ++v) {
    if (static_cast<std::size_t>(nodes_[v].len) == len) return true;
  }
  return false;
}

}  // namespace revpal
