#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <vector>

namespace revpal::testing {

std::set<std::string> brute_palindromic_factors(const Word& w) {
  const std::string s = w.str();
  std::set<std::string> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j <= s.size(); ++j) {
      const std::string sub = s.substr(i, j - i);
      if (std::equal(sub.begin(), sub.end(), sub.rbegin())) {
        out.insert(sub);
      }
    }
  }
  return out;
}

std::set<std::string> brute_distinct_factors(const Word& w) {
  const std::string s = w.str();
  std::set<std::string> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j <= s.size(); ++j) {
      out.insert(s.substr(i, j - i));
    }
  }
  return out;
}

std::set<std::string> brute_factors_of_length(const Word& w, int m) {
  const std::string s = w.str();
  std::set<std::string> out;
  const auto len = static_cast<std::size_t>(m);
  for (std::size_t i = 0; i + len <= s.size(); ++i) {
    out.insert(s.substr(i, len));
  }
  return out;
}

bool brute_contains(const Word& w, const Word& u) {
  return w.str().find(u.str()) != std::string::npos;
}

std::size_t brute_max_gap(const Word& w, int m) {
  const std::string s = w.str();
  const auto len = static_cast<std::size_t>(m);
  std::map<std::string, std::vector<std::size_t>> occurrences;
  for (std::size_t i = 0; i + len <= s.size(); ++i) {
    occurrences[s.substr(i, len)].push_back(i);
  }
  std::size_t max_gap = 0;
  for (const auto& [factor, starts] : occurrences) {
    for (std::size_t k = 1; k < starts.size(); ++k) {
      max_gap = std::max(max_gap, starts[k] - starts[k - 1]);
    }
  }
  return max_gap;
}

Letter paperfolding_letter(std::size_t index) {
  const std::size_t n = index + 1;
  const std::size_t odd = n >> std::countr_zero(n);
  return odd % 4 == 1 ? 0 : 1;
}

Word random_word(std::mt19937& rng, std::size_t max_len, int alphabet_size) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(0, alphabet_size - 1);
  std::vector<Letter> letters(len_dist(rng));
  for (Letter& a : letters) {
    a = static_cast<Letter>(letter_dist(rng));
  }
  return Word(std::move(letters), alphabet_size);
}

}  // namespace revpal::testing
