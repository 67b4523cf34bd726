#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "symdyn/local_rule.hpp"

namespace symdyn::test {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline std::vector<Symbol> random_word(Rng& rng, std::size_t q, std::size_t n) {
  std::vector<Symbol> w(n);
  for (auto& s : w) s = static_cast<Symbol>(rng() % q);
  return w;
}

// All words of length n over q symbols, in lexicographic order.
inline std::vector<std::vector<Symbol>> all_words(std::size_t q, std::size_t n) {
  std::vector<std::vector<Symbol>> out;
  std::vector<Symbol> w(n, 0);
  while (true) {
    out.push_back(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] + 1u == q) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

// Direct evaluation of a rule over Z on a finite word: output cell i reads
// word[i - lo + offset] for each neighbourhood offset, where [lo, hi] is the hull.
inline std::vector<Symbol> apply_1d(const LocalRule& rule, const std::vector<Symbol>& word) {
  std::int64_t lo = 0, hi = 0;
  for (const auto& e : rule.neighbourhood()) {
    lo = std::min(lo, e.code()[0]);
    hi = std::max(hi, e.code()[0]);
  }
  const auto q = rule.input_alphabet().size();
  const std::int64_t n = static_cast<std::int64_t>(word.size()) - (hi - lo);
  std::vector<Symbol> out;
  for (std::int64_t i = 0; i < n; ++i) {
    std::size_t key = 0;
    for (const auto& e : rule.neighbourhood()) key = key * q + word[static_cast<std::size_t>(i - lo + e.code()[0])];
    out.push_back(rule.table()[key]);
  }
  return out;
}

inline std::vector<Symbol> apply_cyclic(const LocalRule& rule, const std::vector<Symbol>& word) {
  const auto q = rule.input_alphabet().size();
  const auto n = static_cast<std::int64_t>(word.size());
  std::vector<Symbol> out(word.size());
  for (std::int64_t i = 0; i < n; ++i) {
    std::size_t key = 0;
    for (const auto& e : rule.neighbourhood()) key = key * q + word[static_cast<std::size_t>(((i + e.code()[0]) % n + n) % n)];
    out[static_cast<std::size_t>(i)] = rule.table()[key];
  }
  return out;
}

inline bool has_factor(const std::string& s, const std::string& f) { return s.find(f) != std::string::npos; }

}  // namespace symdyn::test
