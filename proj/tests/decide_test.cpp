#include <doctest.h>

#include <map>

#include "support.hpp"
#include "symdyn/decide.hpp"
#include "symdyn/demos.hpp"

using namespace symdyn;
using symdyn::test::Rng;

namespace {

std::uint64_t brute_predecessors(const LocalRule& rule, const std::vector<Symbol>& word) {
  const auto [lo, hi] = hull_1d(rule);
  const std::size_t span = static_cast<std::size_t>(hi - lo);
  std::uint64_t count = 0;
  for (const auto& pre : symdyn::test::all_words(rule.input_alphabet().size(), word.size() + span))
    if (symdyn::test::apply_1d(rule, pre) == word) ++count;
  return count;
}

// Balance oracle: surjective iff every word up to length 8 has |A|^(hull-1) preimages.
bool balanced(const LocalRule& rule, std::size_t max_length) {
  const auto [lo, hi] = hull_1d(rule);
  const auto q = rule.input_alphabet().size();
  std::uint64_t expected = 1;
  for (std::int64_t i = 0; i < hi - lo; ++i) expected *= q;
  for (std::size_t n = 1; n <= max_length; ++n) {
    std::map<std::vector<Symbol>, std::uint64_t> counts;
    for (const auto& pre : symdyn::test::all_words(q, n + static_cast<std::size_t>(hi - lo)))
      ++counts[symdyn::test::apply_1d(rule, pre)];
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= q;
    if (counts.size() != total) return false;
    for (const auto& [w, c] : counts)
      if (c != expected) return false;
  }
  return true;
}

// Two distinct cyclic words of the same length up to `max_period` with equal images.
bool periodic_collision(const LocalRule& rule, std::size_t max_period) {
  const auto q = rule.input_alphabet().size();
  for (std::size_t n = 1; n <= max_period; ++n) {
    std::map<std::vector<Symbol>, int> seen;
    for (const auto& w : symdyn::test::all_words(q, n))
      if (++seen[symdyn::test::apply_cyclic(rule, w)] > 1) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("predecessor counts against brute force") {
  Rng rng(71);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t q = 2 + rng() % 2;
    const LocalRule rule = random_rule_1d(rng, q, 1 + rng() % 3);
    const auto word = symdyn::test::random_word(rng, q, 1 + rng() % 5);
    CHECK(count_predecessors(rule, word) == brute_predecessors(rule, word));
  }
}

TEST_CASE("rule 90 has four predecessors per word") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& w : symdyn::test::all_words(2, n)) CHECK(count_predecessors(rule90(), w) == 4);
}

TEST_CASE("surjectivity agrees with the balance oracle on random rules") {
  Rng rng(72);
  int surjective = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t q = 2 + rng() % 2;
    const LocalRule rule = random_rule_1d(rng, q, 1 + rng() % 3);
    const auto v = decide_surjective_1d(rule);
    const bool oracle = balanced(rule, q == 2 ? 8 : 5);
    CHECK((v.decision == SurjectivityVerdict::Decision::surjective) == oracle);
    if (oracle) ++surjective;
    if (v.goe) CHECK(count_predecessors(rule, *v.goe) == 0);
  }
  CHECK(surjective > 0);
}

TEST_CASE("GoE certificates are minimal") {
  const auto v = decide_surjective_1d(and2());
  REQUIRE(v.decision == SurjectivityVerdict::Decision::not_surjective);
  REQUIRE(v.goe.has_value());
  CHECK(Alphabet::binary().format(v.goe->values()) == "101");
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& w : symdyn::test::all_words(2, n)) {
      const auto s = Alphabet::binary().format(w);
      if (n < 3 || s < "101") CHECK(brute_predecessors(and2(), w) > 0);
    }
}

TEST_CASE("injectivity against periodic collisions") {
  Rng rng(73);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t q = 2 + rng() % 2;
    const LocalRule rule = random_rule_1d(rng, q, 1 + rng() % 3);
    const auto v = decide_injective_1d(rule);
    if (v.decision == InjectivityVerdict::Decision::injective) {
      CHECK_FALSE(periodic_collision(rule, q == 2 ? 8 : 5));
    } else {
      REQUIRE(v.tori.has_value());
      const auto& [a, b] = *v.tori;
      CHECK(a.values != b.values);
      CHECK(symdyn::test::apply_cyclic(rule, a.values) == symdyn::test::apply_cyclic(rule, b.values));
    }
  }
}

TEST_CASE("rule 90 is surjective and not injective") {
  CHECK(decide_surjective_1d(rule90()).decision == SurjectivityVerdict::Decision::surjective);
  const auto v = decide_injective_1d(rule90());
  CHECK(v.decision == InjectivityVerdict::Decision::not_injective);
  const auto z1 = GroupKind::free_abelian(1);
  CHECK(decide_injective_1d(shift_by(z1, Element{2})).decision == InjectivityVerdict::Decision::injective);
  CHECK(decide_injective_1d(symbol_swap()).decision == InjectivityVerdict::Decision::injective);
}

TEST_CASE("bounded GoE search") {
  const auto z1 = GroupKind::free_abelian(1);
  const CellularAutomaton and_ca(full_shift(Alphabet::binary(), z1), and2());
  const auto g = find_goe(and_ca, 3);
  REQUIRE(g.has_value());
  CHECK(g->radius == 1);
  CHECK(Alphabet::binary().format(g->pattern.values()) == "101");
  CHECK(count_predecessors(and2(), g->pattern) == 0);
  const CellularAutomaton r90(full_shift(Alphabet::binary(), z1), rule90());
  CHECK_FALSE(find_goe(r90, 3).has_value());
}

TEST_CASE("bounded GoE search implies non-surjectivity") {
  Rng rng(74);
  const auto z1 = GroupKind::free_abelian(1);
  for (int trial = 0; trial < 60; ++trial) {
    const LocalRule rule = random_rule_1d(rng, 2, 1 + rng() % 3);
    const auto g = find_goe(CellularAutomaton(full_shift(Alphabet::binary(), z1), rule), 2);
    if (g) {
      CHECK(count_predecessors(rule, g->pattern) == 0);
      CHECK(decide_surjective_1d(rule).decision == SurjectivityVerdict::Decision::not_surjective);
    }
  }
}

TEST_CASE("preinjectivity witnesses") {
  const auto z1 = GroupKind::free_abelian(1);
  const CellularAutomaton and_ca(full_shift(Alphabet::binary(), z1), and2());
  const auto w = preinjectivity_witness(and_ca, 2);
  REQUIRE(w.has_value());
  CHECK(w->first != w->second);
  CHECK(apply_window(and2(), w->first) == apply_window(and2(), w->second));
  const CellularAutomaton r90(full_shift(Alphabet::binary(), z1), rule90());
  CHECK_FALSE(preinjectivity_witness(r90, 2).has_value());
}

TEST_CASE("inverse rules") {
  const auto z1 = GroupKind::free_abelian(1);
  const auto inv = inverse_rule_search(shift_by(z1, Element{1}), 3);
  REQUIRE(inv.has_value());
  CHECK(*inv == shift_by(z1, Element{-1}));
  const auto swap_inv = inverse_rule_search(symbol_swap(), 1);
  REQUIRE(swap_inv.has_value());
  CHECK(*swap_inv == symbol_swap());
  CHECK_FALSE(inverse_rule_search(rule90(), 3).has_value());
  CHECK_FALSE(inverse_rule_search(and2(), 2).has_value());
}

TEST_CASE("found inverses invert on cyclic words") {
  Rng rng(75);
  int found = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const LocalRule rule = random_rule_1d(rng, 2, 1 + rng() % 3);
    const auto inv = inverse_rule_search(rule, 2);
    if (!inv) continue;
    ++found;
    for (const auto& w : symdyn::test::all_words(2, 6)) {
      CHECK(symdyn::test::apply_cyclic(*inv, symdyn::test::apply_cyclic(rule, w)) == w);
    }
    CHECK(decide_injective_1d(rule).decision == InjectivityVerdict::Decision::injective);
  }
  CHECK(found > 0);
}
