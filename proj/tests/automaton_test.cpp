#include <doctest.h>

#include "support.hpp"
#include "symdyn/automaton.hpp"
#include "symdyn/error.hpp"

using namespace symdyn;

TEST_CASE("built-in rules") {
  CHECK(is_builtin_name("rule90"));
  CHECK(is_builtin_name("shift_by(-2)"));
  CHECK_FALSE(is_builtin_name("rule30"));
  CHECK_THROWS_AS(builtin("rule30"), UsageError);
  CHECK(builtin("rule90").rule() == rule90());
  CHECK(builtin("shift_by(2)").rule().neighbourhood()[0] == Element{2});
  CHECK(builtin("golden_mean_identity").support() == golden_mean_shift());
  CHECK(symdyn::test::apply_cyclic(and2(), {1, 1, 0, 1}) == std::vector<Symbol>{1, 0, 0, 1});
  CHECK(symdyn::test::apply_cyclic(symbol_swap(), {1, 1, 0}) == std::vector<Symbol>{0, 0, 1});
}

TEST_CASE("shift_by follows the natural action") {
  const auto z1 = GroupKind::free_abelian(1);
  const Window w = word_window(Alphabet::binary(), 0, "0010");
  const Window out = apply_window(shift_by(z1, Element{1}), w);
  CHECK(out == word_window(Alphabet::binary(), 0, "010"));
}

TEST_CASE("automaton rejects mismatched alphabets and groups") {
  const auto z1 = GroupKind::free_abelian(1);
  CHECK_THROWS_AS(CellularAutomaton(full_shift(Alphabet("abc"), z1), rule90()), UsageError);
  CHECK_THROWS_AS(CellularAutomaton(full_shift(Alphabet::binary(), GroupKind::free_abelian(2)), rule90()),
                  UsageError);
  CHECK_THROWS_AS(
      CellularAutomaton(full_shift(Alphabet::binary(), z1), LocalRule(z1, Alphabet::binary(), Alphabet("ab"),
                                                                       {Element{0}}, {0, 1})),
      UsageError);
}

TEST_CASE("closure holds for shifts preserving the golden mean") {
  const ShiftSpec gm = golden_mean_shift();
  for (const auto& rule : {identity_rule(GroupKind::free_abelian(1)), shift_by(GroupKind::free_abelian(1), Element{3})}) {
    const ClosureVerdict v = closure_check(CellularAutomaton(gm, rule), 4);
    CHECK_FALSE(v.violated);
    CHECK(v.radius == 4);
  }
}

TEST_CASE("closure finds a violation for a rule leaving the golden mean") {
  const auto z1 = GroupKind::free_abelian(1);
  const LocalRule nor(z1, Alphabet::binary(), {Element{0}, Element{1}}, {1, 0, 0, 0});
  const ClosureVerdict v = closure_check(CellularAutomaton(golden_mean_shift(), nor), 3);
  REQUIRE(v.violated);
  REQUIRE(v.witness.has_value());
  CHECK(locally_admissible(v.witness->input, golden_mean_shift()));
  CHECK(apply_window(nor, v.witness->input) == v.witness->output);
  CHECK_FALSE(locally_admissible(v.witness->output, golden_mean_shift()));
}
