#include <doctest.h>

#include "support.hpp"
#include "symdyn/automaton.hpp"
#include "symdyn/error.hpp"
#include "symdyn/manifest.hpp"
#include "symdyn/text_io.hpp"

using namespace symdyn;
using symdyn::test::Rng;

TEST_CASE("word dumps") {
  const Window w = word_window(Alphabet::binary(), -2, "00100");
  const std::string text = format_window(w, Alphabet::binary());
  CHECK(text == "word -2\n00100\n  ^\n");
  CHECK(parse_window(text, GroupKind::free_abelian(1), Alphabet::binary()) == w);
  CHECK(parse_window("word 3\n01\n", GroupKind::free_abelian(1), Alphabet::binary()) ==
        word_window(Alphabet::binary(), 3, "01"));
}

TEST_CASE("grid dumps round trip") {
  Rng rng(81);
  const auto z2 = GroupKind::free_abelian(2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<Element, Symbol>> cells;
    for (std::int64_t x = -2; x <= 2; ++x)
      for (std::int64_t y = -1; y <= 2; ++y)
        if (rng() % 3) cells.emplace_back(z2.vec({x, y}), static_cast<Symbol>(rng() % 3));
    const Window w(z2, cells);
    const Alphabet a("abc");
    CHECK(parse_window(format_window(w, a), z2, a) == w);
  }
}

TEST_CASE("cell dumps round trip on other groups") {
  Rng rng(82);
  const auto f2 = GroupKind::free(2);
  const auto d = disk(f2.identity(), 2, GeneratingSet::standard(f2));
  const Window w = Window::from_sorted(f2, d, symdyn::test::random_word(rng, 2, d.size()));
  CHECK(parse_window(format_window(w, Alphabet::binary()), f2, Alphabet::binary()) == w);
  const auto sd = GroupKind::semidirect_z2z();
  const Window v(sd, {{Element{0, 1}, 1}, {Element{1, -2}, 0}});
  CHECK(parse_window(format_window(v, Alphabet::binary()), sd, Alphabet::binary()) == v);
}

TEST_CASE("torus dumps round trip") {
  const TorusConfig t1 = make_torus({5}, {0, 1, 1, 0, 1});
  CHECK(parse_torus(format_torus(t1, Alphabet::binary()), Alphabet::binary()) == t1);
  const TorusConfig t2 = make_torus({3, 2}, {0, 1, 2, 2, 1, 0});
  CHECK(format_torus(t2, Alphabet("012")) == "torus 3 2\n012\n210\n");
  CHECK(parse_torus(format_torus(t2, Alphabet("012")), Alphabet("012")) == t2);
}

TEST_CASE("parse errors carry line numbers") {
  const auto z1 = GroupKind::free_abelian(1);
  try {
    parse_window("# comment\nword 0\n01x\n", z1, Alphabet::binary());
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_window("bogus\n", z1, Alphabet::binary()), ParseError);
  CHECK_THROWS_AS(parse_torus("torus 3\n01\n", Alphabet::binary()), ParseError);
}

TEST_CASE("manifest round trip on the sample files") {
  for (const char* name : {"golden_mean", "rule90", "golden_mean_and", "even12", "even_sofic", "golden_mean_z2"}) {
    CAPTURE(name);
    const Manifest m = load_manifest(std::string(SYMDYN_DATA_DIR) + "/" + name + ".manifest");
    const std::string text = format_manifest(m);
    CHECK(parse_manifest(text) == m);
    CHECK(format_manifest(parse_manifest(text)) == text);
  }
}

TEST_CASE("manifest round trip on random rules and shifts") {
  Rng rng(83);
  const auto z1 = GroupKind::free_abelian(1);
  for (int trial = 0; trial < 100; ++trial) {
    Manifest m;
    const std::size_t q = 2 + rng() % 2;
    m.alphabet = Alphabet(std::string("abc").substr(0, q));
    m.group = z1;
    if (rng() % 4) m.rule = LocalRule(z1, m.alphabet, {Element{-1}, Element{1}}, symdyn::test::random_word(rng, q, q * q));
    std::vector<Pattern> forbidden;
    for (int k = 0, n = static_cast<int>(rng() % 3); k < n; ++k)
      forbidden.push_back(make_pattern(z1, {{Element{0}, static_cast<Symbol>(rng() % q)},
                                            {Element{1 + static_cast<std::int64_t>(rng() % 3)},
                                             static_cast<Symbol>(rng() % q)}}));
    if (!forbidden.empty()) m.shift = forbidden_shift(m.alphabet, z1, forbidden);
    if (rng() % 2) m.embedding = SubgroupEmbedding::coordinate_axis(1, 2, 0);
    CHECK(parse_manifest(format_manifest(m)) == m);
  }
}

TEST_CASE("manifest errors") {
  CHECK_THROWS_AS(parse_manifest("alphabet = 01\n"), ParseError);
  CHECK_THROWS_AS(parse_manifest("version = 2\nalphabet = 01\ngroup = Z\n"), ParseError);
  CHECK_THROWS_AS(parse_manifest("version = 1\nalphabet = 01\ngroup = Z\nrule {\n  nbhd = (0)\n  map 0->1\n}\n"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_manifest("version = 1\nalphabet = 01\ngroup = Z\nrule {\n  nbhd = (0)\n  map 0->1 1->0 0->0\n}\n"),
      ParseError);
  CHECK_THROWS_AS(parse_manifest("version = 1\nalphabet = 01\ngroup = Z\nshift {\n  pattern { at (0)=2 }\n}\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_manifest("version = 1\nalphabet = 01\ngroup = Z\nrule {\n"), ParseError);
  try {
    parse_manifest("version = 1\nalphabet = 01\n\ngroup = Z\nfoo = 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
  }
}

TEST_CASE("builtin rule sections") {
  const Manifest m = parse_manifest("version = 1\nalphabet = 01\ngroup = Z\nrule { builtin = and2 }\n");
  REQUIRE(m.rule.has_value());
  CHECK(*m.rule == and2());
}
