#include <doctest.h>

#include <set>

#include "support.hpp"
#include "symdyn/error.hpp"
#include "symdyn/metric.hpp"
#include "symdyn/shift.hpp"

using namespace symdyn;
using symdyn::test::Rng;

namespace {

std::vector<Element> interval(std::int64_t lo, std::int64_t hi) {
  std::vector<Element> out;
  for (std::int64_t i = lo; i <= hi; ++i) out.push_back(Element{i});
  return out;
}

bool in_even_language(const std::string& s) {
  std::size_t last_one = std::string::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '1') continue;
    if (last_one != std::string::npos && (i - last_one - 1) % 2 == 1) return false;
    last_one = i;
  }
  return true;
}

std::size_t brute_count(std::size_t n, const std::function<bool(const std::string&)>& ok) {
  std::size_t count = 0;
  for (const auto& w : symdyn::test::all_words(2, n))
    if (ok(Alphabet::binary().format(w))) ++count;
  return count;
}

}  // namespace

TEST_CASE("golden mean counts against brute force") {
  const ShiftSpec gm = golden_mean_shift();
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto brute = brute_count(n, [](const std::string& s) { return !symdyn::test::has_factor(s, "11"); });
    CHECK(count_admissible(gm, interval(0, static_cast<std::int64_t>(n) - 1)) == brute);
  }
}

TEST_CASE("enumeration is lexicographic and complete") {
  const ShiftSpec gm = golden_mean_shift();
  const auto windows = enumerate_admissible(gm, interval(-2, 2));
  std::vector<std::string> got;
  for (const auto& w : windows) got.push_back(Alphabet::binary().format(w.values()));
  std::vector<std::string> expected;
  for (const auto& w : symdyn::test::all_words(2, 5)) {
    const auto s = Alphabet::binary().format(w);
    if (!symdyn::test::has_factor(s, "11")) expected.push_back(s);
  }
  CHECK(got == expected);
}

TEST_CASE("2D enumeration against a brute-force filter") {
  Rng rng(51);
  const auto z2 = GroupKind::free_abelian(2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Pattern> forbidden;
    for (int k = 0; k < 2; ++k) {
      const Element dx = z2.vec({symdyn::test::uniform(rng, 0, 1), symdyn::test::uniform(rng, 0, 1)});
      const Element off = dx == z2.identity() ? z2.vec({1, 0}) : dx;
      forbidden.push_back(make_pattern(z2, {{z2.identity(), static_cast<Symbol>(rng() % 2)},
                                            {off, static_cast<Symbol>(rng() % 2)}}));
    }
    const ShiftSpec spec = forbidden_shift(Alphabet::binary(), z2, forbidden);
    std::vector<Element> support;
    for (std::int64_t x = 0; x < 3; ++x)
      for (std::int64_t y = 0; y < 3; ++y) support.push_back(z2.vec({x, y}));
    support = canonical_support(z2, support);
    std::size_t brute = 0;
    for (const auto& v : symdyn::test::all_words(2, support.size())) {
      const Window w = Window::from_sorted(z2, support, v);
      bool ok = true;
      for (const auto& p : forbidden)
        for (const auto& g : support) ok = ok && occurs_at(w, p, g) != Occurrence::present;
      brute += ok;
    }
    CHECK(count_admissible(spec, support) == brute);
  }
}

TEST_CASE("first violation reports the pattern and placement") {
  const ShiftSpec gm = golden_mean_shift();
  const auto v = first_violation(word_window(Alphabet::binary(), 0, "0110"), gm);
  REQUIRE(v.has_value());
  CHECK(v->pattern_index == 0);
  CHECK(v->placement == Element{1});
  CHECK(locally_admissible(word_window(Alphabet::binary(), 0, "0101"), gm));
  CHECK(locally_admissible(Window(GroupKind::free_abelian(1)), gm));
}

TEST_CASE("partial overlaps at the window border are ignored") {
  const ShiftSpec gm = golden_mean_shift();
  CHECK(locally_admissible(word_window(Alphabet::binary(), 0, "1"), gm));
  CHECK(locally_admissible(word_window(Alphabet::binary(), 0, "10101"), gm));
}

TEST_CASE("truncated even shift against the parity oracle") {
  const ShiftSpec even = even_shift_truncated(12);
  REQUIRE(even.truncation.has_value());
  CHECK(even.truncation->bound == 12);
  for (std::size_t n = 1; n <= 12; ++n)
    CHECK(count_admissible(even, interval(0, static_cast<std::int64_t>(n) - 1)) == brute_count(n, in_even_language));
}

TEST_CASE("sofic even shift against the parity oracle") {
  const ShiftSpec even = even_shift_presentation();
  CHECK(even.is_sofic());
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto windows = sofic_window_language(even, interval(0, static_cast<std::int64_t>(n) - 1));
    CHECK(windows.size() == brute_count(n, in_even_language));
    for (const auto& w : windows) CHECK(in_even_language(Alphabet::binary().format(w.values())));
  }
}

TEST_CASE("validation") {
  const auto z1 = GroupKind::free_abelian(1);
  CHECK_THROWS_AS(validate(forbidden_shift(Alphabet::binary(), z1, {Pattern{{Element{0}}, {3}}})), UsageError);
  CHECK_THROWS_AS(validate(forbidden_shift(Alphabet::binary(), z1, {Pattern{{Element{0}}, {}}})), UsageError);
  CHECK_NOTHROW(validate(golden_mean_shift()));
  CHECK_NOTHROW(validate(even_shift_presentation()));
}

TEST_CASE("empty pattern forbids everything") {
  const auto z1 = GroupKind::free_abelian(1);
  const ShiftSpec none = forbidden_shift(Alphabet::binary(), z1, {Pattern{}});
  CHECK(count_admissible(none, interval(0, 2)) == 0);
}

TEST_CASE("enumeration cap") {
  const ShiftSpec full = full_shift(Alphabet::binary(), GroupKind::free_abelian(1));
  CHECK_THROWS_AS(count_admissible(full, interval(0, 19), 1000), ResourceError);
  CHECK(count_admissible(full, interval(0, 9)) == 1024);
}

TEST_CASE("shift on a free group") {
  const auto f2 = GroupKind::free(2);
  const ShiftSpec spec = forbidden_shift(Alphabet::binary(), f2,
                                         {make_pattern(f2, {{f2.identity(), 1}, {f2.word("a"), 1}}),
                                          make_pattern(f2, {{f2.identity(), 1}, {f2.word("b"), 1}})});
  const auto d1 = disk(f2.identity(), 1, GeneratingSet::standard(f2));
  std::size_t brute = 0;
  for (const auto& v : symdyn::test::all_words(2, d1.size())) {
    const Window w = Window::from_sorted(f2, d1, v);
    brute += locally_admissible(w, spec) ? 1 : 0;
  }
  CHECK(brute == 17);
  CHECK(count_admissible(spec, d1) == 17);
}
