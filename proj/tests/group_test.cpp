#include <doctest.h>

#include <deque>
#include <map>

#include "support.hpp"
#include "symdyn/error.hpp"
#include "symdyn/group.hpp"
#include "symdyn/metric.hpp"

using namespace symdyn;
using symdyn::test::Rng;
using symdyn::test::uniform;

namespace {

Element random_element(Rng& rng, const GroupKind& g) {
  switch (g.tag()) {
    case GroupKind::Tag::FreeAbelian: {
      std::vector<std::int64_t> v(static_cast<std::size_t>(g.rank()));
      for (auto& x : v) x = uniform(rng, -5, 5);
      return g.vec(v);
    }
    case GroupKind::Tag::Free: {
      Element e = g.identity();
      const auto gens = g.default_generators();
      for (int i = 0, n = static_cast<int>(uniform(rng, 0, 6)); i < n; ++i) {
        Element s = gens[rng() % gens.size()];
        if (rng() % 2) s = g.inverse(s);
        e = g.multiply(e, s);
      }
      return e;
    }
    case GroupKind::Tag::FiniteTable:
      return Element{uniform(rng, 0, g.order() - 1)};
    case GroupKind::Tag::SemidirectZ2Z:
      return Element{uniform(rng, 0, 1), uniform(rng, -6, 6)};
    case GroupKind::Tag::DirectProduct:
      return g.pair(random_element(rng, g.left()), random_element(rng, g.right()));
  }
  return g.identity();
}

std::vector<GroupKind> sample_groups() {
  return {GroupKind::free_abelian(1),
          GroupKind::free_abelian(2),
          GroupKind::free(2),
          GroupKind::cyclic(5),
          GroupKind::semidirect_z2z(),
          GroupKind::direct_product(GroupKind::cyclic(3), GroupKind::free_abelian(1))};
}

// Word length in the semidirect group by BFS over pairs, multiplying by the
// defining formula directly.
std::map<std::pair<int, std::int64_t>, int> semidirect_lengths(int radius) {
  using P = std::pair<int, std::int64_t>;
  auto mul = [](P a, P b) {
    const std::int64_t sign = b.first ? -1 : 1;
    return P{a.first + b.first - 2 * a.first * b.first, sign * a.second + b.second};
  };
  const std::vector<P> gens{{1, 0}, {0, 1}, {0, -1}};
  std::map<P, int> dist{{{0, 0}, 0}};
  std::deque<P> queue{{0, 0}};
  while (!queue.empty()) {
    const P x = queue.front();
    queue.pop_front();
    if (dist[x] == radius) continue;
    for (const P& s : gens) {
      const P y = mul(x, s);
      if (dist.emplace(y, dist[x] + 1).second) queue.push_back(y);
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("group axioms hold on random elements") {
  Rng rng(11);
  for (const auto& g : sample_groups()) {
    CAPTURE(g.describe());
    for (int trial = 0; trial < 300; ++trial) {
      const Element a = random_element(rng, g), b = random_element(rng, g), c = random_element(rng, g);
      CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
      CHECK(g.multiply(a, g.inverse(a)) == g.identity());
      CHECK(g.multiply(g.identity(), a) == a);
      CHECK(g.contains(a));
    }
  }
}

TEST_CASE("format and parse are inverse") {
  Rng rng(12);
  for (const auto& g : sample_groups()) {
    CHECK(GroupKind::parse(g.describe()) == g);
    for (int trial = 0; trial < 100; ++trial) {
      const Element a = random_element(rng, g);
      CHECK(g.parse_element(g.format(a)) == a);
    }
  }
}

TEST_CASE("canonical order") {
  const auto z2 = GroupKind::free_abelian(2);
  CHECK(z2.less(z2.vec({-1, 5}), z2.vec({0, -3})));
  CHECK(z2.less(z2.vec({0, -3}), z2.vec({0, 2})));
  const auto f2 = GroupKind::free(2);
  CHECK(f2.less(f2.identity(), f2.word("b")));
  CHECK(f2.less(f2.word("a"), f2.word("A")));
  CHECK(f2.less(f2.word("A"), f2.word("b")));
  CHECK(f2.less(f2.word("B"), f2.word("a a")));
}

TEST_CASE("free reduction") {
  const auto f2 = GroupKind::free(2);
  CHECK(f2.multiply(f2.word("a b"), f2.word("B A")) == f2.identity());
  CHECK(f2.word("a b B a") == f2.word("a a"));
}

TEST_CASE("malformed group text is rejected") {
  CHECK_THROWS_AS(GroupKind::parse("free_abelian(x)"), UsageError);
  CHECK_THROWS_AS(GroupKind::parse("nonsense"), UsageError);
  CHECK_THROWS_AS(GroupKind::free_abelian(1).parse_element("(1,2)"), UsageError);
  CHECK_THROWS_AS(GroupKind::finite_table({{0, 1}, {1, 1}}), UsageError);
}

TEST_CASE("word length in Z^d is the l1 norm") {
  Rng rng(13);
  const auto z3 = GroupKind::free_abelian(3);
  const auto s = GeneratingSet::standard(z3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::int64_t> v{uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3)};
    CHECK(word_length(z3.vec(v), s) == static_cast<std::size_t>(std::abs(v[0]) + std::abs(v[1]) + std::abs(v[2])));
  }
}

TEST_CASE("word length in F_2 is the reduced length") {
  Rng rng(14);
  const auto f2 = GroupKind::free(2);
  const auto s = GeneratingSet::standard(f2);
  for (int trial = 0; trial < 50; ++trial) {
    const Element a = random_element(rng, f2);
    CHECK(word_length(a, s) == a.code().size());
  }
}

TEST_CASE("semidirect word lengths agree with an independent BFS") {
  const auto g = GroupKind::semidirect_z2z();
  const auto s = GeneratingSet::standard(g);
  const auto oracle = semidirect_lengths(9);
  for (const auto& [p, d] : oracle) CHECK(word_length(Element{p.first, p.second}, s) == static_cast<std::size_t>(d));
  for (std::int64_t k = -8; k <= 8; ++k)
    CHECK(distance(Element{0, k}, Element{1, k}, s) == static_cast<std::size_t>(2 * std::abs(k) + 1));
}

TEST_CASE("disk sizes") {
  const auto z2 = GroupKind::free_abelian(2);
  for (std::size_t r = 0; r <= 5; ++r)
    CHECK(disk(z2.identity(), r, GeneratingSet::standard(z2)).size() == 2 * r * r + 2 * r + 1);
  const auto f2 = GroupKind::free(2);
  std::size_t expected = 1, shell = 4;
  for (std::size_t r = 0; r <= 4; ++r) {
    CHECK(disk(f2.identity(), r, GeneratingSet::standard(f2)).size() == expected);
    expected += shell;
    shell *= 3;
  }
  CHECK(disk(Element{2}, 10, GeneratingSet::standard(GroupKind::cyclic(5))).size() == 5);
}

TEST_CASE("disks are canonically ordered and centred") {
  const auto z1 = GroupKind::free_abelian(1);
  const auto d = disk(z1.vec({4}), 2, GeneratingSet::standard(z1));
  REQUIRE(d.size() == 5);
  CHECK(d.front() == z1.vec({2}));
  CHECK(d.back() == z1.vec({6}));
}

TEST_CASE("ball cap") {
  const auto f2 = GroupKind::free(2);
  CHECK_THROWS_AS(disk(f2.identity(), 20, GeneratingSet::standard(f2), 1000), ResourceError);
}

TEST_CASE("generating sets reject the identity") {
  const auto z1 = GroupKind::free_abelian(1);
  CHECK_THROWS_AS(GeneratingSet(z1, {z1.identity()}), UsageError);
}
