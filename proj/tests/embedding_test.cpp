#include <doctest.h>

#include "support.hpp"
#include "symdyn/commutation.hpp"
#include "symdyn/embedding.hpp"
#include "symdyn/error.hpp"

using namespace symdyn;

namespace {

std::vector<SubgroupEmbedding> sample_embeddings() {
  return {SubgroupEmbedding::coordinate_axis(1, 2, 0),
          SubgroupEmbedding::coordinate_axis(1, 3, 2),
          SubgroupEmbedding::left_factor(GroupKind::cyclic(3), GroupKind::free_abelian(1)),
          SubgroupEmbedding::left_factor(GroupKind::free_abelian(1), GroupKind::free_abelian(1)),
          SubgroupEmbedding::dihedral_pair(),
          SubgroupEmbedding::free_conjugates(2),
          SubgroupEmbedding::skew_axis(),
          SubgroupEmbedding::finite_cosets(GroupKind::cyclic(6), GroupKind::cyclic(3), {0, 2, 4}, {0, 1})};
}

}  // namespace

TEST_CASE("embeddings pass their own consistency check") {
  for (const auto& emb : sample_embeddings()) {
    CAPTURE(emb.describe());
    CHECK_NOTHROW(emb.check(4));
  }
}

TEST_CASE("decompose and compose are inverse on ambient balls") {
  for (const auto& emb : sample_embeddings()) {
    CAPTURE(emb.describe());
    const auto& amb = emb.ambient();
    for (const auto& gamma : disk(amb.identity(), 3, GeneratingSet::standard(amb))) {
      const Decomposition d = emb.decompose(gamma);
      CHECK(emb.in_transversal(d.coset));
      CHECK(emb.compose(d.coset, d.sub) == gamma);
      CHECK(amb.multiply(d.coset, emb.inject(d.sub)) == gamma);
    }
  }
}

TEST_CASE("inject is a homomorphism") {
  symdyn::test::Rng rng(21);
  for (const auto& emb : sample_embeddings()) {
    const auto& sub = emb.sub();
    const auto ball = disk(sub.identity(), 2, GeneratingSet::standard(sub));
    for (int trial = 0; trial < 100; ++trial) {
      const Element& a = ball[rng() % ball.size()];
      const Element& b = ball[rng() % ball.size()];
      CHECK(emb.inject(sub.multiply(a, b)) == emb.ambient().multiply(emb.inject(a), emb.inject(b)));
    }
  }
}

TEST_CASE("coordinate axis places the subgroup on its coordinates") {
  const auto emb = SubgroupEmbedding::coordinate_axis(1, 3, 1);
  const auto& amb = emb.ambient();
  CHECK(emb.inject(Element{4}) == amb.vec({0, 4, 0}));
  const auto d = emb.decompose(amb.vec({2, -1, 5}));
  CHECK(d.coset == amb.vec({2, 0, 5}));
  CHECK(d.sub == Element{-1});
}

TEST_CASE("dihedral pair") {
  const auto emb = SubgroupEmbedding::dihedral_pair();
  CHECK(emb.inject(Element{3}) == Element{0, 3});
  CHECK(emb.decompose(Element{1, 3}) == Decomposition{Element{1, 0}, Element{3}});
  CHECK(emb.base_representative() == Element{0, 0});
}

TEST_CASE("skew axis avoids the identity in its transversal") {
  const auto emb = SubgroupEmbedding::skew_axis();
  const auto& amb = emb.ambient();
  CHECK_FALSE(emb.in_transversal(amb.identity()));
  CHECK(emb.base_representative() == amb.vec({1, 0}));
  CHECK(emb.decompose(amb.vec({5, 0})) == Decomposition{amb.vec({1, 0}), Element{4}});
  CHECK(emb.decompose(amb.vec({-2, 3})) == Decomposition{amb.vec({0, 3}), Element{-2}});
  const auto e1 = e_set(emb, 1, GeneratingSet::standard(amb));
  CHECK(e1 == std::vector<Element>{Element{-2}, Element{-1}, Element{0}});
}

TEST_CASE("e_set for the coordinate axis is the disk") {
  const auto emb = SubgroupEmbedding::coordinate_axis(1, 2, 0);
  const auto e = e_set(emb, 2, GeneratingSet::standard(emb.ambient()));
  CHECK(e == disk(Element{0}, 2, GeneratingSet::standard(emb.sub())));
}

TEST_CASE("transversal slices") {
  const auto emb = SubgroupEmbedding::coordinate_axis(1, 2, 0);
  const auto& amb = emb.ambient();
  const auto js = transversal_slice(emb, 1, GeneratingSet::standard(amb));
  CHECK(js == std::vector<Element>{amb.vec({0, -1}), amb.vec({0, 0}), amb.vec({0, 1})});
  CHECK(transversal_slice(SubgroupEmbedding::dihedral_pair(), 5, GeneratingSet::standard(GroupKind::semidirect_z2z()))
            .size() == 2);
}

TEST_CASE("describe and parse round trip") {
  for (const auto& emb : sample_embeddings()) {
    CAPTURE(emb.describe());
    CHECK(SubgroupEmbedding::parse(emb.describe(), emb.sub()) == emb);
  }
  CHECK_THROWS_AS(SubgroupEmbedding::parse("coordinate_axis(1,2,0)", GroupKind::free_abelian(2)), UsageError);
  CHECK_THROWS_AS(SubgroupEmbedding::parse("dihedral_pair", GroupKind::free(2)), UsageError);
}

TEST_CASE("finite cosets reject a transversal that misses a coset") {
  CHECK_THROWS(SubgroupEmbedding::finite_cosets(GroupKind::cyclic(6), GroupKind::cyclic(3), {0, 2, 4}, {0, 2}));
}

TEST_CASE("commutation witnesses") {
  const auto f2 = GroupKind::free(2);
  const auto w = commuting_witness(f2, f2.word("a"), f2.word("b"));
  REQUIRE(w.has_value());
  CHECK(w->gh != w->hg);
  CHECK(w->window.at(w->gh) == Symbol{0});
  CHECK(w->window.at(w->hg) == Symbol{1});
  const auto z2 = GroupKind::free_abelian(2);
  CHECK_FALSE(commuting_witness(z2, z2.vec({1, 0}), z2.vec({0, 1})).has_value());
  const auto sd = GroupKind::semidirect_z2z();
  const std::vector<Element> candidates{Element{0, 1}, Element{1, 0}};
  const auto w2 = commuting_witness(sd, Element{1, 0}, candidates);
  REQUIRE(w2.has_value());
  CHECK(w2->h == Element{0, 1});
}
