#include <doctest.h>

#include "support.hpp"
#include "symdyn/automaton.hpp"
#include "symdyn/demos.hpp"
#include "symdyn/induction.hpp"

using namespace symdyn;
using symdyn::test::Rng;

namespace {

Window random_sub_window(Rng& rng, const GroupKind& g, std::size_t radius) {
  const auto d = disk(g.identity(), radius, GeneratingSet::standard(g));
  return Window::from_sorted(g, d, symdyn::test::random_word(rng, 2, d.size()));
}

std::vector<Element> grid(const GroupKind& z2, std::int64_t w, std::int64_t h) {
  std::vector<Element> out;
  for (std::int64_t x = 0; x < w; ++x)
    for (std::int64_t y = 0; y < h; ++y) out.push_back(z2.vec({x, y}));
  return canonical_support(z2, out);
}

}  // namespace

TEST_CASE("induced golden mean on Z^2 is the horizontal pattern") {
  const auto emb = SubgroupEmbedding::coordinate_axis(1, 2, 0);
  const ShiftSpec induced = induce_shift(golden_mean_shift(), emb);
  const auto& z2 = emb.ambient();
  REQUIRE(induced.forbidden.size() == 1);
  CHECK(induced.forbidden[0] == make_pattern(z2, {{z2.vec({0, 0}), 1}, {z2.vec({1, 0}), 1}}));
  CHECK(induced.group == z2);
}

TEST_CASE("induced sofic spec induces its presentation") {
  const auto emb = SubgroupEmbedding::coordinate_axis(1, 2, 0);
  const ShiftSpec induced = induce_shift(even_shift_presentation(), emb);
  REQUIRE(induced.is_sofic());
  CHECK(induced.presentation->pre_spec.group == emb.ambient());
  CHECK(induced.presentation->rule.group() == emb.ambient());
}

TEST_CASE("iota round trip on random windows") {
  Rng rng(61);
  const std::vector<SubgroupEmbedding> embs{SubgroupEmbedding::coordinate_axis(1, 2, 0),
                                           SubgroupEmbedding::dihedral_pair(),
                                           SubgroupEmbedding::free_conjugates(2),
                                           SubgroupEmbedding::skew_axis()};
  for (const auto& emb : embs) {
    CAPTURE(emb.describe());
    const auto js = transversal_slice(emb, 2, GeneratingSet::standard(emb.ambient()));
    for (int trial = 0; trial < 50; ++trial) {
      const Window w = random_sub_window(rng, emb.sub(), 1 + rng() % 2);
      const Window img = iota_on_cosets(emb, w, js);
      CHECK(img.size() == w.size() * js.size());
      for (const auto& j : js) CHECK(slice(img, emb, j) == w);
      CHECK(induced_member_window(emb, full_shift(Alphabet::binary(), emb.sub()), img));
    }
  }
}

TEST_CASE("iota on requested cells reports omissions") {
  const auto emb = SubgroupEmbedding::coordinate_axis(1, 2, 0);
  const auto& z2 = emb.ambient();
  const Window w = word_window(Alphabet::binary(), 0, "10");
  const std::vector<Element> req{z2.vec({0, 7}), z2.vec({1, -3}), z2.vec({2, 0})};
  const IotaImage img = iota(emb, w, req);
  CHECK(img.window.at(z2.vec({0, 7})) == Symbol{1});
  CHECK(img.window.at(z2.vec({1, -3})) == Symbol{0});
  REQUIRE(img.partial());
  CHECK(img.omitted == std::vector<Element>{z2.vec({2, 0})});
}

TEST_CASE("induced rule commutes with iota") {
  Rng rng(62);
  const auto emb = SubgroupEmbedding::dihedral_pair();
  const auto js = transversal_slice(emb, 1, GeneratingSet::standard(emb.ambient()));
  for (int trial = 0; trial < 40; ++trial) {
    const LocalRule rule = random_rule_1d(rng, 2, 1 + rng() % 3);
    const CellularAutomaton ind = induce_ca(CellularAutomaton(full_shift(Alphabet::binary(), emb.sub()), rule), emb);
    const Window w = random_sub_window(rng, emb.sub(), 4);
    const Window lhs = apply_window(ind.rule(), iota_on_cosets(emb, w, js));
    const Window rhs = iota_on_cosets(emb, apply_window(rule, w), js);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("membership in the image of iota") {
  const auto emb = SubgroupEmbedding::coordinate_axis(1, 2, 0);
  const auto& z2 = emb.ambient();
  const ShiftSpec gm = golden_mean_shift();
  const Window rows(z2, {{z2.vec({0, 0}), 1}, {z2.vec({1, 0}), 0}, {z2.vec({0, 1}), 1}, {z2.vec({1, 1}), 0}});
  CHECK(induced_member_window(emb, gm, rows));
  const Window broken(z2, {{z2.vec({0, 0}), 1}, {z2.vec({1, 0}), 0}, {z2.vec({0, 1}), 0}, {z2.vec({1, 1}), 0}});
  const InducedMembership m = induced_membership(emb, gm, broken);
  CHECK_FALSE(m.member());
  REQUIRE(m.fibre.has_value());
  const Window bad(z2, {{z2.vec({0, 0}), 1}, {z2.vec({1, 0}), 1}, {z2.vec({0, 1}), 1}, {z2.vec({1, 1}), 1}});
  const InducedMembership mb = induced_membership(emb, gm, bad);
  CHECK_FALSE(mb.fibre.has_value());
  REQUIRE(mb.slice.has_value());
  REQUIRE(mb.slice->violation.has_value());
  CHECK(mb.slice->violation->placement == Element{0});
}

TEST_CASE("coherence patterns force fibre constancy") {
  const auto emb = SubgroupEmbedding::coordinate_axis(1, 2, 0);
  const auto& z2 = emb.ambient();
  const auto support = grid(z2, 2, 2);
  const ShiftSpec spec = forbidden_shift(Alphabet::binary(), z2, coherence_forbidden(emb, support, Alphabet::binary()));
  CHECK(count_admissible(spec, support) == 4);
}

TEST_CASE("product patterns for a left factor") {
  const auto z1 = GroupKind::free_abelian(1);
  const auto emb = SubgroupEmbedding::left_factor(z1, z1);
  const auto fs = product_forbidden(emb, Alphabet::binary());
  CHECK(fs.size() == 4);
  const auto& amb = emb.ambient();
  std::vector<Element> support;
  for (std::int64_t h = 0; h < 3; ++h)
    for (std::int64_t k = 0; k < 2; ++k) support.push_back(amb.pair(Element{h}, Element{k}));
  support = canonical_support(amb, support);
  CHECK(count_admissible(forbidden_shift(Alphabet::binary(), amb, fs), support) == 4);
}
