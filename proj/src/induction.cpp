#include "symdyn/induction.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

void require_sub(const GroupKind& group, const SubgroupEmbedding& emb, const char* what) {
  if (!(group == emb.sub()))
    throw UsageError(std::string(what) + ": object is over " + group.describe() + " but the embedding starts from " +
                     emb.sub().describe());
}

std::vector<Element> inject_all(const SubgroupEmbedding& emb, std::span<const Element> xs) {
  std::vector<Element> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(emb.inject(x));
  return out;
}

}  // namespace

ShiftSpec induce_shift(const ShiftSpec& spec, const SubgroupEmbedding& emb) {
  require_sub(spec.group, emb, "induce_shift");
  if (spec.is_sofic()) {
    ShiftSpec pre = induce_shift(spec.presentation->pre_spec, emb);
    const LocalRule& rule = spec.presentation->rule;
    return sofic_shift(std::move(pre), rule.relabelled(emb.ambient(), inject_all(emb, rule.neighbourhood())));
  }
  std::vector<Pattern> forbidden;
  forbidden.reserve(spec.forbidden.size());
  for (const auto& p : spec.forbidden) {
    std::vector<std::pair<Element, Symbol>> cells;
    for (std::size_t i = 0; i < p.size(); ++i) cells.emplace_back(emb.inject(p.support[i]), p.values[i]);
    forbidden.push_back(make_pattern(emb.ambient(), std::move(cells)));
  }
  ShiftSpec out = forbidden_shift(spec.alphabet, emb.ambient(), std::move(forbidden));
  out.truncation = spec.truncation;
  return out;
}

CellularAutomaton induce_ca(const CellularAutomaton& ca, const SubgroupEmbedding& emb) {
  require_sub(ca.group(), emb, "induce_ca");
  LocalRule rule = ca.rule().relabelled(emb.ambient(), inject_all(emb, ca.rule().neighbourhood()));
  std::string name = ca.name().empty() ? std::string() : ca.name() + " on " + emb.ambient().describe();
  return CellularAutomaton(induce_shift(ca.support(), emb), std::move(rule), std::move(name));
}

IotaImage iota(const SubgroupEmbedding& emb, const Window& w, std::span<const Element> request) {
  require_sub(w.group(), emb, "iota");
  std::vector<std::pair<Element, Symbol>> cells;
  std::vector<Element> omitted;
  for (const auto& gamma : request) {
    const Decomposition d = emb.decompose(gamma);
    if (auto v = w.at(d.sub)) cells.emplace_back(gamma, *v);
    else omitted.push_back(gamma);
  }
  sort_canonical(emb.ambient(), omitted);
  return IotaImage{Window(emb.ambient(), std::move(cells)), std::move(omitted)};
}

Window iota_on_cosets(const SubgroupEmbedding& emb, const Window& w, std::span<const Element> cosets) {
  require_sub(w.group(), emb, "iota");
  std::vector<std::pair<Element, Symbol>> cells;
  for (const auto& j : cosets) {
    if (!emb.in_transversal(j)) throw UsageError("iota: " + emb.ambient().format(j) + " is not a transversal element");
    for (std::size_t i = 0; i < w.size(); ++i) cells.emplace_back(emb.compose(j, w.support()[i]), w.values()[i]);
  }
  return Window(emb.ambient(), std::move(cells));
}

namespace {

// Support cells grouped by G-part, both levels in canonical order.
std::vector<std::vector<Element>> fibres(const SubgroupEmbedding& emb, std::span<const Element> support) {
  std::map<Element, std::vector<Element>, ElementLess> by_sub(ElementLess{&emb.sub()});
  for (const auto& gamma : support) by_sub[emb.decompose(gamma).sub].push_back(gamma);
  std::vector<std::vector<Element>> out;
  for (auto& [g, cells] : by_sub) {
    sort_canonical(emb.ambient(), cells);
    out.push_back(std::move(cells));
  }
  return out;
}

std::vector<Pattern> differing_pairs(const GroupKind& group, const Element& x, const Element& y,
                                     const Alphabet& alphabet) {
  std::vector<Pattern> out;
  for (Symbol a = 0; a < alphabet.size(); ++a)
    for (Symbol b = 0; b < alphabet.size(); ++b)
      if (a != b) out.push_back(make_pattern(group, {{x, a}, {y, b}}));
  std::sort(out.begin(), out.end(), [](const Pattern& p, const Pattern& q) { return p.values < q.values; });
  return out;
}

}  // namespace

std::vector<Pattern> coherence_forbidden(const SubgroupEmbedding& emb, std::span<const Element> support,
                                         const Alphabet& alphabet) {
  std::vector<Pattern> out;
  for (const auto& fibre : fibres(emb, canonical_support(emb.ambient(), {support.begin(), support.end()})))
    for (std::size_t i = 0; i < fibre.size(); ++i)
      for (std::size_t k = i + 1; k < fibre.size(); ++k)
        for (auto& p : differing_pairs(emb.ambient(), fibre[i], fibre[k], alphabet)) out.push_back(std::move(p));
  return out;
}

std::vector<Pattern> product_forbidden(const SubgroupEmbedding& emb, const Alphabet& alphabet,
                                       const std::optional<GeneratingSet>& h_generators) {
  if (emb.kind() != TransversalKind::LeftFactor)
    throw UsageError("product_forbidden needs a left_factor embedding, not " + emb.describe());
  const GroupKind& gamma = emb.ambient();
  const GroupKind& h = gamma.left();
  const GeneratingSet s = h_generators ? *h_generators : GeneratingSet::standard(h);
  if (!(s.group() == h)) throw UsageError("product_forbidden: generators are not in " + h.describe());
  const Element one = gamma.identity();
  std::vector<Pattern> out;
  for (const auto& x : s.symmetric())
    for (auto& p : differing_pairs(gamma, one, gamma.pair(x, gamma.right().identity()), alphabet))
      out.push_back(std::move(p));
  return out;
}

InducedMembership induced_membership(const SubgroupEmbedding& emb, const ShiftSpec& base_spec, const Window& w,
                                     std::size_t cap) {
  require_sub(base_spec.group, emb, "induced_member_window");
  if (!(w.group() == emb.ambient())) throw UsageError("induced_member_window: window is not over the ambient group");
  InducedMembership result;
  for (const auto& fibre : fibres(emb, w.support())) {
    const Symbol v = *w.at(fibre.front());
    for (std::size_t i = 1; i < fibre.size(); ++i)
      if (*w.at(fibre[i]) != v) {
        result.fibre = FibreConflict{fibre.front(), fibre[i]};
        return result;
      }
  }
  std::vector<Element> cosets;
  for (const auto& gamma : w.support()) cosets.push_back(emb.decompose(gamma).coset);
  cosets = canonical_support(emb.ambient(), std::move(cosets));
  for (const auto& j : cosets) {
    Window s = slice(w, emb, j);
    if (!base_spec.is_sofic()) {
      if (auto v = first_violation(s, base_spec)) {
        result.slice = SliceViolation{j, std::move(s), v};
        return result;
      }
      continue;
    }
    bool found = false;
    std::vector<Element> support(s.support().begin(), s.support().end());
    for_each_admissible(
        base_spec, support,
        [&](std::span<const Symbol> values) {
          found = std::equal(values.begin(), values.end(), s.values().begin(), s.values().end());
          return !found;
        },
        cap);
    if (!found) {
      result.slice = SliceViolation{j, std::move(s), std::nullopt};
      return result;
    }
  }
  return result;
}

bool induced_member_window(const SubgroupEmbedding& emb, const ShiftSpec& base_spec, const Window& w,
                           std::size_t cap) {
  return induced_membership(emb, base_spec, w, cap).member();
}

}  // namespace symdyn
