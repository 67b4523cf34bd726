#include "symdyn/commutation.hpp"

#include "symdyn/error.hpp"

namespace symdyn {

std::optional<CommutationWitness> commuting_witness(const GroupKind& group, const Element& g, const Element& h) {
  if (!group.contains(g) || !group.contains(h)) throw UsageError("commuting_witness: element not in " + group.describe());
  Element gh = group.multiply(g, h);
  Element hg = group.multiply(h, g);
  if (gh == hg) return std::nullopt;
  Window w(group, {{gh, Symbol{0}}, {hg, Symbol{1}}});
  return CommutationWitness{std::move(w), h, std::move(gh), std::move(hg)};
}

std::optional<CommutationWitness> commuting_witness(const GroupKind& group, const Element& g,
                                                    std::span<const Element> candidates) {
  for (const auto& h : candidates) {
    if (auto w = commuting_witness(group, g, h)) return w;
  }
  return std::nullopt;
}

}  // namespace symdyn
