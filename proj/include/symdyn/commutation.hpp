#pragma once

#include <optional>
#include <span>

#include "symdyn/window.hpp"

namespace symdyn {

// Witness that g and h do not commute: a two-cell window c with c(gh) = 0 and
// c(hg) = 1, so the translates of c by gh and hg differ at the identity.
struct CommutationWitness {
  Window window;
  Element h;
  Element gh;
  Element hg;
};

std::optional<CommutationWitness> commuting_witness(const GroupKind& group, const Element& g, const Element& h);

// First h in `candidates` (in order) that fails to commute with g.
std::optional<CommutationWitness> commuting_witness(const GroupKind& group, const Element& g,
                                                    std::span<const Element> candidates);

}  // namespace symdyn
