#pragma once

#include <optional>
#include <span>
#include <vector>

#include "symdyn/automaton.hpp"
#include "symdyn/embedding.hpp"
#include "symdyn/shift.hpp"

namespace symdyn {

// Same forbidden list over the ambient group, supports mapped through inject.
// A sofic spec is induced by inducing its presenting spec and rule.
ShiftSpec induce_shift(const ShiftSpec& spec, const SubgroupEmbedding& emb);

// Same rule table with neighbourhood inject(N), acting on the induced support.
CellularAutomaton induce_ca(const CellularAutomaton& ca, const SubgroupEmbedding& emb);

struct IotaImage {
  Window window;
  std::vector<Element> omitted;  // requested cells whose G-part lies outside supp w
  bool partial() const { return !omitted.empty(); }
};

// (iota(w))(j g) = w(g) on the requested ambient cells.
IotaImage iota(const SubgroupEmbedding& emb, const Window& w, std::span<const Element> request);
// Image on every j inject(supp w) for the listed transversal elements.
Window iota_on_cosets(const SubgroupEmbedding& emb, const Window& w, std::span<const Element> cosets);

// Two-cell patterns with unequal symbols on every pair {j1 g, j2 g} inside `support`.
std::vector<Pattern> coherence_forbidden(const SubgroupEmbedding& emb, std::span<const Element> support,
                                         const Alphabet& alphabet);

/*
 * For a left_factor embedding K <= H x K: the patterns p with p(1) != p((s,1))
 * for every s in S u S^-1, where S generates H (default: the standard set).
 */
std::vector<Pattern> product_forbidden(const SubgroupEmbedding& emb, const Alphabet& alphabet,
                                       const std::optional<GeneratingSet>& h_generators = std::nullopt);

struct FibreConflict {
  Element first;
  Element second;
};

struct SliceViolation {
  Element coset;
  Window slice;
  std::optional<Violation> violation;  // absent for sofic base specs
};

struct InducedMembership {
  std::optional<FibreConflict> fibre;
  std::optional<SliceViolation> slice;
  bool member() const { return !fibre && !slice; }
};

// Window-level test for membership in iota_J(X): constant on coset fibres and
// every slice admissible for the base spec.
InducedMembership induced_membership(const SubgroupEmbedding& emb, const ShiftSpec& base_spec, const Window& w,
                                     std::size_t cap = kDefaultEnumerationCap);
bool induced_member_window(const SubgroupEmbedding& emb, const ShiftSpec& base_spec, const Window& w,
                           std::size_t cap = kDefaultEnumerationCap);

}  // namespace symdyn
