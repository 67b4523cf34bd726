#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "symdyn/group.hpp"

namespace symdyn {

inline constexpr std::size_t kDefaultBallCap = 1'000'000;

// Finite generating set; identity and duplicates are rejected.
class GeneratingSet {
 public:
  GeneratingSet(GroupKind group, std::vector<Element> generators);

  // free_abelian: unit vectors; free: the letters; semidirect: {(1,0),(0,1)};
  // finite table: all non-identity elements; product: embedded component defaults.
  static GeneratingSet standard(const GroupKind& group);

  const GroupKind& group() const { return group_; }
  std::span<const Element> generators() const { return generators_; }
  // S together with S^-1, in canonical order.
  std::span<const Element> symmetric() const { return symmetric_; }

 private:
  GroupKind group_;
  std::vector<Element> generators_;
  std::vector<Element> symmetric_;
};

// Geodesic length of `a` over S u S^-1, by breadth-first search from the identity.
std::size_t word_length(const Element& a, const GeneratingSet& s, std::size_t cap = kDefaultBallCap);

// Length of g^-1 h.
std::size_t distance(const Element& g, const Element& h, const GeneratingSet& s,
                     std::size_t cap = kDefaultBallCap);

// {h : distance(center, h) <= radius}, canonically ordered.
std::vector<Element> disk(const Element& center, std::size_t radius, const GeneratingSet& s,
                          std::size_t cap = kDefaultBallCap);

}  // namespace symdyn
