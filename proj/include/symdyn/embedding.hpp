#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "symdyn/group.hpp"
#include "symdyn/metric.hpp"

namespace symdyn {

enum class TransversalKind {
  CoordinateAxis,  // Z^d <= Z^(d+k), J = vectors vanishing on the subgroup's coordinates
  LeftFactor,      // K <= H x K, J = H x {1}
  DihedralPair,    // Z <= semidirect via k -> (0,k), J = {(0,0),(1,0)}
  FreeConjugates,  // F_n <= F_2 via x_i -> a^i b a^-i, Schreier transversal
  SkewAxis,        // Z <= Z^2 on the x-axis, J = {(1,0)} u {(0,y) : y != 0}
  FiniteCosets,    // explicit J for a finite ambient group
};

std::string to_string(TransversalKind kind);

// gamma = coset * inject(sub)
struct Decomposition {
  Element coset;
  Element sub;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/*
 * Injective homomorphism G -> Gamma together with a left transversal J of
 * inject(G), so that every gamma factors uniquely as j * inject(g).
 */
class SubgroupEmbedding {
 public:
  // The subgroup occupies coordinates [offset, offset + sub_dim) of Z^ambient_dim.
  static SubgroupEmbedding coordinate_axis(int sub_dim, int ambient_dim, int offset);
  static SubgroupEmbedding left_factor(const GroupKind& h, const GroupKind& k);
  static SubgroupEmbedding dihedral_pair();
  static SubgroupEmbedding free_conjugates(int n);
  static SubgroupEmbedding skew_axis();
  // inject_map[g] is the ambient index of sub element g; transversal lists ambient indices.
  static SubgroupEmbedding finite_cosets(const GroupKind& ambient, const GroupKind& sub,
                                         std::vector<int> inject_map, std::vector<int> transversal);

  // Forms accepted: coordinate_axis(d,n,offset) left_factor(<kind>) dihedral_pair
  // free_conjugates(n) skew_axis finite_cosets(<kind>; <inject indices>; <J indices>).
  // `sub` is the subgroup kind the embedding must start from.
  static SubgroupEmbedding parse(std::string_view text, const GroupKind& sub);
  std::string describe() const;

  const GroupKind& ambient() const { return ambient_; }
  const GroupKind& sub() const { return sub_; }
  TransversalKind kind() const { return kind_; }

  Element inject(const Element& g) const;
  // Images of the subgroup's default generators.
  std::vector<Element> generator_images() const;

  // Throws InvariantError when the transversal does not cover gamma.
  Decomposition decompose(const Element& gamma) const;
  Element compose(const Element& coset, const Element& sub) const;
  bool in_transversal(const Element& j) const;
  // Representative of the coset inject(G) itself; the identity whenever 1 is in J.
  Element base_representative() const;

  // Checks the homomorphism law and injectivity on the subgroup ball of radius
  // `max_word_length`, and compose/decompose consistency on the ambient ball of the
  // same radius. Throws InvariantError on failure.
  void check(int max_word_length = 6) const;

  friend bool operator==(const SubgroupEmbedding& a, const SubgroupEmbedding& b);

 private:
  SubgroupEmbedding(GroupKind ambient, GroupKind sub, TransversalKind kind)
      : ambient_(std::move(ambient)), sub_(std::move(sub)), kind_(kind) {}

  GroupKind ambient_;
  GroupKind sub_;
  TransversalKind kind_;
  int offset_ = 0;                 // CoordinateAxis
  std::vector<int> inject_map_;    // FiniteCosets
  std::vector<int> transversal_;   // FiniteCosets
  std::vector<int> preimage_;      // FiniteCosets: ambient index -> sub index or -1
};

// E_R = { g : j g in D_R for some j in J }, canonically ordered.
std::vector<Element> e_set(const SubgroupEmbedding& emb, std::size_t radius, const GeneratingSet& sigma,
                           std::size_t cap = kDefaultBallCap);

// Transversal elements met by decomposing the ambient disk of the given radius.
std::vector<Element> transversal_slice(const SubgroupEmbedding& emb, std::size_t radius,
                                       const GeneratingSet& sigma, std::size_t cap = kDefaultBallCap);

}  // namespace symdyn
