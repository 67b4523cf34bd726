#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symdyn {

/*
 * Element of a finitely generated group, stored as a flat integer code.
 *
 * The code is only meaningful together with the GroupKind that produced it:
 *   free_abelian(d)  d coordinates
 *   free(n)          reduced word, letter i encoded as +(i+1), its inverse as -(i+1)
 *   finite table     {index}
 *   semidirect       {i, k} with i in {0,1}
 *   product(L, R)    {len(L code), L code..., R code...}
 *
 * Codes are canonical, so element equality is code equality.
 */
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<std::int64_t> code) : code_(std::move(code)) {}
  Element(std::initializer_list<std::int64_t> code) : code_(code) {}

  const std::vector<std::int64_t>& code() const { return code_; }
  std::size_t hash() const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::vector<std::int64_t> code_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const { return e.hash(); }
};

// A group kind together with its element arithmetic. Cheap to copy (shared immutable state).
class GroupKind {
 public:
  enum class Tag { FreeAbelian, Free, FiniteTable, SemidirectZ2Z, DirectProduct };

  static GroupKind free_abelian(int dim);
  static GroupKind free(int rank);
  // `table[a][b]` is the index of a*b; index 0 must be the identity.
  static GroupKind finite_table(const std::vector<std::vector<int>>& table);
  static GroupKind cyclic(int order);
  // Pairs (i,k), i in {0,1}, k in Z, with (i1,k1)(i2,k2) = (i1+i2-2 i1 i2, (-1)^i2 k1 + k2).
  static GroupKind semidirect_z2z();
  static GroupKind direct_product(const GroupKind& left, const GroupKind& right);

  // Accepts the forms produced by describe() plus the shorthands Z, Z^d and F<n>.
  static GroupKind parse(std::string_view text);
  std::string describe() const;

  Tag tag() const;
  int rank() const;   // d for free_abelian, n for free
  int order() const;  // finite tables only
  bool is_finite() const;
  const GroupKind& left() const;
  const GroupKind& right() const;
  int table_entry(int a, int b) const;

  Element identity() const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  bool contains(const Element& a) const;
  bool is_identity(const Element& a) const { return a == identity(); }

  // Canonical total order: lexicographic on coordinates, shortlex on free words
  // (a < A < b < B < ...), by index for tables, componentwise for products.
  std::strong_ordering compare(const Element& a, const Element& b) const;
  bool less(const Element& a, const Element& b) const { return compare(a, b) < 0; }

  std::vector<Element> default_generators() const;

  std::string format(const Element& a) const;
  Element parse_element(std::string_view text) const;

  // Element constructors for the built-in kinds.
  Element vec(std::vector<std::int64_t> coords) const;  // free_abelian
  Element word(std::string_view letters) const;        // free, e.g. "a b A"
  Element pair(const Element& l, const Element& r) const;  // direct product
  Element first(const Element& a) const;
  Element second(const Element& a) const;

  friend bool operator==(const GroupKind& a, const GroupKind& b);

 private:
  struct Node;
  explicit GroupKind(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Comparator adaptor for sorting elements in canonical order.
struct ElementLess {
  const GroupKind* group;
  bool operator()(const Element& a, const Element& b) const { return group->less(a, b); }
};

void sort_canonical(const GroupKind& group, std::vector<Element>& elements);

}  // namespace symdyn
