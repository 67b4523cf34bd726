#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symdyn/embedding.hpp"
#include "symdyn/group.hpp"

namespace symdyn {

using Symbol = std::uint8_t;

// Ordered set of single-character symbol names; a symbol is its index.
class Alphabet {
 public:
  explicit Alphabet(std::string symbols);
  static Alphabet binary() { return Alphabet("01"); }

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbols() const { return symbols_; }
  char name(Symbol s) const { return symbols_.at(s); }
  std::optional<Symbol> find(char c) const;
  Symbol parse(char c) const;

  std::string format(std::span<const Symbol> word) const;
  std::vector<Symbol> parse_word(std::string_view text) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

// Finite pattern; support is duplicate-free and canonically sorted.
struct Pattern {
  std::vector<Element> support;
  std::vector<Symbol> values;

  std::size_t size() const { return support.size(); }
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

Pattern make_pattern(const GroupKind& group, std::vector<std::pair<Element, Symbol>> cells);

// A pattern bound to its ambient group, used as a finite stand-in for a configuration.
class Window {
 public:
  explicit Window(GroupKind group) : group_(std::move(group)) {}
  Window(GroupKind group, std::vector<std::pair<Element, Symbol>> cells);
  Window(GroupKind group, const Pattern& pattern);
  // `support` must already be canonically sorted and duplicate-free.
  static Window from_sorted(GroupKind group, std::vector<Element> support, std::vector<Symbol> values);

  const GroupKind& group() const { return group_; }
  std::span<const Element> support() const { return support_; }
  std::span<const Symbol> values() const { return values_; }
  std::size_t size() const { return support_.size(); }
  bool empty() const { return support_.empty(); }

  std::optional<std::size_t> index_of(const Element& x) const;
  std::optional<Symbol> at(const Element& x) const;
  Pattern pattern() const { return Pattern{support_, values_}; }

  friend bool operator==(const Window& a, const Window& b) {
    return a.group_ == b.group_ && a.support_ == b.support_ && a.values_ == b.values_;
  }

 private:
  GroupKind group_;
  std::vector<Element> support_;
  std::vector<Symbol> values_;
};

// Window on the integer interval [start, start + |word|) of Z.
Window word_window(const Alphabet& alphabet, std::int64_t start, std::string_view word);

enum class Occurrence { absent, present, undetermined };

// Does p occur in w at placement g, i.e. w(g x) = p(x) for all x in supp p?
// `undetermined` when some g x falls outside supp w.
Occurrence occurs_at(const Window& w, const Pattern& p, const Element& g);

// w'(h) = w(g h), support {g^-1 x : x in supp w}.
Window translate(const Window& w, const Element& g);

// The G-window x with x(g) = w(j inject(g)) wherever j inject(g) lies in supp w.
Window slice(const Window& w, const SubgroupEmbedding& emb, const Element& j);

}  // namespace symdyn
