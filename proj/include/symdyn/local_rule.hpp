#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "symdyn/group.hpp"
#include "symdyn/window.hpp"

namespace symdyn {

inline constexpr std::size_t kDefaultTableCap = std::size_t{1} << 24;

/*
 * Local rule f : A^N -> B over a finite neighbourhood index N, defining the
 * global map (F(c))(g) = f(x -> c(g x)).
 *
 * Table keys are mixed-radix integers over input symbol indices, most
 * significant digit first, in the declared neighbourhood order.
 */
class LocalRule {
 public:
  LocalRule(GroupKind group, Alphabet input, Alphabet output, std::vector<Element> neighbourhood,
            std::vector<Symbol> table);
  LocalRule(GroupKind group, Alphabet alphabet, std::vector<Element> neighbourhood, std::vector<Symbol> table);

  static LocalRule from_function(GroupKind group, Alphabet input, Alphabet output, std::vector<Element> neighbourhood,
                                 const std::function<Symbol(std::span<const Symbol>)>& f,
                                 std::size_t cap = kDefaultTableCap);

  const GroupKind& group() const { return group_; }
  const Alphabet& input_alphabet() const { return input_; }
  const Alphabet& output_alphabet() const { return output_; }
  bool endomorphic() const { return input_ == output_; }
  std::span<const Element> neighbourhood() const { return neighbourhood_; }
  std::span<const Symbol> table() const { return table_; }

  std::size_t key(std::span<const Symbol> tuple) const;
  Symbol evaluate(std::span<const Symbol> tuple) const { return table_[key(tuple)]; }
  std::vector<Symbol> decode(std::size_t key) const;

  // Same map with the neighbourhood in canonical order.
  LocalRule normalized() const;
  // Same map with positions the output never depends on removed, then normalized.
  LocalRule minimized() const;
  // Same table over another group with a relabelled neighbourhood (used by induction).
  LocalRule relabelled(GroupKind group, std::vector<Element> neighbourhood) const;

  friend bool operator==(const LocalRule& a, const LocalRule& b) {
    return a.group_ == b.group_ && a.input_ == b.input_ && a.output_ == b.output_ &&
           a.neighbourhood_ == b.neighbourhood_ && a.table_ == b.table_;
  }

 private:
  GroupKind group_;
  Alphabet input_;
  Alphabet output_;
  std::vector<Element> neighbourhood_;
  std::vector<Symbol> table_;
};

/*
 * A rule compiled against a fixed input support: for every output cell the
 * input indices of its neighbourhood are precomputed, so evaluating many
 * windows on the same support is a sequence of table lookups.
 */
class RuleApplication {
 public:
  // Outputs are all g in `support` with g N inside `support`.
  RuleApplication(const LocalRule& rule, std::span<const Element> support);
  // Outputs restricted to `outputs`; each must have g N inside `support`.
  RuleApplication(const LocalRule& rule, std::span<const Element> support, std::span<const Element> outputs);

  std::span<const Element> output_support() const { return outputs_; }
  void apply(std::span<const Symbol> input, std::span<Symbol> output) const;
  std::vector<Symbol> apply(std::span<const Symbol> input) const;

 private:
  std::vector<Symbol> table_;
  std::size_t radix_;
  std::size_t arity_;
  std::vector<Element> outputs_;
  std::vector<std::uint32_t> inputs_;  // outputs_.size() * arity_
};

// Output support {g in supp w : g N in supp w}; shrinks rather than pads.
Window apply_window(const LocalRule& rule, const Window& w);

// Periodic configuration on Z^d: c(v) = values[v mod moduli], first coordinate fastest.
struct TorusConfig {
  std::vector<std::int64_t> moduli;
  std::vector<Symbol> values;

  std::size_t cell_count() const;
  std::size_t index_of(std::span<const std::int64_t> v) const;
  friend bool operator==(const TorusConfig&, const TorusConfig&) = default;
};

TorusConfig make_torus(std::vector<std::int64_t> moduli, std::vector<Symbol> values);
TorusConfig apply_torus(const LocalRule& rule, const TorusConfig& t);

// `second` after `first`: neighbourhood {x y : x in N_second, y in N_first}.
LocalRule compose(const LocalRule& first, const LocalRule& second, std::size_t cap = kDefaultTableCap);

}  // namespace symdyn
