#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symdyn/local_rule.hpp"
#include "symdyn/window.hpp"

namespace symdyn {

inline constexpr std::size_t kDefaultEnumerationCap = std::size_t{1} << 26;

// Marks a forbidden list materialized from an infinite family up to a length bound.
struct Truncation {
  std::string family;
  std::size_t bound = 0;
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

struct Presentation;

/*
 * Subshift description: either X_F for the forbidden list, or (when
 * `presentation` is set, with an empty forbidden list) the image F(Y) of the
 * presenting subshift Y under a local rule.
 */
struct ShiftSpec {
  Alphabet alphabet;
  GroupKind group;
  std::vector<Pattern> forbidden;
  std::optional<Truncation> truncation;
  std::shared_ptr<const Presentation> presentation;

  bool is_sofic() const { return presentation != nullptr; }
};

struct Presentation {
  ShiftSpec pre_spec;
  LocalRule rule;
};

bool operator==(const ShiftSpec& a, const ShiftSpec& b);

// Checks alphabet ranges, supports and the presentation invariants. Throws UsageError.
void validate(const ShiftSpec& spec);

ShiftSpec full_shift(Alphabet alphabet, GroupKind group);
ShiftSpec forbidden_shift(Alphabet alphabet, GroupKind group, std::vector<Pattern> forbidden);
// Image of `pre` under `rule`; the result's alphabet is the rule's output alphabet.
ShiftSpec sofic_shift(ShiftSpec pre, LocalRule rule);

// Binary shift on Z without two adjacent 1s.
ShiftSpec golden_mean_shift();
// Binary shift on Z forbidding 1 0^(2n+1) 1 for every such word of length <= bound.
ShiftSpec even_shift_truncated(std::size_t bound);
// Even shift as the 1-block image of a three-edge shift of finite type on {a,b,c}.
ShiftSpec even_shift_presentation();

struct Violation {
  std::size_t pattern_index;
  Element placement;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/*
 * Forbidden-pattern placements fully inside a fixed support, precomputed so that
 * many windows on that support can be checked (and enumerated with prefix
 * pruning) without further group arithmetic.
 */
class AdmissibilityChecker {
 public:
  AdmissibilityChecker(const ShiftSpec& spec, std::span<const Element> support);

  std::optional<Violation> first_violation(std::span<const Symbol> values) const;
  bool admissible(std::span<const Symbol> values) const { return !first_violation(values).has_value(); }
  // Checks only the placements whose highest cell index is `last`.
  bool admissible_at(std::span<const Symbol> values, std::size_t last) const;
  std::size_t placement_count() const { return placements_.size(); }

 private:
  struct Placement {
    std::size_t pattern;
    Element at;
    std::vector<std::uint32_t> cells;
    std::vector<Symbol> values;
  };
  bool matches(const Placement& p, std::span<const Symbol> values) const;

  std::vector<Placement> placements_;
  std::vector<std::vector<std::uint32_t>> by_last_;
  bool forbids_everything_ = false;
};

std::optional<Violation> first_violation(const Window& w, const ShiftSpec& spec);
// No forbidden pattern occurs fully inside w; partial overlaps are ignored.
bool locally_admissible(const Window& w, const ShiftSpec& spec);

// Calls `visit` with every locally admissible assignment on `support` (canonically
// sorted) in lexicographic order; stops early when `visit` returns false. For sofic
// specs the visited assignments are the distinct images, also in lexicographic order.
// `cap` bounds the number of partial assignments the search may visit.
void for_each_admissible(const ShiftSpec& spec, std::span<const Element> support,
                         const std::function<bool(std::span<const Symbol>)>& visit,
                         std::size_t cap = kDefaultEnumerationCap);

std::size_t count_admissible(const ShiftSpec& spec, std::span<const Element> support,
                             std::size_t cap = kDefaultEnumerationCap);

std::vector<Window> enumerate_admissible(const ShiftSpec& spec, std::vector<Element> support,
                                         std::size_t cap = kDefaultEnumerationCap);

// Windows on `support` that are images of admissible pre-windows on support * N.
std::vector<Window> sofic_window_language(const ShiftSpec& spec, std::vector<Element> support,
                                          std::size_t cap = kDefaultEnumerationCap);

// Canonically sorted, duplicate-free copy.
std::vector<Element> canonical_support(const GroupKind& group, std::vector<Element> support);

}  // namespace symdyn
