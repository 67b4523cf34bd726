#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "symdyn/local_rule.hpp"
#include "symdyn/shift.hpp"

namespace symdyn {

/*
 * A local rule together with the subshift it is claimed to act on. The claim
 * F(X) ⊆ X is recorded, not proved; closure_check gives bounded evidence.
 */
class CellularAutomaton {
 public:
  CellularAutomaton(ShiftSpec support, LocalRule rule, std::string name = {});

  const ShiftSpec& support() const { return support_; }
  const LocalRule& rule() const { return rule_; }
  const GroupKind& group() const { return rule_.group(); }
  const Alphabet& alphabet() const { return rule_.input_alphabet(); }
  const std::string& name() const { return name_; }

 private:
  ShiftSpec support_;
  LocalRule rule_;
  std::string name_;
};

// Elementary rule 90 on Z: N = {-1, 1}, f(x, y) = x xor y.
LocalRule rule90();
// N = {0, 1}, f(x, y) = x and y.
LocalRule and2();
// N = {nu}, f(x) = x, so (F(c))(g) = c(g nu).
LocalRule shift_by(const GroupKind& group, const Element& nu, const Alphabet& alphabet = Alphabet::binary());
// N = {0}, f(x) = 1 - x.
LocalRule symbol_swap();
LocalRule identity_rule(const GroupKind& group, const Alphabet& alphabet = Alphabet::binary());

// Names: rule90, and2, shift_by(k), symbol_swap, identity, golden_mean_identity.
CellularAutomaton builtin(std::string_view name);
bool is_builtin_name(std::string_view name);

struct ClosureWitness {
  Window input;
  Window output;
  Violation violation;
};

struct ClosureVerdict {
  bool violated = false;
  std::size_t radius = 0;  // largest radius examined
  std::optional<ClosureWitness> witness;
};

/*
 * For r = 0..radius: every admissible window on D_r N is mapped to D_r and the
 * image is checked against the forbidden list. The first violation found is
 * returned; otherwise the verdict is consistent up to `radius`.
 */
ClosureVerdict closure_check(const CellularAutomaton& ca, std::size_t radius,
                             std::size_t cap = kDefaultEnumerationCap);

}  // namespace symdyn
