#include "symdyn/automaton.hpp"

#include "symdyn/error.hpp"
#include "symdyn/metric.hpp"
#include "text_util.hpp"

namespace symdyn {

CellularAutomaton::CellularAutomaton(ShiftSpec support, LocalRule rule, std::string name)
    : support_(std::move(support)), rule_(std::move(rule)), name_(std::move(name)) {
  if (!rule_.endomorphic()) throw UsageError("a cellular automaton needs a rule with equal input and output alphabets");
  if (!(rule_.input_alphabet() == support_.alphabet))
    throw UsageError("rule alphabet {" + rule_.input_alphabet().symbols() + "} differs from shift alphabet {" +
                     support_.alphabet.symbols() + "}");
  if (!(rule_.group() == support_.group))
    throw UsageError("rule group " + rule_.group().describe() + " differs from shift group " + support_.group.describe());
}

namespace {

const GroupKind& integers() {
  static const GroupKind z = GroupKind::free_abelian(1);
  return z;
}

}  // namespace

LocalRule rule90() { return LocalRule(integers(), Alphabet::binary(), {Element{-1}, Element{1}}, {0, 1, 1, 0}); }

LocalRule and2() { return LocalRule(integers(), Alphabet::binary(), {Element{0}, Element{1}}, {0, 0, 0, 1}); }

LocalRule shift_by(const GroupKind& group, const Element& nu, const Alphabet& alphabet) {
  std::vector<Symbol> table(alphabet.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<Symbol>(i);
  return LocalRule(group, alphabet, {nu}, std::move(table));
}

LocalRule symbol_swap() { return LocalRule(integers(), Alphabet::binary(), {Element{0}}, {1, 0}); }

LocalRule identity_rule(const GroupKind& group, const Alphabet& alphabet) {
  return shift_by(group, group.identity(), alphabet);
}

namespace {

std::optional<std::int64_t> shift_amount(std::string_view name) {
  if (name.substr(0, 9) != "shift_by(" || name.back() != ')') return std::nullopt;
  std::string_view inner = detail::trim(name.substr(9, name.size() - 10));
  if (!inner.empty() && inner.front() == '(' && inner.back() == ')') inner = inner.substr(1, inner.size() - 2);
  return detail::parse_int(inner);
}

}  // namespace

bool is_builtin_name(std::string_view name) {
  name = detail::trim(name);
  return name == "rule90" || name == "and2" || name == "symbol_swap" || name == "identity" ||
         name == "golden_mean_identity" || shift_amount(name).has_value();
}

CellularAutomaton builtin(std::string_view name) {
  name = detail::trim(name);
  const ShiftSpec full = full_shift(Alphabet::binary(), integers());
  if (name == "rule90") return CellularAutomaton(full, rule90(), "rule90");
  if (name == "and2") return CellularAutomaton(full, and2(), "and2");
  if (name == "symbol_swap") return CellularAutomaton(full, symbol_swap(), "symbol_swap");
  if (name == "identity") return CellularAutomaton(full, identity_rule(integers()), "identity");
  if (name == "golden_mean_identity")
    return CellularAutomaton(golden_mean_shift(), identity_rule(integers()), "golden_mean_identity");
  if (auto k = shift_amount(name))
    return CellularAutomaton(full, shift_by(integers(), Element{*k}), "shift_by(" + std::to_string(*k) + ")");
  throw UsageError("unknown built-in automaton '" + std::string(name) + "'");
}

ClosureVerdict closure_check(const CellularAutomaton& ca, std::size_t radius, std::size_t cap) {
  const ShiftSpec& spec = ca.support();
  if (spec.is_sofic()) throw UsageError("closure_check needs a forbidden-pattern support spec");
  const GroupKind& g = ca.group();
  const GeneratingSet sigma = GeneratingSet::standard(g);
  ClosureVerdict verdict;
  for (std::size_t r = 0; r <= radius; ++r) {
    verdict.radius = r;
    const std::vector<Element> out_support = disk(g.identity(), r, sigma);
    std::vector<Element> in_support;
    for (const auto& x : out_support)
      for (const auto& n : ca.rule().neighbourhood()) in_support.push_back(g.multiply(x, n));
    in_support = canonical_support(g, std::move(in_support));
    const RuleApplication app(ca.rule(), in_support, out_support);
    const AdmissibilityChecker out_check(spec, out_support);
    std::vector<Symbol> image(out_support.size());
    for_each_admissible(
        spec, in_support,
        [&](std::span<const Symbol> values) {
          app.apply(values, image);
          if (auto v = out_check.first_violation(image)) {
            verdict.violated = true;
            verdict.witness = ClosureWitness{
                Window::from_sorted(g, in_support, std::vector<Symbol>(values.begin(), values.end())),
                Window::from_sorted(g, out_support, image), *v};
            return false;
          }
          return true;
        },
        cap);
    if (verdict.violated) return verdict;
  }
  return verdict;
}

}  // namespace symdyn
