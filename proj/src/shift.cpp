#include "symdyn/shift.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "symdyn/error.hpp"

namespace symdyn {

bool operator==(const ShiftSpec& a, const ShiftSpec& b) {
  if (!(a.alphabet == b.alphabet) || !(a.group == b.group) || a.forbidden != b.forbidden ||
      a.truncation != b.truncation)
    return false;
  if (!a.presentation || !b.presentation) return !a.presentation && !b.presentation;
  return a.presentation->pre_spec == b.presentation->pre_spec && a.presentation->rule == b.presentation->rule;
}

void validate(const ShiftSpec& spec) {
  for (const auto& p : spec.forbidden) {
    if (p.support.size() != p.values.size()) throw UsageError("forbidden pattern has mismatched support and values");
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!spec.group.contains(p.support[i]))
        throw UsageError("forbidden pattern cell " + spec.group.format(p.support[i]) + " is not in " +
                         spec.group.describe());
      if (p.values[i] >= spec.alphabet.size()) throw UsageError("forbidden pattern symbol outside the alphabet");
      if (i > 0 && !spec.group.less(p.support[i - 1], p.support[i]))
        throw UsageError("forbidden pattern support is not canonically sorted");
    }
  }
  if (spec.presentation) {
    if (!spec.forbidden.empty()) throw UsageError("a sofic presentation carries no outer forbidden list");
    const auto& pre = spec.presentation->pre_spec;
    const auto& rule = spec.presentation->rule;
    if (!(rule.input_alphabet() == pre.alphabet)) throw UsageError("presentation rule does not read the pre-alphabet");
    if (!(rule.output_alphabet() == spec.alphabet)) throw UsageError("presentation rule does not write the alphabet");
    if (!(rule.group() == spec.group) || !(pre.group == spec.group))
      throw UsageError("presentation is over a different group");
    validate(pre);
  }
}

ShiftSpec full_shift(Alphabet alphabet, GroupKind group) {
  return ShiftSpec{std::move(alphabet), std::move(group), {}, std::nullopt, nullptr};
}

ShiftSpec forbidden_shift(Alphabet alphabet, GroupKind group, std::vector<Pattern> forbidden) {
  ShiftSpec s{std::move(alphabet), std::move(group), std::move(forbidden), std::nullopt, nullptr};
  validate(s);
  return s;
}

ShiftSpec sofic_shift(ShiftSpec pre, LocalRule rule) {
  ShiftSpec s{rule.output_alphabet(), rule.group(), {}, std::nullopt, nullptr};
  s.presentation = std::make_shared<const Presentation>(Presentation{std::move(pre), std::move(rule)});
  validate(s);
  return s;
}

ShiftSpec golden_mean_shift() {
  const GroupKind z = GroupKind::free_abelian(1);
  return forbidden_shift(Alphabet::binary(), z, {make_pattern(z, {{Element{0}, 1}, {Element{1}, 1}})});
}

ShiftSpec even_shift_truncated(std::size_t bound) {
  const GroupKind z = GroupKind::free_abelian(1);
  std::vector<Pattern> forbidden;
  for (std::size_t zeros = 1; zeros + 2 <= bound; zeros += 2) {
    std::vector<std::pair<Element, Symbol>> cells;
    cells.emplace_back(Element{0}, 1);
    for (std::size_t i = 1; i <= zeros; ++i) cells.emplace_back(Element{static_cast<std::int64_t>(i)}, 0);
    cells.emplace_back(Element{static_cast<std::int64_t>(zeros + 1)}, 1);
    forbidden.push_back(make_pattern(z, std::move(cells)));
  }
  ShiftSpec s = forbidden_shift(Alphabet::binary(), z, std::move(forbidden));
  s.truncation = Truncation{"even", bound};
  return s;
}

ShiftSpec even_shift_presentation() {
  // Edges of the two-state even-shift graph: a = A->A (label 1), b = A->B (0), c = B->A (0).
  const GroupKind z = GroupKind::free_abelian(1);
  const Alphabet edges("abc");
  std::vector<Pattern> forbidden;
  for (auto [x, y] : {std::pair{'a', 'c'}, {'b', 'a'}, {'b', 'b'}, {'c', 'c'}}) {
    forbidden.push_back(make_pattern(z, {{Element{0}, edges.parse(x)}, {Element{1}, edges.parse(y)}}));
  }
  ShiftSpec pre = forbidden_shift(edges, z, std::move(forbidden));
  LocalRule label(z, edges, Alphabet::binary(), {Element{0}}, {1, 0, 0});
  return sofic_shift(std::move(pre), std::move(label));
}

AdmissibilityChecker::AdmissibilityChecker(const ShiftSpec& spec, std::span<const Element> support) {
  if (spec.is_sofic()) throw UsageError("local admissibility needs a forbidden-pattern spec, not a sofic presentation");
  const GroupKind& g = spec.group;
  std::unordered_map<Element, std::uint32_t, ElementHash> idx;
  idx.reserve(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) idx.emplace(support[i], static_cast<std::uint32_t>(i));
  by_last_.resize(support.size());

  for (std::size_t pi = 0; pi < spec.forbidden.size(); ++pi) {
    const Pattern& p = spec.forbidden[pi];
    if (p.support.empty()) {
      forbids_everything_ = true;
      continue;
    }
    const Element x0inv = g.inverse(p.support.front());
    std::vector<Placement> found;
    for (const auto& y : support) {
      Element at = g.multiply(y, x0inv);
      Placement pl{pi, at, {}, p.values};
      bool inside = true;
      for (const auto& x : p.support) {
        auto it = idx.find(g.multiply(at, x));
        if (it == idx.end()) {
          inside = false;
          break;
        }
        pl.cells.push_back(it->second);
      }
      if (inside) found.push_back(std::move(pl));
    }
    std::sort(found.begin(), found.end(), [&](const Placement& a, const Placement& b) { return g.less(a.at, b.at); });
    for (auto& pl : found) placements_.push_back(std::move(pl));
  }
  for (std::size_t k = 0; k < placements_.size(); ++k) {
    const auto& cells = placements_[k].cells;
    by_last_[*std::max_element(cells.begin(), cells.end())].push_back(static_cast<std::uint32_t>(k));
  }
}

bool AdmissibilityChecker::matches(const Placement& p, std::span<const Symbol> values) const {
  for (std::size_t i = 0; i < p.cells.size(); ++i)
    if (values[p.cells[i]] != p.values[i]) return false;
  return true;
}

std::optional<Violation> AdmissibilityChecker::first_violation(std::span<const Symbol> values) const {
  if (forbids_everything_ && !values.empty()) return Violation{0, Element()};
  for (const auto& p : placements_)
    if (matches(p, values)) return Violation{p.pattern, p.at};
  return std::nullopt;
}

bool AdmissibilityChecker::admissible_at(std::span<const Symbol> values, std::size_t last) const {
  if (forbids_everything_) return false;
  for (std::uint32_t k : by_last_[last])
    if (matches(placements_[k], values)) return false;
  return true;
}

namespace {

void check_window_against(const Window& w, const ShiftSpec& spec) {
  if (!(w.group() == spec.group)) throw UsageError("window is over " + w.group().describe() + ", spec over " + spec.group.describe());
  for (Symbol s : w.values())
    if (s >= spec.alphabet.size()) throw UsageError("window symbol outside the spec alphabet");
}

}  // namespace

std::optional<Violation> first_violation(const Window& w, const ShiftSpec& spec) {
  check_window_against(w, spec);
  AdmissibilityChecker checker(spec, w.support());
  auto v = checker.first_violation(w.values());
  if (v && v->placement.code().empty() && spec.forbidden.at(v->pattern_index).support.empty())
    v->placement = spec.group.identity();
  return v;
}

bool locally_admissible(const Window& w, const ShiftSpec& spec) { return !first_violation(w, spec).has_value(); }

std::vector<Element> canonical_support(const GroupKind& group, std::vector<Element> support) {
  sort_canonical(group, support);
  support.erase(std::unique(support.begin(), support.end()), support.end());
  return support;
}

namespace {

void enumerate_forbidden_form(const ShiftSpec& spec, std::span<const Element> support,
                              const std::function<bool(std::span<const Symbol>)>& visit, std::size_t cap) {
  const AdmissibilityChecker checker(spec, support);
  const std::size_t n = support.size();
  const auto q = static_cast<Symbol>(spec.alphabet.size());
  std::vector<Symbol> values(n, 0);
  if (n == 0) {
    visit(values);
    return;
  }
  // depth-first over cells in support order, pruning at each completed placement
  std::size_t pos = 0;
  std::size_t nodes = 0;
  values[0] = 0;
  while (true) {
    if (++nodes > cap)
      throw ResourceError("enumeration over " + std::to_string(n) + " cells visits too many partial windows", cap);
    if (checker.admissible_at(values, pos)) {
      if (pos + 1 == n) {
        if (!visit(values)) return;
      } else {
        ++pos;
        values[pos] = 0;
        continue;
      }
    }
    // advance to the next assignment
    while (values[pos] + 1 == q) {
      if (pos == 0) return;
      --pos;
    }
    ++values[pos];
  }
}

std::set<std::vector<Symbol>> sofic_images(const ShiftSpec& spec, std::span<const Element> support, std::size_t cap) {
  const Presentation& pres = *spec.presentation;
  const GroupKind& g = spec.group;
  std::vector<Element> enlarged;
  for (const auto& x : support)
    for (const auto& n : pres.rule.neighbourhood()) enlarged.push_back(g.multiply(x, n));
  enlarged = canonical_support(g, std::move(enlarged));
  const RuleApplication app(pres.rule, enlarged, support);
  std::set<std::vector<Symbol>> images;
  std::vector<Symbol> out(support.size());
  for_each_admissible(
      pres.pre_spec, enlarged,
      [&](std::span<const Symbol> pre) {
        app.apply(pre, out);
        images.insert(out);
        return true;
      },
      cap);
  return images;
}

}  // namespace

void for_each_admissible(const ShiftSpec& spec, std::span<const Element> support,
                         const std::function<bool(std::span<const Symbol>)>& visit, std::size_t cap) {
  if (!spec.is_sofic()) {
    enumerate_forbidden_form(spec, support, visit, cap);
    return;
  }
  for (const auto& img : sofic_images(spec, support, cap))
    if (!visit(img)) return;
}

std::size_t count_admissible(const ShiftSpec& spec, std::span<const Element> support, std::size_t cap) {
  std::size_t n = 0;
  for_each_admissible(
      spec, support,
      [&](std::span<const Symbol>) {
        ++n;
        return true;
      },
      cap);
  return n;
}

std::vector<Window> enumerate_admissible(const ShiftSpec& spec, std::vector<Element> support, std::size_t cap) {
  if (spec.is_sofic()) return sofic_window_language(spec, std::move(support), cap);
  support = canonical_support(spec.group, std::move(support));
  std::vector<Window> out;
  enumerate_forbidden_form(
      spec, support,
      [&](std::span<const Symbol> v) {
        out.push_back(Window::from_sorted(spec.group, support, std::vector<Symbol>(v.begin(), v.end())));
        return true;
      },
      cap);
  return out;
}

std::vector<Window> sofic_window_language(const ShiftSpec& spec, std::vector<Element> support, std::size_t cap) {
  if (!spec.is_sofic()) throw UsageError("sofic_window_language needs a spec with a presentation");
  support = canonical_support(spec.group, std::move(support));
  std::vector<Window> out;
  for (const auto& img : sofic_images(spec, support, cap)) out.push_back(Window::from_sorted(spec.group, support, img));
  return out;
}

}  // namespace symdyn
