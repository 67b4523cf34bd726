#include "symdyn/local_rule.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap, const char* what) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / base) throw ResourceError(std::string(what) + " is too large", cap);
    r *= base;
  }
  if (r > cap) throw ResourceError(std::string(what) + " is too large", cap);
  return r;
}

using ElementIndex = std::unordered_map<Element, std::size_t, ElementHash>;

ElementIndex index_support(std::span<const Element> support) {
  ElementIndex idx;
  idx.reserve(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) idx.emplace(support[i], i);
  return idx;
}

}  // namespace

LocalRule::LocalRule(GroupKind group, Alphabet input, Alphabet output, std::vector<Element> neighbourhood,
                     std::vector<Symbol> table)
    : group_(std::move(group)),
      input_(std::move(input)),
      output_(std::move(output)),
      neighbourhood_(std::move(neighbourhood)),
      table_(std::move(table)) {
  std::unordered_set<Element, ElementHash> seen;
  for (const auto& x : neighbourhood_) {
    if (!group_.contains(x)) throw UsageError("neighbour " + group_.format(x) + " is not in " + group_.describe());
    if (!seen.insert(x).second) throw UsageError("duplicate neighbour " + group_.format(x));
  }
  const std::size_t expected =
      checked_power(input_.size(), neighbourhood_.size(), static_cast<std::size_t>(-1) / 2, "rule table");
  if (table_.size() != expected)
    throw UsageError("rule table has " + std::to_string(table_.size()) + " entries, expected " +
                     std::to_string(expected));
  for (Symbol s : table_)
    if (s >= output_.size()) throw UsageError("rule table entry outside the output alphabet");
}

LocalRule::LocalRule(GroupKind group, Alphabet alphabet, std::vector<Element> neighbourhood, std::vector<Symbol> table)
    : LocalRule(std::move(group), alphabet, alphabet, std::move(neighbourhood), std::move(table)) {}

LocalRule LocalRule::from_function(GroupKind group, Alphabet input, Alphabet output, std::vector<Element> neighbourhood,
                                   const std::function<Symbol(std::span<const Symbol>)>& f, std::size_t cap) {
  const std::size_t k = neighbourhood.size();
  const std::size_t total = checked_power(input.size(), k, cap, "rule table");
  std::vector<Symbol> table(total);
  std::vector<Symbol> tuple(k, 0);
  for (std::size_t key = 0; key < total; ++key) {
    std::size_t rest = key;
    for (std::size_t i = k; i-- > 0;) {
      tuple[i] = static_cast<Symbol>(rest % input.size());
      rest /= input.size();
    }
    table[key] = f(tuple);
  }
  return LocalRule(std::move(group), std::move(input), std::move(output), std::move(neighbourhood), std::move(table));
}

std::size_t LocalRule::key(std::span<const Symbol> tuple) const {
  std::size_t k = 0;
  for (Symbol s : tuple) k = k * input_.size() + s;
  return k;
}

std::vector<Symbol> LocalRule::decode(std::size_t key) const {
  std::vector<Symbol> tuple(neighbourhood_.size());
  for (std::size_t i = tuple.size(); i-- > 0;) {
    tuple[i] = static_cast<Symbol>(key % input_.size());
    key /= input_.size();
  }
  return tuple;
}

LocalRule LocalRule::normalized() const {
  std::vector<std::size_t> order(neighbourhood_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return group_.less(neighbourhood_[a], neighbourhood_[b]); });
  std::vector<Element> nb;
  for (std::size_t i : order) nb.push_back(neighbourhood_[i]);
  std::vector<Symbol> table(table_.size());
  std::vector<Symbol> sorted(order.size());
  for (std::size_t k = 0; k < table_.size(); ++k) {
    const auto tuple = decode(k);
    for (std::size_t i = 0; i < order.size(); ++i) sorted[i] = tuple[order[i]];
    table[key(sorted)] = table_[k];
  }
  return LocalRule(group_, input_, output_, std::move(nb), std::move(table));
}

LocalRule LocalRule::minimized() const {
  const std::size_t k = neighbourhood_.size();
  std::vector<bool> essential(k, false);
  for (std::size_t key0 = 0; key0 < table_.size(); ++key0) {
    auto tuple = decode(key0);
    for (std::size_t i = 0; i < k; ++i) {
      if (essential[i]) continue;
      const Symbol orig = tuple[i];
      for (Symbol s = 0; s < input_.size(); ++s) {
        tuple[i] = s;
        if (table_[key(tuple)] != table_[key0]) {
          essential[i] = true;
          break;
        }
      }
      tuple[i] = orig;
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < k; ++i)
    if (essential[i]) keep.push_back(i);
  std::vector<Element> nb;
  for (std::size_t i : keep) nb.push_back(neighbourhood_[i]);
  LocalRule reduced = from_function(group_, input_, output_, std::move(nb), [&](std::span<const Symbol> t) {
    std::vector<Symbol> full(k, 0);
    for (std::size_t i = 0; i < keep.size(); ++i) full[keep[i]] = t[i];
    return evaluate(full);
  });
  return reduced.normalized();
}

LocalRule LocalRule::relabelled(GroupKind group, std::vector<Element> neighbourhood) const {
  if (neighbourhood.size() != neighbourhood_.size()) throw UsageError("relabelled: neighbourhood size changed");
  return LocalRule(std::move(group), input_, output_, std::move(neighbourhood), table_);
}

RuleApplication::RuleApplication(const LocalRule& rule, std::span<const Element> support)
    : table_(rule.table().begin(), rule.table().end()),
      radix_(rule.input_alphabet().size()),
      arity_(rule.neighbourhood().size()) {
  const GroupKind& g = rule.group();
  const ElementIndex idx = index_support(support);
  std::vector<std::uint32_t> cell(arity_);
  for (const auto& x : support) {
    bool inside = true;
    for (std::size_t i = 0; i < arity_ && inside; ++i) {
      auto it = idx.find(g.multiply(x, rule.neighbourhood()[i]));
      if (it == idx.end()) inside = false;
      else cell[i] = static_cast<std::uint32_t>(it->second);
    }
    if (!inside) continue;
    outputs_.push_back(x);
    inputs_.insert(inputs_.end(), cell.begin(), cell.end());
  }
}

RuleApplication::RuleApplication(const LocalRule& rule, std::span<const Element> support,
                                 std::span<const Element> outputs)
    : table_(rule.table().begin(), rule.table().end()),
      radix_(rule.input_alphabet().size()),
      arity_(rule.neighbourhood().size()),
      outputs_(outputs.begin(), outputs.end()) {
  const GroupKind& g = rule.group();
  const ElementIndex idx = index_support(support);
  for (const auto& x : outputs_) {
    for (const auto& n : rule.neighbourhood()) {
      auto it = idx.find(g.multiply(x, n));
      if (it == idx.end()) throw UsageError("rule application: neighbourhood of " + g.format(x) + " leaves the support");
      inputs_.push_back(static_cast<std::uint32_t>(it->second));
    }
  }
}

void RuleApplication::apply(std::span<const Symbol> input, std::span<Symbol> output) const {
  const std::uint32_t* in = inputs_.data();
  for (std::size_t o = 0; o < outputs_.size(); ++o) {
    std::size_t key = 0;
    for (std::size_t i = 0; i < arity_; ++i) key = key * radix_ + input[*in++];
    output[o] = table_[key];
  }
}

std::vector<Symbol> RuleApplication::apply(std::span<const Symbol> input) const {
  std::vector<Symbol> out(outputs_.size());
  apply(input, out);
  return out;
}

Window apply_window(const LocalRule& rule, const Window& w) {
  if (!(w.group() == rule.group())) throw UsageError("apply_window: window and rule are over different groups");
  RuleApplication app(rule, w.support());
  std::vector<Element> support(app.output_support().begin(), app.output_support().end());
  return Window::from_sorted(w.group(), std::move(support), app.apply(w.values()));
}

std::size_t TorusConfig::cell_count() const {
  std::size_t n = 1;
  for (auto m : moduli) n *= static_cast<std::size_t>(m);
  return n;
}

std::size_t TorusConfig::index_of(std::span<const std::int64_t> v) const {
  std::size_t idx = 0;
  for (std::size_t i = moduli.size(); i-- > 0;) {
    const std::int64_t m = moduli[i];
    const std::int64_t r = ((v[i] % m) + m) % m;
    idx = idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(r);
  }
  return idx;
}

TorusConfig make_torus(std::vector<std::int64_t> moduli, std::vector<Symbol> values) {
  if (moduli.empty()) throw UsageError("torus needs at least one modulus");
  for (auto m : moduli)
    if (m < 1) throw UsageError("torus moduli must be positive");
  TorusConfig t{std::move(moduli), std::move(values)};
  if (t.values.size() != t.cell_count()) throw UsageError("torus values do not match the moduli");
  return t;
}

TorusConfig apply_torus(const LocalRule& rule, const TorusConfig& t) {
  if (rule.group().tag() != GroupKind::Tag::FreeAbelian)
    throw UsageError("apply_torus needs a rule over free_abelian(d), not " + rule.group().describe());
  const std::size_t d = t.moduli.size();
  if (static_cast<std::size_t>(rule.group().rank()) != d) throw UsageError("apply_torus: torus dimension mismatch");
  TorusConfig out{t.moduli, std::vector<Symbol>(t.values.size())};
  std::vector<std::int64_t> v(d, 0);
  std::vector<std::int64_t> u(d, 0);
  std::vector<Symbol> tuple(rule.neighbourhood().size());
  for (std::size_t cell = 0; cell < t.values.size(); ++cell) {
    std::size_t rest = cell;
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(t.moduli[i]));
      rest /= static_cast<std::size_t>(t.moduli[i]);
    }
    for (std::size_t n = 0; n < tuple.size(); ++n) {
      const auto& off = rule.neighbourhood()[n].code();
      for (std::size_t i = 0; i < d; ++i) u[i] = v[i] + off[i];
      tuple[n] = t.values[t.index_of(u)];
    }
    out.values[cell] = rule.evaluate(tuple);
  }
  return out;
}

LocalRule compose(const LocalRule& first, const LocalRule& second, std::size_t cap) {
  if (!(first.group() == second.group())) throw UsageError("compose: rules are over different groups");
  if (!(first.output_alphabet() == second.input_alphabet()))
    throw UsageError("compose: first rule's outputs are not the second rule's inputs");
  const GroupKind& g = first.group();
  std::vector<Element> nb;
  {
    std::unordered_set<Element, ElementHash> seen;
    for (const auto& x : second.neighbourhood())
      for (const auto& y : first.neighbourhood()) {
        Element xy = g.multiply(x, y);
        if (seen.insert(xy).second) nb.push_back(std::move(xy));
      }
    sort_canonical(g, nb);
  }
  checked_power(first.input_alphabet().size(), nb.size(), cap, "composed rule table");
  const ElementIndex idx = index_support(nb);
  const std::size_t k2 = second.neighbourhood().size();
  const std::size_t k1 = first.neighbourhood().size();
  std::vector<std::size_t> pos(k2 * k1);
  for (std::size_t i = 0; i < k2; ++i)
    for (std::size_t j = 0; j < k1; ++j)
      pos[i * k1 + j] = idx.at(g.multiply(second.neighbourhood()[i], first.neighbourhood()[j]));
  std::vector<Symbol> inner(k1);
  std::vector<Symbol> outer(k2);
  return LocalRule::from_function(
      g, first.input_alphabet(), second.output_alphabet(), nb,
      [&](std::span<const Symbol> t) {
        for (std::size_t i = 0; i < k2; ++i) {
          for (std::size_t j = 0; j < k1; ++j) inner[j] = t[pos[i * k1 + j]];
          outer[i] = first.evaluate(inner);
        }
        return second.evaluate(outer);
      },
      cap);
}

}  // namespace symdyn
