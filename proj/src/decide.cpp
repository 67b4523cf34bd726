#include "symdyn/decide.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "symdyn/error.hpp"
#include "symdyn/metric.hpp"

namespace symdyn {

const char* to_string(SurjectivityVerdict::Decision d) {
  switch (d) {
    case SurjectivityVerdict::Decision::surjective: return "surjective";
    case SurjectivityVerdict::Decision::not_surjective: return "not_surjective";
    case SurjectivityVerdict::Decision::unknown: return "unknown";
  }
  return "?";
}

const char* to_string(InjectivityVerdict::Decision d) {
  switch (d) {
    case InjectivityVerdict::Decision::injective: return "injective";
    case InjectivityVerdict::Decision::not_injective: return "not_injective";
    case InjectivityVerdict::Decision::unknown: return "unknown";
  }
  return "?";
}

std::pair<std::int64_t, std::int64_t> hull_1d(const LocalRule& rule) {
  if (!(rule.group() == GroupKind::free_abelian(1)))
    throw UsageError("one-dimensional procedures need a rule over free_abelian(1), not " + rule.group().describe());
  if (rule.neighbourhood().empty()) return {0, 0};
  std::int64_t lo = rule.neighbourhood()[0].code()[0];
  std::int64_t hi = lo;
  for (const auto& n : rule.neighbourhood()) {
    lo = std::min(lo, n.code()[0]);
    hi = std::max(hi, n.code()[0]);
  }
  return {lo, hi};
}

namespace {

std::size_t power_capped(std::size_t base, std::size_t exp, std::size_t cap, const char* what) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / base) throw ResourceError(std::string(what) + " is too large", cap);
    r *= base;
  }
  return r;
}

/*
 * The rule rewritten over the contiguous window [lo, lo + width): label[w] is the
 * output for the window word w (base q, first cell most significant). States of
 * the de Bruijn automaton are the words of length width - 1.
 */
struct SpanRule {
  std::size_t q = 0;
  std::size_t width = 0;
  std::size_t states = 0;
  std::int64_t lo = 0;
  std::vector<Symbol> label;

  std::size_t next(std::size_t state, std::size_t a) const { return (state * q + a) % states; }
  Symbol out(std::size_t state, std::size_t a) const { return label[state * q + a]; }
};

SpanRule span_rule(const LocalRule& rule, std::size_t min_width, std::size_t cap) {
  if (!rule.endomorphic()) throw UsageError("one-dimensional procedures need equal input and output alphabets");
  auto [l, r] = hull_1d(rule);
  SpanRule s;
  s.q = rule.input_alphabet().size();
  s.lo = l;
  s.width = std::max<std::size_t>(static_cast<std::size_t>(r - l + 1), min_width);
  s.states = power_capped(s.q, s.width - 1, cap, "de Bruijn state space");
  const std::size_t words = power_capped(s.q, s.width, cap, "de Bruijn edge set");
  s.label.resize(words);
  std::vector<std::size_t> offset;
  for (const auto& n : rule.neighbourhood()) offset.push_back(static_cast<std::size_t>(n.code()[0] - l));
  std::vector<Symbol> word(s.width);
  std::vector<Symbol> tuple(offset.size());
  for (std::size_t w = 0; w < words; ++w) {
    std::size_t rest = w;
    for (std::size_t i = s.width; i-- > 0;) {
      word[i] = static_cast<Symbol>(rest % s.q);
      rest /= s.q;
    }
    for (std::size_t i = 0; i < offset.size(); ++i) tuple[i] = word[offset[i]];
    s.label[w] = rule.evaluate(tuple);
  }
  return s;
}

std::uint64_t count_on_span(const SpanRule& s, std::span<const Symbol> word) {
  std::vector<std::uint64_t> cnt(s.states, 1);
  std::vector<std::uint64_t> nxt(s.states);
  for (Symbol y : word) {
    std::fill(nxt.begin(), nxt.end(), 0);
    for (std::size_t u = 0; u < s.states; ++u) {
      if (cnt[u] == 0) continue;
      for (std::size_t a = 0; a < s.q; ++a)
        if (s.out(u, a) == y) nxt[s.next(u, a)] += cnt[u];
    }
    cnt.swap(nxt);
  }
  std::uint64_t total = 0;
  for (auto c : cnt) total += c;
  return total;
}

}  // namespace

std::uint64_t count_predecessors(const LocalRule& rule, std::span<const Symbol> word, std::size_t cap) {
  for (Symbol y : word)
    if (y >= rule.output_alphabet().size()) throw UsageError("count_predecessors: symbol outside the alphabet");
  return count_on_span(span_rule(rule, 1, cap), word);
}

std::uint64_t count_predecessors(const LocalRule& rule, const Window& word, std::size_t cap) {
  if (!(word.group() == rule.group())) throw UsageError("count_predecessors: word and rule are over different groups");
  for (std::size_t i = 1; i < word.size(); ++i)
    if (word.support()[i].code()[0] != word.support()[i - 1].code()[0] + 1)
      throw UsageError("count_predecessors: the word's support is not an interval");
  return count_predecessors(rule, word.values(), cap);
}

SurjectivityVerdict decide_surjective_1d(const LocalRule& rule, std::size_t balance_length, std::size_t cap) {
  const SpanRule s = span_rule(rule, 1, cap);
  SurjectivityVerdict verdict;

  // Breadth-first subset construction from the set of all states; symbols are
  // tried in order, so the first dead end gives the least shortest word.
  using Subset = std::vector<bool>;
  std::map<Subset, std::size_t> seen;
  std::vector<std::pair<std::size_t, Symbol>> parent;  // (predecessor node, symbol)
  std::vector<Subset> nodes;
  nodes.emplace_back(s.states, true);
  seen.emplace(nodes[0], 0);
  parent.emplace_back(0, 0);
  std::optional<std::vector<Symbol>> goe;
  for (std::size_t head = 0; head < nodes.size() && !goe; ++head) {
    for (std::size_t y = 0; y < s.q && !goe; ++y) {
      Subset next(s.states, false);
      bool any = false;
      for (std::size_t u = 0; u < s.states; ++u) {
        if (!nodes[head][u]) continue;
        for (std::size_t a = 0; a < s.q; ++a)
          if (s.out(u, a) == y) {
            next[s.next(u, a)] = true;
            any = true;
          }
      }
      if (!any) {
        std::vector<Symbol> word{static_cast<Symbol>(y)};
        for (std::size_t n = head; n != 0; n = parent[n].first) word.push_back(parent[n].second);
        std::reverse(word.begin(), word.end());
        goe = std::move(word);
        break;
      }
      if (seen.emplace(next, nodes.size()).second) {
        if (nodes.size() >= cap) throw ResourceError("subset construction is too large", cap);
        nodes.push_back(std::move(next));
        parent.emplace_back(head, static_cast<Symbol>(y));
      }
    }
  }

  for (std::size_t n = 1; n <= balance_length; ++n) {
    std::size_t total = 1;
    bool fits = true;
    for (std::size_t i = 0; i < n && fits; ++i) {
      if (total > (std::size_t{1} << 20) / s.q) fits = false;
      total *= s.q;
    }
    if (!fits) break;
    BalanceRow row{n, UINT64_MAX, 0};
    std::vector<Symbol> word(n, 0);
    for (std::size_t w = 0; w < total; ++w) {
      std::size_t rest = w;
      for (std::size_t i = n; i-- > 0;) {
        word[i] = static_cast<Symbol>(rest % s.q);
        rest /= s.q;
      }
      const auto c = count_on_span(s, word);
      row.min_preimages = std::min(row.min_preimages, c);
      row.max_preimages = std::max(row.max_preimages, c);
    }
    verdict.balance.push_back(row);
  }

  if (goe) {
    if (count_on_span(s, *goe) != 0) throw InvariantError("Garden-of-Eden certificate has a preimage");
    verdict.decision = SurjectivityVerdict::Decision::not_surjective;
    verdict.goe = word_window(rule.output_alphabet(), 0, rule.output_alphabet().format(*goe));
  } else {
    verdict.decision = SurjectivityVerdict::Decision::surjective;
  }
  return verdict;
}

namespace {

// Strongly connected component id per vertex (iterative Kosaraju).
std::vector<std::size_t> components(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<std::size_t>> radj(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v : adj[u]) radj[v].push_back(u);
  std::vector<std::size_t> order;
  std::vector<bool> done(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (done[root]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    done[root] = true;
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      if (i < adj[u].size()) {
        const std::size_t v = adj[u][i++];
        if (!done[v]) {
          done[v] = true;
          stack.emplace_back(v, 0);
        }
      } else {
        order.push_back(u);
        stack.pop_back();
      }
    }
  }
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, none);
  std::size_t next_id = 0;
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t root = order[k];
    if (comp[root] != none) continue;
    std::vector<std::size_t> stack{root};
    comp[root] = next_id;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : radj[u])
        if (comp[v] == none) {
          comp[v] = next_id;
          stack.push_back(v);
        }
    }
    ++next_id;
  }
  return comp;
}

}  // namespace

InjectivityVerdict decide_injective_1d(const LocalRule& rule, std::size_t cap) {
  // Width at least 2 so that two different edges always lead to an off-diagonal pair.
  const SpanRule s = span_rule(rule, 2, cap);
  const std::size_t n = power_capped(s.states, 2, cap, "pair graph");
  struct Edge {
    std::size_t to;
    Symbol a, b;
  };
  std::vector<std::vector<Edge>> edges(n);
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t u = 0; u < s.states; ++u)
    for (std::size_t v = 0; v < s.states; ++v)
      for (std::size_t a = 0; a < s.q; ++a)
        for (std::size_t b = 0; b < s.q; ++b)
          if (s.out(u, a) == s.out(v, b)) {
            const std::size_t to = s.next(u, a) * s.states + s.next(v, b);
            edges[u * s.states + v].push_back({to, static_cast<Symbol>(a), static_cast<Symbol>(b)});
            adj[u * s.states + v].push_back(to);
          }
  const auto comp = components(adj);
  std::vector<std::size_t> comp_size(n, 0);
  for (auto c : comp) ++comp_size[c];

  InjectivityVerdict verdict;
  verdict.decision = InjectivityVerdict::Decision::injective;
  for (std::size_t start = 0; start < n; ++start) {
    if (start / s.states == start % s.states) continue;
    bool cyclic = comp_size[comp[start]] > 1;
    for (std::size_t v : adj[start]) cyclic = cyclic || v == start;
    if (!cyclic) continue;

    // Shortest cycle through `start` inside its component.
    std::vector<std::size_t> prev(n, n);
    std::vector<const Edge*> via(n, nullptr);
    std::deque<std::size_t> queue{start};
    const Edge* closing = nullptr;
    std::size_t last = n;
    while (!queue.empty() && !closing) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const auto& e : edges[u]) {
        if (comp[e.to] != comp[start]) continue;
        if (e.to == start) {
          closing = &e;
          last = u;
          break;
        }
        if (prev[e.to] == n) {
          prev[e.to] = u;
          via[e.to] = &e;
          queue.push_back(e.to);
        }
      }
    }
    std::vector<const Edge*> cycle{closing};
    for (std::size_t u = last; u != start; u = prev[u]) cycle.push_back(via[u]);
    std::reverse(cycle.begin(), cycle.end());

    const auto period = static_cast<std::int64_t>(cycle.size());
    const std::int64_t shift = s.lo + static_cast<std::int64_t>(s.width) - 1;
    std::vector<Symbol> x(cycle.size()), y(cycle.size());
    for (std::int64_t i = 0; i < period; ++i) {
      const std::size_t pos = static_cast<std::size_t>((((i + shift) % period) + period) % period);
      x[pos] = cycle[static_cast<std::size_t>(i)]->a;
      y[pos] = cycle[static_cast<std::size_t>(i)]->b;
    }
    TorusConfig t1 = make_torus({period}, std::move(x));
    TorusConfig t2 = make_torus({period}, std::move(y));
    if (t1 == t2 || apply_torus(rule, t1) != apply_torus(rule, t2))
      throw InvariantError("pair-graph certificate does not verify");
    verdict.decision = InjectivityVerdict::Decision::not_injective;
    verdict.tori = std::make_pair(std::move(t1), std::move(t2));
    break;
  }
  return verdict;
}

namespace {

std::vector<Element> product_support(const GroupKind& g, std::span<const Element> xs, std::span<const Element> ys) {
  std::vector<Element> out;
  for (const auto& x : xs)
    for (const auto& y : ys) out.push_back(g.multiply(x, y));
  return canonical_support(g, std::move(out));
}

std::string as_key(std::span<const Symbol> v) { return std::string(v.begin(), v.end()); }

}  // namespace

std::optional<Window> find_goe_on_support(const CellularAutomaton& ca, std::vector<Element> support, std::size_t cap) {
  const GroupKind& g = ca.group();
  support = canonical_support(g, std::move(support));
  const std::vector<Element> enlarged = product_support(g, support, ca.rule().neighbourhood());
  const RuleApplication app(ca.rule(), enlarged, support);
  std::unordered_set<std::string> images;
  std::vector<Symbol> out(support.size());
  for_each_admissible(
      ca.support(), enlarged,
      [&](std::span<const Symbol> values) {
        app.apply(values, out);
        images.insert(as_key(out));
        return true;
      },
      cap);
  std::optional<Window> found;
  for_each_admissible(
      ca.support(), support,
      [&](std::span<const Symbol> values) {
        if (images.count(as_key(values))) return true;
        found = Window::from_sorted(g, support, std::vector<Symbol>(values.begin(), values.end()));
        return false;
      },
      cap);
  return found;
}

std::optional<GoePattern> find_goe(const CellularAutomaton& ca, std::size_t radius, std::size_t cap) {
  const GeneratingSet sigma = GeneratingSet::standard(ca.group());
  for (std::size_t r = 0; r <= radius; ++r)
    if (auto w = find_goe_on_support(ca, disk(ca.group().identity(), r, sigma), cap)) return GoePattern{*w, r};
  return std::nullopt;
}

std::optional<PreinjectivityWitness> preinjectivity_witness(const CellularAutomaton& ca, std::size_t radius,
                                                            std::size_t cap) {
  const GroupKind& g = ca.group();
  const GeneratingSet sigma = GeneratingSet::standard(g);
  std::vector<Element> n_inv;
  for (const auto& n : ca.rule().neighbourhood()) n_inv.push_back(g.inverse(n));
  for (std::size_t r = 0; r <= radius; ++r) {
    const std::vector<Element> d = disk(g.identity(), r, sigma);
    const std::vector<Element> affected = product_support(g, d, n_inv);
    const std::vector<Element> w = product_support(g, affected, ca.rule().neighbourhood());
    std::vector<std::size_t> inside, outside;
    {
      std::size_t k = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (k < d.size() && w[i] == d[k]) {
          inside.push_back(i);
          ++k;
        } else {
          outside.push_back(i);
        }
      }
    }
    const RuleApplication app(ca.rule(), w, affected);
    std::unordered_map<std::string, std::vector<Symbol>> first_seen;
    std::vector<Symbol> image(affected.size());
    std::optional<PreinjectivityWitness> found;
    for_each_admissible(
        ca.support(), w,
        [&](std::span<const Symbol> values) {
          app.apply(values, image);
          std::string key;
          key.reserve(outside.size() + image.size());
          for (std::size_t i : outside) key.push_back(static_cast<char>(values[i]));
          key += as_key(image);
          std::vector<Symbol> copy(values.begin(), values.end());
          auto [it, fresh] = first_seen.emplace(std::move(key), copy);
          if (fresh) return true;
          found = PreinjectivityWitness{Window::from_sorted(g, w, it->second), Window::from_sorted(g, w, std::move(copy)), r};
          return false;
        },
        cap);
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<LocalRule> inverse_rule_search(const LocalRule& rule, std::size_t max_radius, std::size_t cap) {
  if (!rule.endomorphic()) throw UsageError("inverse_rule_search needs equal input and output alphabets");
  auto [l, rr] = hull_1d(rule);
  const GroupKind& z = rule.group();
  const std::size_t q = rule.input_alphabet().size();
  const LocalRule identity = identity_rule(z, rule.input_alphabet()).minimized();
  for (std::size_t radius = 0; radius <= max_radius; ++radius) {
    const auto r = static_cast<std::int64_t>(radius);
    const std::int64_t lo = std::min<std::int64_t>(-r + l, 0);
    const std::int64_t hi = std::max<std::int64_t>(r + rr, 0);
    const auto len = static_cast<std::size_t>(hi - lo + 1);
    const std::size_t total = power_capped(q, len, cap, "inverse search window set");
    const std::size_t keys = power_capped(q, 2 * radius + 1, cap, "inverse rule table");
    std::vector<int> table(keys, -1);
    std::vector<Symbol> x(len), tuple(rule.neighbourhood().size());
    bool conflict = false;
    for (std::size_t w = 0; w < total && !conflict; ++w) {
      std::size_t rest = w;
      for (std::size_t i = len; i-- > 0;) {
        x[i] = static_cast<Symbol>(rest % q);
        rest /= q;
      }
      std::size_t key = 0;
      for (std::int64_t j = -r; j <= r; ++j) {
        for (std::size_t i = 0; i < tuple.size(); ++i)
          tuple[i] = x[static_cast<std::size_t>(j + rule.neighbourhood()[i].code()[0] - lo)];
        key = key * q + rule.evaluate(tuple);
      }
      const Symbol centre = x[static_cast<std::size_t>(-lo)];
      if (table[key] < 0) table[key] = centre;
      else if (table[key] != centre) conflict = true;
    }
    if (conflict) continue;
    std::vector<Element> nb;
    for (std::int64_t j = -r; j <= r; ++j) nb.push_back(Element{j});
    std::vector<Symbol> entries(keys);
    for (std::size_t k = 0; k < keys; ++k) entries[k] = static_cast<Symbol>(std::max(table[k], 0));
    LocalRule inverse(z, rule.input_alphabet(), std::move(nb), std::move(entries));
    if (compose(rule, inverse, cap).minimized() == identity && compose(inverse, rule, cap).minimized() == identity)
      return inverse.minimized();
  }
  return std::nullopt;
}

}  // namespace symdyn
