#include "symdyn/metric.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>

#include "symdyn/error.hpp"

namespace symdyn {

GeneratingSet::GeneratingSet(GroupKind group, std::vector<Element> generators)
    : group_(std::move(group)), generators_(std::move(generators)) {
  std::unordered_set<Element, ElementHash> seen;
  for (const auto& g : generators_) {
    if (!group_.contains(g)) throw UsageError("generator " + group_.format(g) + " is not in " + group_.describe());
    if (group_.is_identity(g)) throw UsageError("generating set may not contain the identity");
    if (!seen.insert(g).second) throw UsageError("duplicate generator " + group_.format(g));
  }
  std::unordered_set<Element, ElementHash> sym;
  for (const auto& g : generators_) {
    sym.insert(g);
    sym.insert(group_.inverse(g));
  }
  symmetric_.assign(sym.begin(), sym.end());
  sort_canonical(group_, symmetric_);
}

GeneratingSet GeneratingSet::standard(const GroupKind& group) {
  return GeneratingSet(group, group.default_generators());
}

namespace {

// Breadth-first layers from the identity; stops when `done` is true after a layer
// or when `max_radius` layers have been produced.
template <typename Done>
std::vector<Element> bfs_ball(const GeneratingSet& s, std::size_t max_radius, std::size_t cap, Done done) {
  const GroupKind& g = s.group();
  std::unordered_set<Element, ElementHash> seen;
  std::vector<Element> all{g.identity()};
  seen.insert(all.front());
  std::vector<Element> frontier = all;
  if (done(frontier, 0)) return all;
  for (std::size_t r = 1; r <= max_radius && !frontier.empty(); ++r) {
    std::vector<Element> next;
    for (const auto& x : frontier) {
      for (const auto& gen : s.symmetric()) {
        Element y = g.multiply(x, gen);
        if (seen.insert(y).second) {
          if (seen.size() > cap) throw ResourceError("ball enumeration exceeded its size cap at radius " + std::to_string(r), cap);
          next.push_back(std::move(y));
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
    if (done(frontier, r)) break;
  }
  return all;
}

}  // namespace

std::size_t word_length(const Element& a, const GeneratingSet& s, std::size_t cap) {
  if (!s.group().contains(a)) throw UsageError("word_length: element not in " + s.group().describe());
  std::optional<std::size_t> found;
  bfs_ball(s, static_cast<std::size_t>(-1), cap, [&](const std::vector<Element>& layer, std::size_t r) {
    if (std::find(layer.begin(), layer.end(), a) != layer.end()) found = r;
    return found.has_value();
  });
  if (!found) throw InvariantError("word_length: " + s.group().format(a) + " is not generated by the given set");
  return *found;
}

std::size_t distance(const Element& g, const Element& h, const GeneratingSet& s, std::size_t cap) {
  const GroupKind& k = s.group();
  return word_length(k.multiply(k.inverse(g), h), s, cap);
}

std::vector<Element> disk(const Element& center, std::size_t radius, const GeneratingSet& s, std::size_t cap) {
  const GroupKind& k = s.group();
  std::vector<Element> ball = bfs_ball(s, radius, cap, [](const auto&, std::size_t) { return false; });
  if (!k.is_identity(center)) {
    for (auto& x : ball) x = k.multiply(center, x);
  }
  sort_canonical(k, ball);
  return ball;
}

}  // namespace symdyn
