#include "symdyn/window.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

constexpr std::string_view kReserved = "{}();=,#|.->^";

}  // namespace

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() < 2) throw UsageError("an alphabet needs at least two symbols");
  if (symbols_.size() > 255) throw UsageError("alphabet too large");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const char c = symbols_[i];
    if (std::isspace(static_cast<unsigned char>(c)) || !std::isprint(static_cast<unsigned char>(c)) ||
        kReserved.find(c) != std::string_view::npos)
      throw UsageError(std::string("symbol '") + c + "' is reserved");
    if (symbols_.find(c, i + 1) != std::string::npos) throw UsageError(std::string("duplicate symbol '") + c + "'");
  }
}

std::optional<Symbol> Alphabet::find(char c) const {
  const auto pos = symbols_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Symbol>(pos);
}

Symbol Alphabet::parse(char c) const {
  auto s = find(c);
  if (!s) throw UsageError(std::string("symbol '") + c + "' is not in alphabet {" + symbols_ + "}");
  return *s;
}

std::string Alphabet::format(std::span<const Symbol> word) const {
  std::string out;
  out.reserve(word.size());
  for (Symbol s : word) out.push_back(name(s));
  return out;
}

std::vector<Symbol> Alphabet::parse_word(std::string_view text) const {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) out.push_back(parse(c));
  return out;
}

Pattern make_pattern(const GroupKind& group, std::vector<std::pair<Element, Symbol>> cells) {
  std::sort(cells.begin(), cells.end(),
            [&](const auto& a, const auto& b) { return group.less(a.first, b.first); });
  Pattern p;
  for (auto& [x, v] : cells) {
    if (!group.contains(x)) throw UsageError("pattern cell " + group.format(x) + " is not in " + group.describe());
    if (!p.support.empty() && p.support.back() == x) throw UsageError("duplicate pattern cell " + group.format(x));
    p.support.push_back(std::move(x));
    p.values.push_back(v);
  }
  return p;
}

Window::Window(GroupKind group, std::vector<std::pair<Element, Symbol>> cells) : group_(std::move(group)) {
  Pattern p = make_pattern(group_, std::move(cells));
  support_ = std::move(p.support);
  values_ = std::move(p.values);
}

Window::Window(GroupKind group, const Pattern& pattern) : group_(std::move(group)) {
  std::vector<std::pair<Element, Symbol>> cells;
  for (std::size_t i = 0; i < pattern.size(); ++i) cells.emplace_back(pattern.support[i], pattern.values[i]);
  *this = Window(group_, std::move(cells));
}

Window Window::from_sorted(GroupKind group, std::vector<Element> support, std::vector<Symbol> values) {
  if (support.size() != values.size()) throw UsageError("window support and values differ in size");
  Window w(std::move(group));
  w.support_ = std::move(support);
  w.values_ = std::move(values);
  return w;
}

std::optional<std::size_t> Window::index_of(const Element& x) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), x, ElementLess{&group_});
  if (it == support_.end() || !(*it == x)) return std::nullopt;
  return static_cast<std::size_t>(it - support_.begin());
}

std::optional<Symbol> Window::at(const Element& x) const {
  auto i = index_of(x);
  if (!i) return std::nullopt;
  return values_[*i];
}

Window word_window(const Alphabet& alphabet, std::int64_t start, std::string_view word) {
  const GroupKind z = GroupKind::free_abelian(1);
  std::vector<Element> support;
  for (std::size_t i = 0; i < word.size(); ++i) support.push_back(Element{start + static_cast<std::int64_t>(i)});
  return Window::from_sorted(z, std::move(support), alphabet.parse_word(word));
}

Occurrence occurs_at(const Window& w, const Pattern& p, const Element& g) {
  const GroupKind& group = w.group();
  bool mismatch = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto v = w.at(group.multiply(g, p.support[i]));
    if (!v) return Occurrence::undetermined;
    if (*v != p.values[i]) mismatch = true;
  }
  return mismatch ? Occurrence::absent : Occurrence::present;
}

Window translate(const Window& w, const Element& g) {
  const GroupKind& group = w.group();
  const Element ginv = group.inverse(g);
  std::vector<std::pair<Element, Symbol>> cells;
  cells.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) cells.emplace_back(group.multiply(ginv, w.support()[i]), w.values()[i]);
  return Window(group, std::move(cells));
}

Window slice(const Window& w, const SubgroupEmbedding& emb, const Element& j) {
  if (!(w.group() == emb.ambient())) throw UsageError("slice: window is not over the ambient group");
  if (!emb.in_transversal(j)) throw UsageError("slice: " + emb.ambient().format(j) + " is not a transversal element");
  std::vector<std::pair<Element, Symbol>> cells;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Decomposition d = emb.decompose(w.support()[i]);
    if (d.coset == j) cells.emplace_back(std::move(d.sub), w.values()[i]);
  }
  return Window(emb.sub(), std::move(cells));
}

}  // namespace symdyn
