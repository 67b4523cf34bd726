#include "symdyn/embedding.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "symdyn/error.hpp"
#include "text_util.hpp"

namespace symdyn {

std::string to_string(TransversalKind kind) {
  switch (kind) {
    case TransversalKind::CoordinateAxis: return "coordinate_axis";
    case TransversalKind::LeftFactor: return "left_factor";
    case TransversalKind::DihedralPair: return "dihedral_pair";
    case TransversalKind::FreeConjugates: return "free_conjugates";
    case TransversalKind::SkewAxis: return "skew_axis";
    case TransversalKind::FiniteCosets: return "finite_cosets";
  }
  return "?";
}

SubgroupEmbedding SubgroupEmbedding::coordinate_axis(int sub_dim, int ambient_dim, int offset) {
  if (sub_dim < 1 || ambient_dim < sub_dim || offset < 0 || offset + sub_dim > ambient_dim)
    throw UsageError("coordinate_axis: need 1 <= d <= n and 0 <= offset <= n - d");
  SubgroupEmbedding e(GroupKind::free_abelian(ambient_dim), GroupKind::free_abelian(sub_dim),
                      TransversalKind::CoordinateAxis);
  e.offset_ = offset;
  return e;
}

SubgroupEmbedding SubgroupEmbedding::left_factor(const GroupKind& h, const GroupKind& k) {
  return SubgroupEmbedding(GroupKind::direct_product(h, k), k, TransversalKind::LeftFactor);
}

SubgroupEmbedding SubgroupEmbedding::dihedral_pair() {
  return SubgroupEmbedding(GroupKind::semidirect_z2z(), GroupKind::free_abelian(1), TransversalKind::DihedralPair);
}

SubgroupEmbedding SubgroupEmbedding::free_conjugates(int n) {
  if (n < 1 || n > 26) throw UsageError("free_conjugates: rank must be in 1..26");
  return SubgroupEmbedding(GroupKind::free(2), GroupKind::free(n), TransversalKind::FreeConjugates);
}

SubgroupEmbedding SubgroupEmbedding::skew_axis() {
  return SubgroupEmbedding(GroupKind::free_abelian(2), GroupKind::free_abelian(1), TransversalKind::SkewAxis);
}

SubgroupEmbedding SubgroupEmbedding::finite_cosets(const GroupKind& ambient, const GroupKind& sub,
                                                   std::vector<int> inject_map, std::vector<int> transversal) {
  if (ambient.tag() != GroupKind::Tag::FiniteTable || sub.tag() != GroupKind::Tag::FiniteTable)
    throw UsageError("finite_cosets: both groups must be finite tables");
  const int n = ambient.order();
  const int m = sub.order();
  if (static_cast<int>(inject_map.size()) != m) throw UsageError("finite_cosets: inject map needs one entry per sub element");
  for (int v : inject_map)
    if (v < 0 || v >= n) throw UsageError("finite_cosets: inject map entry out of range");
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (inject_map[sub.table_entry(a, b)] != ambient.table_entry(inject_map[a], inject_map[b]))
        throw InvariantError("finite_cosets: inject map is not a homomorphism");
  SubgroupEmbedding e(ambient, sub, TransversalKind::FiniteCosets);
  e.preimage_.assign(n, -1);
  for (int g = 0; g < m; ++g) {
    if (e.preimage_[inject_map[g]] >= 0) throw InvariantError("finite_cosets: inject map is not injective");
    e.preimage_[inject_map[g]] = g;
  }
  std::vector<int> hits(n, 0);
  for (int j : transversal) {
    if (j < 0 || j >= n) throw UsageError("finite_cosets: transversal entry out of range");
    for (int g = 0; g < m; ++g) ++hits[ambient.table_entry(j, inject_map[g])];
  }
  for (int x = 0; x < n; ++x)
    if (hits[x] != 1) throw InvariantError("finite_cosets: (j,g) -> j g is not a bijection onto the ambient group");
  e.inject_map_ = std::move(inject_map);
  e.transversal_ = std::move(transversal);
  return e;
}

Element SubgroupEmbedding::inject(const Element& g) const {
  if (!sub_.contains(g)) throw UsageError("inject: element not in " + sub_.describe());
  switch (kind_) {
    case TransversalKind::CoordinateAxis: {
      std::vector<std::int64_t> c(ambient_.rank(), 0);
      for (std::size_t i = 0; i < g.code().size(); ++i) c[offset_ + i] = g.code()[i];
      return Element(std::move(c));
    }
    case TransversalKind::LeftFactor:
      return ambient_.pair(ambient_.left().identity(), g);
    case TransversalKind::DihedralPair:
      return Element{0, g.code()[0]};
    case TransversalKind::FreeConjugates: {
      Element out;
      for (std::int64_t letter : g.code()) {
        const std::int64_t i = (letter > 0 ? letter : -letter) - 1;
        std::vector<std::int64_t> conj(i, 1);
        conj.push_back(letter > 0 ? 2 : -2);
        conj.insert(conj.end(), i, -1);
        out = ambient_.multiply(out, Element(std::move(conj)));
      }
      return out;
    }
    case TransversalKind::SkewAxis:
      return Element{g.code()[0], 0};
    case TransversalKind::FiniteCosets:
      return Element{inject_map_[g.code()[0]]};
  }
  return Element();
}

std::vector<Element> SubgroupEmbedding::generator_images() const {
  std::vector<Element> out;
  for (const auto& s : sub_.default_generators()) out.push_back(inject(s));
  return out;
}

Element SubgroupEmbedding::compose(const Element& coset, const Element& sub) const {
  return ambient_.multiply(coset, inject(sub));
}

Decomposition SubgroupEmbedding::decompose(const Element& gamma) const {
  if (!ambient_.contains(gamma)) throw UsageError("decompose: element not in " + ambient_.describe());
  const auto& c = gamma.code();
  switch (kind_) {
    case TransversalKind::CoordinateAxis: {
      std::vector<std::int64_t> j = c;
      std::vector<std::int64_t> g(c.begin() + offset_, c.begin() + offset_ + sub_.rank());
      std::fill(j.begin() + offset_, j.begin() + offset_ + sub_.rank(), 0);
      return {Element(std::move(j)), Element(std::move(g))};
    }
    case TransversalKind::LeftFactor:
      return {ambient_.pair(ambient_.first(gamma), ambient_.right().identity()), ambient_.second(gamma)};
    case TransversalKind::DihedralPair:
      // (i,k) = (i,0)(0,k)
      return {Element{c[0], 0}, Element{c[1]}};
    case TransversalKind::SkewAxis:
      if (c[1] != 0) return {Element{0, c[1]}, Element{c[0]}};
      return {Element{1, 0}, Element{c[0] - 1}};
    case TransversalKind::FreeConjugates: {
      // Read gamma^-1 along the core graph of the subgroup (an a-path 0..n-1 with a
      // b-loop at every vertex); the right-coset representative is a^x followed by the
      // unread suffix, and its inverse is the left-coset representative of gamma.
      const int n = sub_.rank();
      const Element w = ambient_.inverse(gamma);
      const auto& wc = w.code();
      std::int64_t x = 0;
      std::size_t p = 0;
      for (; p < wc.size(); ++p) {
        const std::int64_t l = wc[p];
        if (l == 1 && x < n - 1) ++x;
        else if (l == -1 && x > 0) --x;
        else if (l != 2 && l != -2) break;
      }
      std::vector<std::int64_t> rep(static_cast<std::size_t>(x), 1);
      rep.insert(rep.end(), wc.begin() + static_cast<std::ptrdiff_t>(p), wc.end());
      const Element j = ambient_.inverse(ambient_.multiply(Element(), Element(std::move(rep))));
      const Element h = ambient_.multiply(ambient_.inverse(j), gamma);
      std::vector<std::int64_t> sub_word;
      std::int64_t v = 0;
      for (std::int64_t l : h.code()) {
        if (l == 1) ++v;
        else if (l == -1) --v;
        else sub_word.push_back(l > 0 ? v + 1 : -(v + 1));
        if (v < 0 || v >= n) throw InvariantError("decompose: coset part left the subgroup core graph");
      }
      if (v != 0) throw InvariantError("decompose: coset part is not in the subgroup");
      return {j, sub_.multiply(Element(), Element(std::move(sub_word)))};
    }
    case TransversalKind::FiniteCosets: {
      for (int j : transversal_) {
        const int rest = ambient_.table_entry(ambient_.inverse(Element{j}).code()[0], static_cast<int>(c[0]));
        if (preimage_[rest] >= 0) return {Element{j}, Element{preimage_[rest]}};
      }
      throw InvariantError("decompose: transversal does not cover " + ambient_.format(gamma));
    }
  }
  throw InvariantError("decompose: unknown transversal kind");
}

bool SubgroupEmbedding::in_transversal(const Element& j) const {
  if (!ambient_.contains(j)) return false;
  const Decomposition d = decompose(j);
  return d.coset == j;
}

Element SubgroupEmbedding::base_representative() const {
  return decompose(ambient_.identity()).coset;
}

void SubgroupEmbedding::check(int max_word_length) const {
  const auto radius = static_cast<std::size_t>(std::max(0, max_word_length));
  const GeneratingSet sub_gens = GeneratingSet::standard(sub_);
  const std::vector<Element> ball = disk(sub_.identity(), radius, sub_gens);
  std::unordered_set<Element, ElementHash> images;
  for (const auto& g : ball) {
    const Element ig = inject(g);
    if (!images.insert(ig).second) throw InvariantError("embedding is not injective at " + sub_.format(g));
    for (const auto& s : sub_gens.symmetric()) {
      if (inject(sub_.multiply(g, s)) != ambient_.multiply(ig, inject(s)))
        throw InvariantError("embedding is not a homomorphism at " + sub_.format(g));
    }
  }
  const GeneratingSet amb_gens = GeneratingSet::standard(ambient_);
  for (const auto& gamma : disk(ambient_.identity(), radius, amb_gens)) {
    const Decomposition d = decompose(gamma);
    if (compose(d.coset, d.sub) != gamma) throw InvariantError("decompose does not factor " + ambient_.format(gamma));
    if (decompose(d.coset) != Decomposition{d.coset, sub_.identity()})
      throw InvariantError("coset part of " + ambient_.format(gamma) + " is not a transversal element");
  }
}

std::string SubgroupEmbedding::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case TransversalKind::CoordinateAxis:
      os << "coordinate_axis(" << sub_.rank() << "," << ambient_.rank() << "," << offset_ << ")";
      break;
    case TransversalKind::LeftFactor:
      os << "left_factor(" << ambient_.left().describe() << ")";
      break;
    case TransversalKind::FreeConjugates:
      os << "free_conjugates(" << sub_.rank() << ")";
      break;
    case TransversalKind::FiniteCosets: {
      os << "finite_cosets(" << ambient_.describe() << ";";
      for (std::size_t i = 0; i < inject_map_.size(); ++i) os << (i ? " " : "") << inject_map_[i];
      os << ";";
      for (std::size_t i = 0; i < transversal_.size(); ++i) os << (i ? " " : "") << transversal_[i];
      os << ")";
      break;
    }
    default:
      os << to_string(kind_);
  }
  return os.str();
}

SubgroupEmbedding SubgroupEmbedding::parse(std::string_view text, const GroupKind& sub) {
  const std::string_view t = detail::trim(text);
  const auto open = t.find('(');
  const std::string_view name = detail::trim(t.substr(0, open));
  std::string_view inner;
  if (open != std::string_view::npos) {
    if (t.back() != ')') throw UsageError("bad embedding '" + std::string(text) + "'");
    inner = t.substr(open + 1, t.size() - open - 2);
  }
  auto ints = [&](std::string_view s) {
    std::vector<int> out;
    for (auto tok : detail::split_ws(s)) {
      auto v = detail::parse_int(tok);
      if (!v) throw UsageError("bad integer '" + std::string(tok) + "' in embedding");
      out.push_back(static_cast<int>(*v));
    }
    return out;
  };
  SubgroupEmbedding result = [&]() {
    if (name == "coordinate_axis") {
      auto args = detail::split_top_level(inner, ',');
      std::vector<int> v;
      for (auto a : args) v.push_back(ints(a).at(0));
      if (v.size() == 2) v.push_back(v[1] - v[0]);
      if (v.size() != 3) throw UsageError("coordinate_axis takes (d,n[,offset])");
      return coordinate_axis(v[0], v[1], v[2]);
    }
    if (name == "left_factor") return left_factor(GroupKind::parse(inner), sub);
    if (name == "dihedral_pair") return dihedral_pair();
    if (name == "free_conjugates") return free_conjugates(ints(inner).at(0));
    if (name == "skew_axis") return skew_axis();
    if (name == "finite_cosets") {
      auto parts = detail::split_top_level(inner, ';');
      if (parts.size() != 3) throw UsageError("finite_cosets takes (<kind>; <inject>; <J>)");
      return finite_cosets(GroupKind::parse(parts[0]), sub, ints(parts[1]), ints(parts[2]));
    }
    throw UsageError("unknown embedding '" + std::string(name) + "'");
  }();
  if (!(result.sub() == sub))
    throw UsageError("embedding " + result.describe() + " starts from " + result.sub().describe() + ", not " +
                     sub.describe());
  return result;
}

bool operator==(const SubgroupEmbedding& a, const SubgroupEmbedding& b) {
  return a.kind_ == b.kind_ && a.ambient_ == b.ambient_ && a.sub_ == b.sub_ && a.offset_ == b.offset_ &&
         a.inject_map_ == b.inject_map_ && a.transversal_ == b.transversal_;
}

std::vector<Element> e_set(const SubgroupEmbedding& emb, std::size_t radius, const GeneratingSet& sigma,
                           std::size_t cap) {
  std::unordered_set<Element, ElementHash> seen;
  std::vector<Element> out;
  for (const auto& gamma : disk(emb.ambient().identity(), radius, sigma, cap)) {
    Element g = emb.decompose(gamma).sub;
    if (seen.insert(g).second) out.push_back(std::move(g));
  }
  sort_canonical(emb.sub(), out);
  return out;
}

std::vector<Element> transversal_slice(const SubgroupEmbedding& emb, std::size_t radius, const GeneratingSet& sigma,
                                       std::size_t cap) {
  std::unordered_set<Element, ElementHash> seen;
  std::vector<Element> out;
  for (const auto& gamma : disk(emb.ambient().identity(), radius, sigma, cap)) {
    Element j = emb.decompose(gamma).coset;
    if (seen.insert(j).second) out.push_back(std::move(j));
  }
  sort_canonical(emb.ambient(), out);
  return out;
}

}  // namespace symdyn
