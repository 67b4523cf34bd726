#include "symdyn/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "symdyn/error.hpp"
#include "text_util.hpp"

namespace symdyn {

std::size_t Element::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ code_.size();
  for (std::int64_t v : code_) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

struct GroupKind::Node {
  Tag tag;
  int param = 0;
  // finite tables: row-major product table and inverse table
  std::vector<int> table;
  std::vector<int> inverses;
  std::vector<GroupKind> children;  // direct product: left, right
};

namespace {

using Code = std::vector<std::int64_t>;

}  // namespace

GroupKind GroupKind::free_abelian(int dim) {
  if (dim < 1) throw UsageError("free_abelian dimension must be positive");
  auto n = std::make_shared<Node>();
  n->tag = Tag::FreeAbelian;
  n->param = dim;
  return GroupKind(n);
}

GroupKind GroupKind::free(int rank) {
  if (rank < 1 || rank > 26) throw UsageError("free group rank must be in 1..26");
  auto n = std::make_shared<Node>();
  n->tag = Tag::Free;
  n->param = rank;
  return GroupKind(n);
}

GroupKind GroupKind::finite_table(const std::vector<std::vector<int>>& table) {
  const int order = static_cast<int>(table.size());
  if (order < 1) throw UsageError("finite group table is empty");
  auto n = std::make_shared<Node>();
  n->tag = Tag::FiniteTable;
  n->param = order;
  n->table.reserve(static_cast<std::size_t>(order) * order);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != order) throw UsageError("finite group table is not square");
    for (int v : row) {
      if (v < 0 || v >= order) throw UsageError("finite group table entry out of range");
      n->table.push_back(v);
    }
  }
  auto at = [&](int a, int b) { return n->table[static_cast<std::size_t>(a) * order + b]; };
  for (int a = 0; a < order; ++a) {
    if (at(0, a) != a || at(a, 0) != a) throw UsageError("finite group table: index 0 is not the identity");
  }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) throw UsageError("finite group table is not associative");
  n->inverses.assign(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (at(a, b) == 0 && at(b, a) == 0) {
        n->inverses[a] = b;
        break;
      }
    }
    if (n->inverses[a] < 0) throw UsageError("finite group table: element without inverse");
  }
  return GroupKind(n);
}

GroupKind GroupKind::cyclic(int order) {
  if (order < 1) throw UsageError("cyclic group order must be positive");
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) table[a][b] = (a + b) % order;
  return finite_table(table);
}

GroupKind GroupKind::semidirect_z2z() {
  auto n = std::make_shared<Node>();
  n->tag = Tag::SemidirectZ2Z;
  return GroupKind(n);
}

GroupKind GroupKind::direct_product(const GroupKind& left, const GroupKind& right) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::DirectProduct;
  n->children = {left, right};
  return GroupKind(n);
}

GroupKind::Tag GroupKind::tag() const { return node_->tag; }

int GroupKind::rank() const {
  if (node_->tag != Tag::FreeAbelian && node_->tag != Tag::Free) throw UsageError("rank() needs a free or free abelian group");
  return node_->param;
}

int GroupKind::order() const {
  if (node_->tag != Tag::FiniteTable) throw UsageError("order() needs a finite table group");
  return node_->param;
}

bool GroupKind::is_finite() const {
  switch (node_->tag) {
    case Tag::FiniteTable:
      return true;
    case Tag::DirectProduct:
      return left().is_finite() && right().is_finite();
    default:
      return false;
  }
}

const GroupKind& GroupKind::left() const {
  if (node_->tag != Tag::DirectProduct) throw UsageError("left() needs a direct product");
  return node_->children[0];
}

const GroupKind& GroupKind::right() const {
  if (node_->tag != Tag::DirectProduct) throw UsageError("right() needs a direct product");
  return node_->children[1];
}

int GroupKind::table_entry(int a, int b) const {
  return node_->table[static_cast<std::size_t>(a) * node_->param + b];
}

Element GroupKind::identity() const {
  switch (node_->tag) {
    case Tag::FreeAbelian:
      return Element(Code(node_->param, 0));
    case Tag::Free:
      return Element();
    case Tag::FiniteTable:
      return Element{0};
    case Tag::SemidirectZ2Z:
      return Element{0, 0};
    case Tag::DirectProduct:
      return pair(left().identity(), right().identity());
  }
  return Element();
}

Element GroupKind::pair(const Element& l, const Element& r) const {
  Code c;
  c.reserve(1 + l.code().size() + r.code().size());
  c.push_back(static_cast<std::int64_t>(l.code().size()));
  c.insert(c.end(), l.code().begin(), l.code().end());
  c.insert(c.end(), r.code().begin(), r.code().end());
  return Element(std::move(c));
}

Element GroupKind::first(const Element& a) const {
  const auto& c = a.code();
  const auto len = static_cast<std::size_t>(c.at(0));
  return Element(Code(c.begin() + 1, c.begin() + 1 + static_cast<std::ptrdiff_t>(len)));
}

Element GroupKind::second(const Element& a) const {
  const auto& c = a.code();
  const auto len = static_cast<std::size_t>(c.at(0));
  return Element(Code(c.begin() + 1 + static_cast<std::ptrdiff_t>(len), c.end()));
}

Element GroupKind::multiply(const Element& a, const Element& b) const {
  const auto& x = a.code();
  const auto& y = b.code();
  switch (node_->tag) {
    case Tag::FreeAbelian: {
      if (x.size() != y.size() || x.size() != static_cast<std::size_t>(node_->param))
        throw UsageError("multiply: element does not belong to " + describe());
      Code c(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) c[i] = x[i] + y[i];
      return Element(std::move(c));
    }
    case Tag::Free: {
      Code c = x;
      for (std::int64_t letter : y) {
        if (!c.empty() && c.back() == -letter) {
          c.pop_back();
        } else {
          c.push_back(letter);
        }
      }
      return Element(std::move(c));
    }
    case Tag::FiniteTable:
      if (x.size() != 1 || y.size() != 1) throw UsageError("multiply: element does not belong to " + describe());
      return Element{table_entry(static_cast<int>(x[0]), static_cast<int>(y[0]))};
    case Tag::SemidirectZ2Z: {
      if (x.size() != 2 || y.size() != 2) throw UsageError("multiply: element does not belong to " + describe());
      const std::int64_t i = x[0] + y[0] - 2 * x[0] * y[0];
      const std::int64_t k = (y[0] == 0 ? x[1] : -x[1]) + y[1];
      return Element{i, k};
    }
    case Tag::DirectProduct:
      return pair(left().multiply(first(a), first(b)), right().multiply(second(a), second(b)));
  }
  return Element();
}

Element GroupKind::inverse(const Element& a) const {
  const auto& x = a.code();
  switch (node_->tag) {
    case Tag::FreeAbelian: {
      Code c(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) c[i] = -x[i];
      return Element(std::move(c));
    }
    case Tag::Free: {
      Code c(x.rbegin(), x.rend());
      for (auto& l : c) l = -l;
      return Element(std::move(c));
    }
    case Tag::FiniteTable:
      return Element{node_->inverses.at(static_cast<std::size_t>(x.at(0)))};
    case Tag::SemidirectZ2Z:
      // (0,k)^-1 = (0,-k); (1,k) is an involution
      return x.at(0) == 0 ? Element{0, -x[1]} : Element{1, x[1]};
    case Tag::DirectProduct:
      return pair(left().inverse(first(a)), right().inverse(second(a)));
  }
  return Element();
}

bool GroupKind::contains(const Element& a) const {
  const auto& x = a.code();
  switch (node_->tag) {
    case Tag::FreeAbelian:
      return x.size() == static_cast<std::size_t>(node_->param);
    case Tag::Free:
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0 || x[i] > node_->param || x[i] < -node_->param) return false;
        if (i > 0 && x[i] == -x[i - 1]) return false;
      }
      return true;
    case Tag::FiniteTable:
      return x.size() == 1 && x[0] >= 0 && x[0] < node_->param;
    case Tag::SemidirectZ2Z:
      return x.size() == 2 && (x[0] == 0 || x[0] == 1);
    case Tag::DirectProduct: {
      if (x.empty() || x[0] < 0 || static_cast<std::size_t>(x[0]) + 1 > x.size()) return false;
      return left().contains(first(a)) && right().contains(second(a));
    }
  }
  return false;
}

namespace {

std::int64_t letter_rank(std::int64_t letter) {
  return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
}

}  // namespace

std::strong_ordering GroupKind::compare(const Element& a, const Element& b) const {
  const auto& x = a.code();
  const auto& y = b.code();
  switch (node_->tag) {
    case Tag::Free: {
      if (x.size() != y.size()) return x.size() <=> y.size();
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) return letter_rank(x[i]) <=> letter_rank(y[i]);
      }
      return std::strong_ordering::equal;
    }
    case Tag::DirectProduct: {
      auto c = left().compare(first(a), first(b));
      if (c != 0) return c;
      return right().compare(second(a), second(b));
    }
    default:
      return x <=> y;
  }
}

std::vector<Element> GroupKind::default_generators() const {
  std::vector<Element> gens;
  switch (node_->tag) {
    case Tag::FreeAbelian:
      for (int i = 0; i < node_->param; ++i) {
        Code c(node_->param, 0);
        c[i] = 1;
        gens.emplace_back(std::move(c));
      }
      break;
    case Tag::Free:
      for (int i = 1; i <= node_->param; ++i) gens.push_back(Element{i});
      break;
    case Tag::FiniteTable:
      for (int i = 1; i < node_->param; ++i) gens.push_back(Element{i});
      break;
    case Tag::SemidirectZ2Z:
      gens.push_back(Element{1, 0});
      gens.push_back(Element{0, 1});
      break;
    case Tag::DirectProduct: {
      const Element le = left().identity();
      const Element re = right().identity();
      for (const auto& g : left().default_generators()) gens.push_back(pair(g, re));
      for (const auto& g : right().default_generators()) gens.push_back(pair(le, g));
      break;
    }
  }
  return gens;
}

Element GroupKind::vec(std::vector<std::int64_t> coords) const {
  if (node_->tag != Tag::FreeAbelian || coords.size() != static_cast<std::size_t>(node_->param))
    throw UsageError("vec() needs free_abelian(" + std::to_string(coords.size()) + ")");
  return Element(std::move(coords));
}

Element GroupKind::word(std::string_view letters) const {
  if (node_->tag != Tag::Free) throw UsageError("word() needs a free group");
  return parse_element(letters);
}

std::string GroupKind::format(const Element& a) const {
  const auto& x = a.code();
  std::ostringstream os;
  switch (node_->tag) {
    case Tag::FreeAbelian:
    case Tag::SemidirectZ2Z: {
      os << '(';
      for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
      os << ')';
      break;
    }
    case Tag::Free:
      if (x.empty()) return "1";
      for (std::size_t i = 0; i < x.size(); ++i) {
        const char base = x[i] > 0 ? 'a' : 'A';
        os << (i ? " " : "") << static_cast<char>(base + (x[i] > 0 ? x[i] : -x[i]) - 1);
      }
      break;
    case Tag::FiniteTable:
      os << '#' << x.at(0);
      break;
    case Tag::DirectProduct:
      os << '(' << left().format(first(a)) << '|' << right().format(second(a)) << ')';
      break;
  }
  return os.str();
}

Element GroupKind::parse_element(std::string_view text) const {
  const std::string_view t = detail::trim(text);
  auto fail = [&](const std::string& why) -> UsageError {
    return UsageError("bad element literal '" + std::string(text) + "' for " + describe() + ": " + why);
  };
  switch (node_->tag) {
    case Tag::FreeAbelian:
    case Tag::SemidirectZ2Z: {
      std::string_view body = t;
      if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw fail("unbalanced parentheses");
        body = body.substr(1, body.size() - 2);
      } else if (node_->tag == Tag::SemidirectZ2Z || node_->param != 1) {
        throw fail("expected '(...)'");
      }
      Code c;
      for (auto part : detail::split_top_level(body, ',')) {
        auto v = detail::parse_int(detail::trim(part));
        if (!v) throw fail("expected an integer");
        c.push_back(*v);
      }
      Element e(std::move(c));
      if (!contains(e)) throw fail("wrong arity or range");
      return e;
    }
    case Tag::Free: {
      if (t == "1" || t == "e" || t.empty()) return Element();
      Element result;
      for (char ch : t) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        std::int64_t letter = 0;
        if (ch >= 'a' && ch <= 'z') letter = ch - 'a' + 1;
        else if (ch >= 'A' && ch <= 'Z') letter = -(ch - 'A' + 1);
        else throw fail("unexpected character");
        if (letter > node_->param || -letter > node_->param) throw fail("letter beyond rank");
        result = multiply(result, Element{letter});
      }
      return result;
    }
    case Tag::FiniteTable: {
      if (t.empty() || t.front() != '#') throw fail("expected '#index'");
      auto v = detail::parse_int(t.substr(1));
      if (!v || *v < 0 || *v >= node_->param) throw fail("index out of range");
      return Element{*v};
    }
    case Tag::DirectProduct: {
      if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw fail("expected '(<left>|<right>)'");
      auto parts = detail::split_top_level(t.substr(1, t.size() - 2), '|');
      if (parts.size() != 2) throw fail("expected exactly one top-level '|'");
      return pair(left().parse_element(parts[0]), right().parse_element(parts[1]));
    }
  }
  throw fail("unknown kind");
}

std::string GroupKind::describe() const {
  switch (node_->tag) {
    case Tag::FreeAbelian:
      return "free_abelian(" + std::to_string(node_->param) + ")";
    case Tag::Free:
      return "free(" + std::to_string(node_->param) + ")";
    case Tag::SemidirectZ2Z:
      return "semidirect";
    case Tag::DirectProduct:
      return "product(" + left().describe() + "," + right().describe() + ")";
    case Tag::FiniteTable: {
      std::string s = "finite(";
      for (int a = 0; a < node_->param; ++a) {
        if (a) s += '/';
        for (int b = 0; b < node_->param; ++b) {
          if (b) s += ' ';
          s += std::to_string(table_entry(a, b));
        }
      }
      return s + ")";
    }
  }
  return "?";
}

GroupKind GroupKind::parse(std::string_view text) {
  const std::string_view t = detail::trim(text);
  auto fail = [&](const std::string& why) -> UsageError {
    return UsageError("bad group kind '" + std::string(text) + "': " + why);
  };
  auto int_arg = [&](std::string_view inner) {
    auto v = detail::parse_int(detail::trim(inner));
    if (!v) throw fail("expected an integer argument");
    return static_cast<int>(*v);
  };
  if (t == "Z") return free_abelian(1);
  if (t.starts_with("Z^")) return free_abelian(int_arg(t.substr(2)));
  if (t.size() > 1 && t[0] == 'F' && std::isdigit(static_cast<unsigned char>(t[1]))) return free(int_arg(t.substr(1)));
  if (t == "semidirect") return semidirect_z2z();

  const auto open = t.find('(');
  if (open == std::string_view::npos || t.back() != ')') throw fail("unknown kind");
  const std::string_view name = detail::trim(t.substr(0, open));
  const std::string_view inner = t.substr(open + 1, t.size() - open - 2);
  if (name == "free_abelian") return free_abelian(int_arg(inner));
  if (name == "free") return free(int_arg(inner));
  if (name == "cyclic") return cyclic(int_arg(inner));
  if (name == "product") {
    auto parts = detail::split_top_level(inner, ',');
    if (parts.size() != 2) throw fail("product takes two kinds");
    return direct_product(parse(parts[0]), parse(parts[1]));
  }
  if (name == "finite") {
    std::vector<std::vector<int>> table;
    for (auto row : detail::split_top_level(inner, '/')) {
      std::vector<int> r;
      for (auto tok : detail::split_ws(row)) r.push_back(int_arg(tok));
      table.push_back(std::move(r));
    }
    return finite_table(table);
  }
  throw fail("unknown kind");
}

bool operator==(const GroupKind& a, const GroupKind& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.tag != y.tag || x.param != y.param || x.table != y.table) return false;
  if (x.tag == GroupKind::Tag::DirectProduct) return a.left() == b.left() && a.right() == b.right();
  return true;
}

void sort_canonical(const GroupKind& group, std::vector<Element>& elements) {
  std::sort(elements.begin(), elements.end(), ElementLess{&group});
}

}  // namespace symdyn
