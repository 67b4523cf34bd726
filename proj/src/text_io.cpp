#include "symdyn/text_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "symdyn/error.hpp"
#include "text_util.hpp"

namespace symdyn {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto t = detail::trim(line);
    if (!t.empty() && t.front() != '#') out.push_back({number, line});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

bool is_marker(std::string_view line) {
  const auto t = detail::trim(line);
  return t == "^";
}

std::int64_t parse_int_at(std::string_view tok, std::size_t line) {
  auto v = detail::parse_int(tok);
  if (!v) throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return *v;
}

Symbol parse_symbol(const Alphabet& alphabet, char c, std::size_t line) {
  auto s = alphabet.find(c);
  if (!s) throw ParseError(line, std::string("symbol '") + c + "' is not in alphabet {" + alphabet.symbols() + "}");
  return *s;
}

bool contiguous_1d(const Window& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w.support()[i].code()[0] != w.support()[i - 1].code()[0] + 1) return false;
  return true;
}

}  // namespace

std::string format_window(const Window& w, const Alphabet& alphabet) {
  const GroupKind& g = w.group();
  std::ostringstream os;
  const bool z = g.tag() == GroupKind::Tag::FreeAbelian && g.rank() == 1;
  const bool z2 = g.tag() == GroupKind::Tag::FreeAbelian && g.rank() == 2;
  if (z && !w.empty() && contiguous_1d(w)) {
    const std::int64_t start = w.support().front().code()[0];
    os << "word " << start << "\n" << alphabet.format(w.values()) << "\n";
    const std::int64_t end = start + static_cast<std::int64_t>(w.size());
    if (start <= 0 && 0 < end) os << std::string(static_cast<std::size_t>(-start), ' ') << "^\n";
    return os.str();
  }
  if (z2 && !w.empty()) {
    std::int64_t x0 = w.support().front().code()[0], x1 = x0, y0 = w.support().front().code()[1], y1 = y0;
    for (const auto& e : w.support()) {
      x0 = std::min(x0, e.code()[0]);
      x1 = std::max(x1, e.code()[0]);
      y0 = std::min(y0, e.code()[1]);
      y1 = std::max(y1, e.code()[1]);
    }
    os << "grid " << x0 << " " << y0 << "\n";
    for (std::int64_t y = y0; y <= y1; ++y) {
      os << (y == 0 ? '>' : '|');
      for (std::int64_t x = x0; x <= x1; ++x) {
        auto v = w.at(Element{x, y});
        os << (v ? alphabet.name(*v) : '.');
      }
      os << "\n";
    }
    if (x0 <= 0 && 0 <= x1) os << std::string(static_cast<std::size_t>(1 - x0), ' ') << "^\n";
    return os.str();
  }
  os << "cells\n";
  for (std::size_t i = 0; i < w.size(); ++i)
    os << "cell " << g.format(w.support()[i]) << " = " << alphabet.name(w.values()[i]) << "\n";
  return os.str();
}

Window parse_window(std::string_view text, const GroupKind& group, const Alphabet& alphabet) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "empty window input");
  const auto head = detail::split_ws(lines[0].text);
  const std::string_view kind = head.at(0);
  if (kind == "word") {
    if (!(group == GroupKind::free_abelian(1))) throw ParseError(lines[0].number, "word windows need free_abelian(1)");
    if (head.size() != 2) throw ParseError(lines[0].number, "expected 'word <start>'");
    const std::int64_t start = parse_int_at(head[1], lines[0].number);
    if (lines.size() < 2) return Window(group);
    const auto body = detail::trim(lines[1].text);
    if (lines.size() > 3 || (lines.size() == 3 && !is_marker(lines[2].text)))
      throw ParseError(lines[lines.size() - 1].number, "unexpected text after the word");
    std::vector<std::pair<Element, Symbol>> cells;
    for (std::size_t i = 0; i < body.size(); ++i)
      cells.emplace_back(Element{start + static_cast<std::int64_t>(i)}, parse_symbol(alphabet, body[i], lines[1].number));
    return Window(group, std::move(cells));
  }
  if (kind == "grid") {
    if (!(group == GroupKind::free_abelian(2))) throw ParseError(lines[0].number, "grid windows need free_abelian(2)");
    if (head.size() != 3) throw ParseError(lines[0].number, "expected 'grid <x0> <y0>'");
    const std::int64_t x0 = parse_int_at(head[1], lines[0].number);
    std::int64_t y = parse_int_at(head[2], lines[0].number);
    std::vector<std::pair<Element, Symbol>> cells;
    for (std::size_t li = 1; li < lines.size(); ++li) {
      const auto row = detail::trim(lines[li].text);
      if (is_marker(row) && li + 1 == lines.size()) break;
      if (row.empty() || (row.front() != '|' && row.front() != '>'))
        throw ParseError(lines[li].number, "grid rows start with '|' or '>'");
      if ((row.front() == '>') != (y == 0)) throw ParseError(lines[li].number, "'>' must mark exactly the row y = 0");
      for (std::size_t i = 1; i < row.size(); ++i) {
        if (row[i] == '.') continue;
        cells.emplace_back(Element{x0 + static_cast<std::int64_t>(i - 1), y}, parse_symbol(alphabet, row[i], lines[li].number));
      }
      ++y;
    }
    return Window(group, std::move(cells));
  }
  if (kind == "cells") {
    std::vector<std::pair<Element, Symbol>> cells;
    for (std::size_t li = 1; li < lines.size(); ++li) {
      auto t = detail::trim(lines[li].text);
      if (t.substr(0, 5) != "cell ") throw ParseError(lines[li].number, "expected 'cell <element> = <symbol>'");
      t = t.substr(5);
      const auto eq = t.rfind('=');
      if (eq == std::string_view::npos) throw ParseError(lines[li].number, "missing '='");
      const auto sym = detail::trim(t.substr(eq + 1));
      if (sym.size() != 1) throw ParseError(lines[li].number, "expected a single symbol after '='");
      try {
        cells.emplace_back(group.parse_element(t.substr(0, eq)), parse_symbol(alphabet, sym[0], lines[li].number));
      } catch (const ParseError&) {
        throw;
      } catch (const UsageError& e) {
        throw ParseError(lines[li].number, e.what());
      }
    }
    try {
      return Window(group, std::move(cells));
    } catch (const UsageError& e) {
      throw ParseError(lines[0].number, e.what());
    }
  }
  throw ParseError(lines[0].number, "expected 'word', 'grid' or 'cells', got '" + std::string(kind) + "'");
}

std::string format_torus(const TorusConfig& t, const Alphabet& alphabet) {
  std::ostringstream os;
  os << "torus";
  for (auto m : t.moduli) os << " " << m;
  os << "\n";
  const auto width = static_cast<std::size_t>(t.moduli[0]);
  for (std::size_t i = 0; i < t.values.size(); i += width)
    os << alphabet.format(std::span<const Symbol>(t.values).subspan(i, width)) << "\n";
  return os.str();
}

TorusConfig parse_torus(std::string_view text, const Alphabet& alphabet) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "empty torus input");
  const auto head = detail::split_ws(lines[0].text);
  if (head.empty() || head[0] != "torus" || head.size() < 2 || head.size() > 3)
    throw ParseError(lines[0].number, "expected 'torus m1 [m2]'");
  std::vector<std::int64_t> moduli;
  for (std::size_t i = 1; i < head.size(); ++i) {
    moduli.push_back(parse_int_at(head[i], lines[0].number));
    if (moduli.back() < 1) throw ParseError(lines[0].number, "torus moduli must be positive");
  }
  const std::size_t rows = moduli.size() == 2 ? static_cast<std::size_t>(moduli[1]) : 1;
  if (lines.size() != rows + 1) throw ParseError(lines.back().number, "expected " + std::to_string(rows) + " torus rows");
  std::vector<Symbol> values;
  for (std::size_t r = 0; r < rows; ++r) {
    const auto row = detail::trim(lines[r + 1].text);
    if (row.size() != static_cast<std::size_t>(moduli[0]))
      throw ParseError(lines[r + 1].number, "torus row needs " + std::to_string(moduli[0]) + " symbols");
    for (char c : row) values.push_back(parse_symbol(alphabet, c, lines[r + 1].number));
  }
  return make_torus(std::move(moduli), std::move(values));
}

Configuration parse_configuration(std::string_view text, const GroupKind& group, const Alphabet& alphabet) {
  for (const auto& line : content_lines(text)) {
    const auto head = detail::split_ws(line.text);
    if (!head.empty() && head[0] == "torus") return parse_torus(text, alphabet);
    break;
  }
  return parse_window(text, group, alphabet);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace symdyn
