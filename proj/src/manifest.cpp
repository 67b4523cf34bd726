#include "symdyn/manifest.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "symdyn/automaton.hpp"
#include "symdyn/error.hpp"
#include "symdyn/text_io.hpp"
#include "text_util.hpp"

namespace symdyn {

ShiftSpec Manifest::support() const { return shift ? *shift : full_shift(alphabet, group); }

bool operator==(const Manifest& a, const Manifest& b) {
  return a.version == b.version && a.alphabet == b.alphabet && a.group == b.group && a.shift == b.shift &&
         a.rule == b.rule && a.embedding == b.embedding;
}

namespace {

struct Token {
  enum class Kind { text, open, close, semi } kind;
  std::string_view text;
  std::size_t line;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos <= src.size()) {
    const auto end = src.find('\n', pos);
    const std::string_view raw = src.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++line;
    const auto t = detail::trim(raw);
    if (!t.empty() && t.front() != '#') {
      std::size_t start = 0;
      auto flush = [&](std::size_t i) {
        const auto chunk = detail::trim(t.substr(start, i - start));
        if (!chunk.empty()) out.push_back({Token::Kind::text, chunk, line});
      };
      for (std::size_t i = 0; i < t.size(); ++i) {
        const char c = t[i];
        if (c != '{' && c != '}' && c != ';') continue;
        flush(i);
        out.push_back({c == '{' ? Token::Kind::open : c == '}' ? Token::Kind::close : Token::Kind::semi, t.substr(i, 1), line});
        start = i + 1;
      }
      flush(t.size());
    }
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

template <class F>
auto at_line(std::size_t line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const UsageError& e) {
    throw ParseError(line, e.what());
  }
}

std::pair<std::string_view, std::string_view> key_value(const Token& t) {
  const auto eq = t.text.find('=');
  if (eq == std::string_view::npos) return {t.text, {}};
  return {detail::trim(t.text.substr(0, eq)), detail::trim(t.text.substr(eq + 1))};
}

Alphabet parse_alphabet(std::string_view value) {
  std::string symbols;
  for (char c : value)
    if (!std::isspace(static_cast<unsigned char>(c))) symbols.push_back(c);
  return Alphabet(symbols);
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)), last_line_(std::count(src.begin(), src.end(), '\n') + 1) {}

  Manifest manifest() {
    Manifest m;
    bool version = false, alphabet = false, group = false;
    std::optional<std::pair<std::string_view, std::size_t>> embedding;
    while (!done()) {
      const Token t = next();
      if (t.kind == Token::Kind::semi) continue;
      if (t.kind != Token::Kind::text) throw ParseError(t.line, "unexpected '" + std::string(t.text) + "'");
      if (t.text == "shift" || t.text == "rule") {
        if (!alphabet || !group) throw ParseError(t.line, "'alphabet' and 'group' must come before '" + std::string(t.text) + "'");
        expect_open(t);
        if (t.text == "shift") {
          if (m.shift) throw ParseError(t.line, "duplicate shift section");
          m.shift = shift_body(m.alphabet, m.group, t.line);
        } else {
          if (m.rule) throw ParseError(t.line, "duplicate rule section");
          m.rule = rule_body(m.alphabet, m.alphabet, m.group, t.line);
        }
        continue;
      }
      const auto [key, value] = key_value(t);
      if (value.empty()) throw ParseError(t.line, "expected 'key = value', got '" + std::string(t.text) + "'");
      if (key == "version") {
        auto v = detail::parse_int(value);
        if (!v || *v != 1) throw ParseError(t.line, "unsupported manifest version '" + std::string(value) + "'");
        version = true;
      } else if (key == "alphabet") {
        m.alphabet = at_line(t.line, [&] { return parse_alphabet(value); });
        alphabet = true;
      } else if (key == "group") {
        m.group = at_line(t.line, [&] { return GroupKind::parse(value); });
        group = true;
      } else if (key == "embedding") {
        embedding = std::make_pair(value, t.line);
      } else {
        throw ParseError(t.line, "unknown key '" + std::string(key) + "'");
      }
    }
    if (!version) throw ParseError(1, "missing 'version = 1'");
    if (!alphabet) throw ParseError(last_line_, "missing 'alphabet'");
    if (!group) throw ParseError(last_line_, "missing 'group'");
    if (embedding)
      m.embedding = at_line(embedding->second, [&] { return SubgroupEmbedding::parse(embedding->first, m.group); });
    return m;
  }

 private:
  bool done() const { return pos_ >= tokens_.size(); }
  const Token& next() {
    if (done()) throw ParseError(last_line_, "unexpected end of input");
    return tokens_[pos_++];
  }
  void expect_open(const Token& after) {
    if (done() || tokens_[pos_].kind != Token::Kind::open)
      throw ParseError(after.line, "expected '{' after '" + std::string(after.text) + "'");
    ++pos_;
  }

  Pattern pattern_body(const Alphabet& alphabet, const GroupKind& group, std::size_t open_line) {
    std::vector<std::pair<Element, Symbol>> cells;
    std::size_t line = open_line;
    while (true) {
      const Token t = next();
      line = t.line;
      if (t.kind == Token::Kind::close) break;
      if (t.kind == Token::Kind::semi) continue;
      if (t.kind != Token::Kind::text || t.text.substr(0, 3) != "at ")
        throw ParseError(t.line, "expected 'at <element>=<symbol>'");
      const auto body = t.text.substr(3);
      const auto eq = body.rfind('=');
      if (eq == std::string_view::npos) throw ParseError(t.line, "missing '=' in pattern cell");
      const auto sym = detail::trim(body.substr(eq + 1));
      if (sym.size() != 1) throw ParseError(t.line, "expected one symbol after '='");
      at_line(t.line, [&] {
        cells.emplace_back(group.parse_element(body.substr(0, eq)), alphabet.parse(sym[0]));
        return 0;
      });
    }
    return at_line(line, [&] { return make_pattern(group, std::move(cells)); });
  }

  ShiftSpec shift_body(const Alphabet& alphabet, const GroupKind& group, std::size_t open_line) {
    std::vector<Pattern> forbidden;
    std::optional<Truncation> truncation;
    std::shared_ptr<const Presentation> presentation;
    std::size_t line = open_line;
    while (true) {
      const Token t = next();
      line = t.line;
      if (t.kind == Token::Kind::close) break;
      if (t.kind == Token::Kind::semi) continue;
      if (t.kind != Token::Kind::text) throw ParseError(t.line, "unexpected '" + std::string(t.text) + "' in shift");
      if (t.text == "pattern") {
        expect_open(t);
        forbidden.push_back(pattern_body(alphabet, group, t.line));
        continue;
      }
      if (t.text == "presentation") {
        if (presentation) throw ParseError(t.line, "duplicate presentation");
        expect_open(t);
        ShiftSpec s = presentation_body(alphabet, group, t.line);
        presentation = s.presentation;
        continue;
      }
      const auto [key, value] = key_value(t);
      if (key == "family" || key == "truncation") {
        const auto parts = detail::split_ws(value);
        if (parts.size() != 2) throw ParseError(t.line, "expected '" + std::string(key) + " = <family> <bound>'");
        const auto bound = detail::parse_int(parts[1]);
        if (!bound || *bound < 0) throw ParseError(t.line, "bad truncation bound '" + std::string(parts[1]) + "'");
        if (truncation) throw ParseError(t.line, "duplicate truncation");
        truncation = Truncation{std::string(parts[0]), static_cast<std::size_t>(*bound)};
        if (key == "family") {
          if (parts[0] != "even") throw ParseError(t.line, "unknown family '" + std::string(parts[0]) + "'");
          if (!(group == GroupKind::free_abelian(1)) || !(alphabet == Alphabet::binary()))
            throw ParseError(t.line, "the even family needs alphabet 01 over free_abelian(1)");
          const ShiftSpec even = even_shift_truncated(truncation->bound);
          forbidden.insert(forbidden.end(), even.forbidden.begin(), even.forbidden.end());
        }
        continue;
      }
      throw ParseError(t.line, "unexpected '" + std::string(t.text) + "' in shift");
    }
    if (presentation) {
      if (!forbidden.empty() || truncation) throw ParseError(line, "a presentation excludes patterns and truncations");
      ShiftSpec s = full_shift(alphabet, group);
      s.presentation = presentation;
      return s;
    }
    ShiftSpec s = at_line(line, [&] { return forbidden_shift(alphabet, group, std::move(forbidden)); });
    s.truncation = truncation;
    return s;
  }

  ShiftSpec presentation_body(const Alphabet& outer, const GroupKind& group, std::size_t open_line) {
    std::optional<Alphabet> inner;
    std::optional<ShiftSpec> pre;
    std::optional<LocalRule> rule;
    std::size_t line = open_line;
    while (true) {
      const Token t = next();
      line = t.line;
      if (t.kind == Token::Kind::close) break;
      if (t.kind == Token::Kind::semi) continue;
      if (t.kind != Token::Kind::text) throw ParseError(t.line, "unexpected '" + std::string(t.text) + "' in presentation");
      if (t.text == "shift" || t.text == "rule") {
        if (!inner) throw ParseError(t.line, "the presentation alphabet must come first");
        expect_open(t);
        if (t.text == "shift") pre = shift_body(*inner, group, t.line);
        else rule = rule_body(*inner, outer, group, t.line);
        continue;
      }
      const auto [key, value] = key_value(t);
      if (key != "alphabet" || value.empty()) throw ParseError(t.line, "expected 'alphabet = ...' in presentation");
      inner = at_line(t.line, [&] { return parse_alphabet(value); });
    }
    if (!inner || !rule) throw ParseError(line, "a presentation needs an alphabet and a rule");
    if (!pre) pre = full_shift(*inner, group);
    return at_line(line, [&] { return sofic_shift(std::move(*pre), std::move(*rule)); });
  }

  LocalRule rule_body(const Alphabet& in, const Alphabet& out, const GroupKind& group, std::size_t open_line) {
    std::optional<std::vector<Element>> nbhd;
    std::optional<LocalRule> builtin_rule;
    std::vector<std::pair<std::string_view, std::size_t>> entries;
    std::size_t line = open_line;
    while (true) {
      const Token t = next();
      line = t.line;
      if (t.kind == Token::Kind::close) break;
      if (t.kind == Token::Kind::semi) continue;
      if (t.kind != Token::Kind::text) throw ParseError(t.line, "unexpected '" + std::string(t.text) + "' in rule");
      const auto [key, value] = key_value(t);
      if (key == "nbhd" && t.text.find("->") == std::string_view::npos) {
        if (nbhd) throw ParseError(t.line, "duplicate nbhd");
        nbhd = at_line(t.line, [&] {
          std::vector<Element> nb;
          for (auto part : detail::split_top_level(value, ',')) nb.push_back(group.parse_element(part));
          return nb;
        });
        continue;
      }
      if (key == "builtin" && t.text.find("->") == std::string_view::npos) {
        builtin_rule = at_line(t.line, [&] { return builtin(value).rule(); });
        if (!(builtin_rule->group() == group) || !(builtin_rule->input_alphabet() == in) ||
            !(builtin_rule->output_alphabet() == out))
          throw ParseError(t.line, "built-in rule '" + std::string(value) + "' does not fit this alphabet and group");
        continue;
      }
      std::string_view body = t.text;
      if (body.substr(0, 4) == "map ") body = body.substr(4);
      else if (body == "map") continue;
      for (auto e : detail::split_ws(body)) entries.emplace_back(e, t.line);
    }
    if (builtin_rule) {
      if (nbhd || !entries.empty()) throw ParseError(line, "'builtin' excludes nbhd and map");
      return *builtin_rule;
    }
    if (!nbhd) throw ParseError(line, "rule needs 'nbhd = ...'");
    const std::size_t k = nbhd->size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (total > kDefaultTableCap / in.size()) throw ParseError(line, "rule table too large");
      total *= in.size();
    }
    std::vector<int> table(total, -1);
    for (const auto& [entry, eline] : entries) {
      const auto arrow = entry.find("->");
      if (arrow == std::string_view::npos) throw ParseError(eline, "expected 'key->symbol', got '" + std::string(entry) + "'");
      const auto lhs = entry.substr(0, arrow);
      const auto rhs = entry.substr(arrow + 2);
      if (lhs.size() != k) throw ParseError(eline, "key '" + std::string(lhs) + "' needs " + std::to_string(k) + " symbols");
      if (rhs.size() != 1) throw ParseError(eline, "expected one output symbol in '" + std::string(entry) + "'");
      std::size_t key = 0;
      for (char c : lhs) {
        auto s = in.find(c);
        if (!s) throw ParseError(eline, std::string("symbol '") + c + "' is not in alphabet {" + in.symbols() + "}");
        key = key * in.size() + *s;
      }
      auto o = out.find(rhs[0]);
      if (!o) throw ParseError(eline, std::string("symbol '") + rhs[0] + "' is not in alphabet {" + out.symbols() + "}");
      if (table[key] >= 0) throw ParseError(eline, "duplicate entry for '" + std::string(lhs) + "'");
      table[key] = *o;
    }
    std::vector<Symbol> entries_out(total);
    for (std::size_t key = 0; key < total; ++key) {
      if (table[key] < 0) {
        std::string missing(k, ' ');
        std::size_t rest = key;
        for (std::size_t i = k; i-- > 0;) {
          missing[i] = in.name(static_cast<Symbol>(rest % in.size()));
          rest /= in.size();
        }
        throw ParseError(line, "rule map is missing the entry for '" + missing + "'");
      }
      entries_out[key] = static_cast<Symbol>(table[key]);
    }
    return at_line(line, [&] { return LocalRule(group, in, out, std::move(*nbhd), std::move(entries_out)); });
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t last_line_;
};

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent), ' '); }

void emit_shift(std::ostringstream& os, const ShiftSpec& s, int indent) {
  os << pad(indent) << "shift {\n";
  if (s.presentation) {
    const Presentation& p = *s.presentation;
    os << pad(indent + 2) << "presentation {\n";
    os << pad(indent + 4) << "alphabet = " << p.pre_spec.alphabet.symbols() << "\n";
    if (!p.pre_spec.forbidden.empty() || p.pre_spec.truncation || p.pre_spec.presentation)
      emit_shift(os, p.pre_spec, indent + 4);
    os << format_rule_section(p.rule, indent + 4);
    os << pad(indent + 2) << "}\n";
  } else {
    const bool family = s.truncation && s.truncation->family == "even" && s.group == GroupKind::free_abelian(1) &&
                        s.alphabet == Alphabet::binary() &&
                        s.forbidden == even_shift_truncated(s.truncation->bound).forbidden;
    if (family) {
      os << pad(indent + 2) << "family = even " << s.truncation->bound << "\n";
    } else {
      for (const auto& p : s.forbidden) {
        os << pad(indent + 2) << "pattern {";
        for (std::size_t i = 0; i < p.size(); ++i)
          os << (i ? "; " : " ") << "at " << s.group.format(p.support[i]) << "=" << s.alphabet.name(p.values[i]);
        os << " }\n";
      }
      if (s.truncation) os << pad(indent + 2) << "truncation = " << s.truncation->family << " " << s.truncation->bound << "\n";
    }
  }
  os << pad(indent) << "}\n";
}

}  // namespace

std::string format_rule_section(const LocalRule& rule, int indent) {
  std::ostringstream os;
  os << pad(indent) << "rule {\n" << pad(indent + 2) << "nbhd = ";
  const auto nb = rule.neighbourhood();
  for (std::size_t i = 0; i < nb.size(); ++i) os << (i ? "," : "") << rule.group().format(nb[i]);
  os << "\n";
  const auto table = rule.table();
  for (std::size_t key = 0; key < table.size(); ++key) {
    if (key % 8 == 0) os << (key ? "\n" : "") << pad(indent + 2) << (key ? "   " : "map");
    os << " " << rule.input_alphabet().format(rule.decode(key)) << "->" << rule.output_alphabet().name(table[key]);
  }
  os << "\n" << pad(indent) << "}\n";
  return os.str();
}

Manifest parse_manifest(std::string_view text) { return Parser(text).manifest(); }

std::string format_manifest(const Manifest& m) {
  std::ostringstream os;
  os << "version = " << m.version << "\n";
  os << "alphabet = " << m.alphabet.symbols() << "\n";
  os << "group = " << m.group.describe() << "\n";
  if (m.shift) emit_shift(os, *m.shift, 0);
  if (m.rule) os << format_rule_section(*m.rule);
  if (m.embedding) os << "embedding = " << m.embedding->describe() << "\n";
  return os.str();
}

Manifest load_manifest(const std::string& path) { return parse_manifest(read_file(path)); }

}  // namespace symdyn
