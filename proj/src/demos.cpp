#include "symdyn/demos.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "symdyn/error.hpp"
#include "symdyn/metric.hpp"

namespace symdyn {

void Report::check(std::string key, bool ok, std::string detail) {
  if (!ok) pass = false;
  add(std::move(key), (ok ? "ok" : "FAILED") + (detail.empty() ? std::string() : " (" + detail + ")"));
}

std::string Report::format() const {
  std::ostringstream os;
  os << "name: " << name << "\n";
  for (const auto& [k, v] : fields) os << k << ": " << v << "\n";
  os << "result: " << (pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Report dihedral_distance_check(std::int64_t k_max) {
  const GroupKind g = GroupKind::semidirect_z2z();
  const GeneratingSet s = GeneratingSet::standard(g);
  Report rep{"distance", {}, true};
  rep.add("k_max", std::to_string(k_max));
  for (std::int64_t k = -k_max; k <= k_max; ++k) {
    const std::size_t bfs = distance(Element{0, k}, Element{1, k}, s);
    const auto formula = static_cast<std::size_t>(2 * std::abs(k) + 1);
    rep.check("k=" + std::to_string(k), bfs == formula,
              "bfs=" + std::to_string(bfs) + " formula=" + std::to_string(formula));
  }
  return rep;
}

namespace {

Window constant_window(const GroupKind& g, std::vector<Element> support, Symbol value,
                       const std::vector<Element>& marked = {}, Symbol mark = 0) {
  support = canonical_support(g, std::move(support));
  std::vector<Symbol> values(support.size(), value);
  for (std::size_t i = 0; i < support.size(); ++i)
    if (std::find(marked.begin(), marked.end(), support[i]) != marked.end()) values[i] = mark;
  return Window::from_sorted(g, std::move(support), std::move(values));
}

}  // namespace

Report sft_refutation_demo(int m) {
  if (m < 1) throw UsageError("sft_refutation_demo needs M >= 1");
  const SubgroupEmbedding emb = SubgroupEmbedding::dihedral_pair();
  const GroupKind& gamma = emb.ambient();
  const GeneratingSet s = GeneratingSet::standard(gamma);
  const Alphabet ab("ab");
  const Symbol a = 0, b = 1;
  const ShiftSpec base = full_shift(ab, emb.sub());
  const auto big = static_cast<std::size_t>(3 * m + 2);
  const Element origin = gamma.identity();
  const Element g0{0, 2 * m + 1};
  const Element g1{1, 2 * m + 1};

  Report rep{"ft-non-emb", {}, true};
  rep.add("M", std::to_string(m));
  rep.add("window_radius", std::to_string(big));

  const std::vector<Element> around_origin = disk(origin, big, s);
  const Window delta = constant_window(gamma, around_origin, a, {origin}, b);
  const InducedMembership dm = induced_membership(emb, base, delta);
  rep.check("delta_non_member", !dm.member(),
            dm.fibre ? "fibre " + gamma.format(dm.fibre->first) + " vs " + gamma.format(dm.fibre->second) : "");

  std::vector<Element> chi_support = around_origin;
  for (auto& x : disk(g0, big, s)) chi_support.push_back(std::move(x));
  const Window chi = constant_window(gamma, chi_support, a, {g0, g1}, b);
  rep.check("chi_member", induced_member_window(emb, base, chi), "b at " + gamma.format(g0) + " and " + gamma.format(g1));
  rep.check("all_a_member", induced_member_window(emb, base, constant_window(gamma, around_origin, a)));

  // Patterns of delta on D_M: all-a, or a single b at some y in D_M.
  const std::vector<Element> dm_support = disk(origin, static_cast<std::size_t>(m), s);
  std::size_t covered = 0;
  std::size_t uncovered = 0;
  for (const auto& y : dm_support) {
    const Window p = constant_window(gamma, dm_support, a, {y}, b);
    const Pattern pattern = p.pattern();
    bool found = false;
    for (const auto& g : chi.support())
      if (occurs_at(chi, pattern, g) == Occurrence::present) {
        found = true;
        break;
      }
    (found ? covered : uncovered)++;
  }
  const Window all_a_chi = constant_window(gamma, dm_support, a);
  bool all_a_in_chi = false;
  for (const auto& g : chi.support())
    if (occurs_at(chi, all_a_chi.pattern(), g) == Occurrence::present) {
      all_a_in_chi = true;
      break;
    }
  rep.add("delta_patterns", std::to_string(dm_support.size() + 1));
  rep.add("single_b_patterns_in_chi", std::to_string(covered) + "/" + std::to_string(dm_support.size()));
  rep.check("all_patterns_occur_in_members", uncovered == 0 && all_a_in_chi);
  return rep;
}

bool is_perfect_power(std::size_t n) {
  if (n < 4) return false;
  for (std::size_t base = 2; base * base <= n; ++base) {
    std::size_t v = base * base;
    while (v < n) v *= base;
    if (v == n) return true;
  }
  return false;
}

SubshiftCount finite_group_subshift_count(const GroupKind& group) {
  if (!group.is_finite()) throw UsageError("finite_group_subshift_count needs a finite table group");
  const int order = group.order();
  if (order < 3) throw UsageError("finite_group_subshift_count needs |G| >= 3");
  if (order > 20) throw ResourceError("group order too large for exhaustive enumeration", 20);
  std::vector<Element> all;
  for (int i = 0; i < order; ++i) all.push_back(Element{i});
  all = canonical_support(group, std::move(all));
  std::vector<Pattern> forbidden;
  for (Symbol v : {Symbol{0}, Symbol{1}}) forbidden.push_back(Pattern{all, std::vector<Symbol>(all.size(), v)});
  const ShiftSpec spec = forbidden_shift(Alphabet::binary(), group, std::move(forbidden));
  const std::vector<Window> windows = enumerate_admissible(spec, all);
  SubshiftCount out;
  out.count = windows.size();
  out.expected = (std::size_t{1} << order) - 2;
  out.perfect_power = is_perfect_power(out.count);
  std::set<std::vector<Symbol>> language;
  for (const auto& w : windows) language.emplace(w.values().begin(), w.values().end());
  out.translation_invariant = true;
  for (const auto& w : windows)
    for (const auto& g : all) {
      const Window t = translate(w, g);
      if (!language.count({t.values().begin(), t.values().end()})) out.translation_invariant = false;
    }
  return out;
}

Report finite_group_subshift_report(const std::vector<int>& orders) {
  Report rep{"count", {}, true};
  for (int n : orders) {
    const SubshiftCount c = finite_group_subshift_count(GroupKind::cyclic(n));
    const std::string key = "cyclic(" + std::to_string(n) + ")";
    rep.check(key, c.count == c.expected && !c.perfect_power && c.translation_invariant,
              "count=" + std::to_string(c.count) + " expected=" + std::to_string(c.expected) +
                  " perfect_power=" + (c.perfect_power ? "true" : "false") +
                  " invariant=" + (c.translation_invariant ? "true" : "false"));
  }
  return rep;
}

namespace {

std::string word_of(const Window& w, const Alphabet& alphabet) { return alphabet.format(w.values()); }

}  // namespace

Report induced_property_transfer(const LocalRule& rule, std::size_t radius) {
  const GroupKind z = GroupKind::free_abelian(1);
  const SubgroupEmbedding emb = SubgroupEmbedding::coordinate_axis(1, 2, 0);
  const Alphabet& alphabet = rule.input_alphabet();
  const CellularAutomaton ca1(full_shift(alphabet, z), rule);
  const CellularAutomaton ca2 = induce_ca(ca1, emb);
  Report rep{"transfer", {}, true};

  const SurjectivityVerdict surj = decide_surjective_1d(rule);
  const bool surjective = surj.decision == SurjectivityVerdict::Decision::surjective;
  rep.add("surjective_1d", to_string(surj.decision));
  if (surj.goe) rep.add("goe_1d", word_of(*surj.goe, alphabet));

  std::optional<Window> row_goe;
  for (std::size_t r = 0; r <= radius && !row_goe; ++r) {
    std::vector<Element> row;
    for (auto x = -static_cast<std::int64_t>(r); x <= static_cast<std::int64_t>(r); ++x) row.push_back(Element{x, 0});
    row_goe = find_goe_on_support(ca2, row);
  }
  const auto goe1 = find_goe(ca1, radius);
  rep.add("row_goe_2d", row_goe ? word_of(*row_goe, alphabet) : "absent");
  rep.check("row_goe_matches_1d_search",
            row_goe.has_value() == goe1.has_value() &&
                (!row_goe || word_of(*row_goe, alphabet) == word_of(goe1->pattern, alphabet)));
  rep.check("row_goe_consistent_with_verdict", !(surjective && row_goe.has_value()));

  const InjectivityVerdict inj = decide_injective_1d(rule);
  rep.add("injective_1d", to_string(inj.decision));
  const LocalRule& rule2 = ca2.rule();
  if (inj.tori) {
    const auto& [t1, t2] = *inj.tori;
    const TorusConfig u1 = make_torus({t1.moduli[0], 1}, t1.values);
    const TorusConfig u2 = make_torus({t2.moduli[0], 1}, t2.values);
    rep.add("pair_1d", alphabet.format(t1.values) + " / " + alphabet.format(t2.values));
    rep.check("fibre_constant_pair_2d", !(u1 == u2) && apply_torus(rule2, u1) == apply_torus(rule2, u2));
  } else {
    const auto inverse = inverse_rule_search(rule, radius);
    rep.add("inverse_1d", inverse ? "found" : "not found within radius");
    if (inverse) {
      const LocalRule inverse2 = induce_ca(CellularAutomaton(ca1.support(), *inverse), emb).rule();
      const LocalRule id2 = identity_rule(emb.ambient(), alphabet).minimized();
      rep.check("inverse_2d", compose(rule2, inverse2).minimized() == id2 && compose(inverse2, rule2).minimized() == id2);
    }
  }
  return rep;
}

Report product_ft_demo(int n_max) {
  const GroupKind z = GroupKind::free_abelian(1);
  const SubgroupEmbedding emb = SubgroupEmbedding::left_factor(z, z);
  const GroupKind& gamma = emb.ambient();
  const ShiftSpec base = golden_mean_shift();
  ShiftSpec combined = induce_shift(base, emb);
  const std::vector<Pattern> fs = product_forbidden(emb, base.alphabet);
  combined.forbidden.insert(combined.forbidden.end(), fs.begin(), fs.end());
  validate(combined);
  Report rep{"dp-ft", {}, true};
  rep.add("forbidden", std::to_string(base.forbidden.size()) + " + " + std::to_string(fs.size()));
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Element> support;
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) support.push_back(gamma.pair(Element{h}, Element{k}));
    support = canonical_support(gamma, std::move(support));
    const AdmissibilityChecker checker(combined, support);
    const std::size_t cells = support.size();
    std::size_t agree = 0, members = 0;
    std::vector<Symbol> values(cells);
    for (std::size_t bits = 0; bits < (std::size_t{1} << cells); ++bits) {
      for (std::size_t i = 0; i < cells; ++i) values[i] = static_cast<Symbol>((bits >> (cells - 1 - i)) & 1u);
      const bool sft = checker.admissible(values);
      const bool member = induced_member_window(emb, base, Window::from_sorted(gamma, support, values));
      if (sft == member) ++agree;
      if (member) ++members;
    }
    const std::size_t total = std::size_t{1} << cells;
    rep.check(std::to_string(n) + "x" + std::to_string(n), agree == total,
              "agree=" + std::to_string(agree) + "/" + std::to_string(total) + " members=" + std::to_string(members));
  }
  return rep;
}

namespace {

std::set<std::vector<Symbol>> language_1d(const ShiftSpec& spec, std::size_t length) {
  std::vector<Element> support;
  for (std::size_t i = 0; i < length; ++i) support.push_back(Element{static_cast<std::int64_t>(i)});
  std::set<std::vector<Symbol>> out;
  for_each_admissible(spec, support, [&](std::span<const Symbol> v) {
    out.emplace(v.begin(), v.end());
    return true;
  });
  return out;
}

}  // namespace

Report even_shift_demo(std::size_t max_length, int rows, int cols) {
  const ShiftSpec sofic = even_shift_presentation();
  const ShiftSpec truncated = even_shift_truncated(max_length);
  Report rep{"even-shift", {}, true};
  rep.add("truncation", "even " + std::to_string(max_length));
  bool agree = true;
  std::string counts;
  for (std::size_t n = 1; n <= max_length; ++n) {
    const auto a = language_1d(sofic, n);
    const auto b = language_1d(truncated, n);
    if (a != b) agree = false;
    counts += (n > 1 ? " " : "") + std::to_string(a.size());
  }
  rep.add("counts_1d", counts);
  rep.check("sofic_equals_truncated", agree);

  const SubgroupEmbedding emb = SubgroupEmbedding::coordinate_axis(1, 2, 0);
  const GroupKind& z2 = emb.ambient();
  const ShiftSpec sofic2 = induce_shift(sofic, emb);
  const ShiftSpec truncated2 = induce_shift(even_shift_truncated(static_cast<std::size_t>(cols)), emb);
  std::vector<Element> support;
  for (int x = 0; x < cols; ++x)
    for (int y = 0; y < rows; ++y) support.push_back(z2.vec({x, y}));
  support = canonical_support(z2, std::move(support));
  const auto row_language = language_1d(sofic, static_cast<std::size_t>(cols));
  auto rows_ok = [&](std::span<const Symbol> v) {
    for (int y = 0; y < rows; ++y) {
      std::vector<Symbol> row;
      for (std::size_t i = 0; i < support.size(); ++i)
        if (support[i].code()[1] == y) row.push_back(v[i]);
      if (!row_language.count(row)) return false;
    }
    return true;
  };
  std::size_t expected = 1;
  for (int y = 0; y < rows; ++y) expected *= row_language.size();
  for (const auto* spec : {&sofic2, &truncated2}) {
    std::size_t count = 0;
    bool all_rows = true;
    for_each_admissible(*spec, support, [&](std::span<const Symbol> v) {
      ++count;
      all_rows = all_rows && rows_ok(v);
      return true;
    });
    rep.check(std::string(spec == &sofic2 ? "induced_sofic_" : "induced_truncated_") + std::to_string(rows) + "x" +
                  std::to_string(cols),
              all_rows && count == expected, "windows=" + std::to_string(count) + " expected=" + std::to_string(expected));
  }
  return rep;
}

LocalRule random_rule_1d(std::mt19937_64& rng, std::size_t q, std::size_t width) {
  if (width < 1) throw UsageError("random_rule_1d needs a positive width");
  const GroupKind z = GroupKind::free_abelian(1);
  const auto lo = -static_cast<std::int64_t>(rng() % width);
  std::vector<Element> nb;
  for (std::size_t i = 0; i < width; ++i) nb.push_back(Element{lo + static_cast<std::int64_t>(i)});
  std::size_t entries = 1;
  for (std::size_t i = 0; i < width; ++i) entries *= q;
  std::vector<Symbol> table(entries);
  for (auto& t : table) t = static_cast<Symbol>(rng() % q);
  const std::string names = "012";
  return LocalRule(z, Alphabet(names.substr(0, q)), std::move(nb), std::move(table));
}

Report moore_myhill_check(std::size_t rules, std::uint64_t seed, std::size_t radius, std::vector<CoherenceRow>* rows) {
  std::mt19937_64 rng(seed);
  Report rep{"moore-myhill", {}, true};
  rep.add("rules", std::to_string(rules));
  rep.add("seed", std::to_string(seed));
  rep.add("radius", std::to_string(radius));
  std::size_t both = 0, neither = 0, mismatched = 0, exact_conflicts = 0;
  for (std::size_t i = 0; i < rules; ++i) {
    const std::size_t q = 2 + rng() % 2;
    const std::size_t width = 1 + rng() % 3;
    LocalRule rule = random_rule_1d(rng, q, width);
    const CellularAutomaton ca(full_shift(rule.input_alphabet(), rule.group()), rule);
    CoherenceRow row{rule, find_goe(ca, radius).has_value(), preinjectivity_witness(ca, radius).has_value(),
                     decide_surjective_1d(rule, 0).decision == SurjectivityVerdict::Decision::surjective};
    if (row.goe && row.witness) ++both;
    else if (!row.goe && !row.witness) ++neither;
    else ++mismatched;
    if ((row.goe || row.witness) && row.surjective) ++exact_conflicts;
    if (rows) rows->push_back(std::move(row));
  }
  rep.add("goe_and_witness", std::to_string(both));
  rep.add("neither", std::to_string(neither));
  rep.check("agreement", mismatched == 0, std::to_string(mismatched) + " mismatched");
  rep.check("consistent_with_exact_decision", exact_conflicts == 0);
  return rep;
}

}  // namespace symdyn
