#include "symdyn/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>

#include "symdyn/automaton.hpp"
#include "symdyn/decide.hpp"
#include "symdyn/demos.hpp"
#include "symdyn/error.hpp"
#include "symdyn/induction.hpp"
#include "symdyn/manifest.hpp"
#include "symdyn/metric.hpp"
#include "symdyn/text_io.hpp"
#include "text_util.hpp"

namespace symdyn::cli {

namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::size_t cap = kDefaultEnumerationCap;
  std::uint64_t seed = 1;
};

// A rule argument is a built-in name or a manifest path with a rule section.
CellularAutomaton load_automaton(const std::string& arg) {
  if (is_builtin_name(arg)) return builtin(arg);
  const Manifest m = load_manifest(arg);
  if (!m.rule) throw UsageError("manifest '" + arg + "' has no rule section");
  return CellularAutomaton(m.support(), *m.rule, std::filesystem::path(arg).stem().string());
}

std::vector<Element> parse_cells(const GroupKind& group, const std::string& text) {
  std::vector<Element> out;
  for (auto part : detail::split_top_level(text, ';')) out.push_back(group.parse_element(part));
  return out;
}

std::string format_violation(const ShiftSpec& spec, const Violation& v) {
  return "pattern " + std::to_string(v.pattern_index) + " at " +
         (v.placement.code().empty() && spec.group.tag() != GroupKind::Tag::Free ? std::string("-")
                                                                                  : spec.group.format(v.placement));
}

void note_truncation(const ShiftSpec& spec, std::ostream& out) {
  if (spec.truncation) out << "truncation: " << spec.truncation->family << " " << spec.truncation->bound << "\n";
}

int cmd_step(Context& ctx, const std::string& manifest_path, const std::string& input_path, int steps) {
  const Manifest m = load_manifest(manifest_path);
  if (!m.rule) throw UsageError("step needs a manifest with a rule section");
  if (steps < 0) throw UsageError("--steps must be non-negative");
  const CellularAutomaton ca(m.support(), *m.rule);
  if (m.shift && !m.shift->is_sofic()) {
    const ClosureVerdict v = closure_check(ca, 2, ctx.cap);
    if (v.violated) {
      ctx.err << "closure violated: the rule maps an admissible window to\n"
              << format_window(v.witness->output, m.alphabet) << format_violation(*m.shift, v.witness->violation)
              << "\n";
      return kFalse;
    }
  }
  const Configuration input = parse_configuration(read_file(input_path), m.group, m.alphabet);
  if (const auto* t = std::get_if<TorusConfig>(&input)) {
    TorusConfig cur = *t;
    for (int i = 0; i < steps; ++i) cur = apply_torus(ca.rule(), cur);
    ctx.out << format_torus(cur, m.alphabet);
    return kOk;
  }
  Window cur = std::get<Window>(input);
  for (int i = 0; i < steps; ++i) {
    cur = apply_window(ca.rule(), cur);
    if (cur.empty() && i + 1 < steps) {
      ctx.err << "window became empty after step " << (i + 1) << " of " << steps << "\n";
      return kFalse;
    }
  }
  ctx.out << format_window(cur, m.alphabet);
  return kOk;
}

int cmd_member(Context& ctx, const std::string& manifest_path, const std::string& input_path) {
  const Manifest m = load_manifest(manifest_path);
  const ShiftSpec base = m.support();
  const GroupKind& window_group = m.embedding ? m.embedding->ambient() : m.group;
  const Window w = parse_window(read_file(input_path), window_group, m.alphabet);
  if (base.is_sofic() && !m.embedding) {
    bool found = false;
    std::vector<Element> support(w.support().begin(), w.support().end());
    for_each_admissible(
        base, support,
        [&](std::span<const Symbol> v) {
          found = std::equal(v.begin(), v.end(), w.values().begin(), w.values().end());
          return !found;
        },
        ctx.cap);
    ctx.out << "member: " << (found ? "true" : "false") << "\n";
    return found ? kOk : kFalse;
  }
  if (!m.embedding) {
    note_truncation(base, ctx.out);
    const auto v = first_violation(w, base);
    ctx.out << "member: " << (v ? "false" : "true") << "\n";
    if (v) ctx.out << "violation: " << format_violation(base, *v) << "\n";
    return v ? kFalse : kOk;
  }
  const SubgroupEmbedding& emb = *m.embedding;
  note_truncation(base, ctx.out);
  bool ok = true;
  if (!base.is_sofic()) {
    const ShiftSpec induced = induce_shift(base, emb);
    const auto v = first_violation(w, induced);
    ctx.out << "induced_admissible: " << (v ? "false" : "true") << "\n";
    if (v) ctx.out << "violation: " << format_violation(induced, *v) << "\n";
    ok = ok && !v;
  }
  const InducedMembership im = induced_membership(emb, base, w, ctx.cap);
  ctx.out << "iota_member: " << (im.member() ? "true" : "false") << "\n";
  if (im.fibre)
    ctx.out << "fibre_conflict: " << emb.ambient().format(im.fibre->first) << " vs "
            << emb.ambient().format(im.fibre->second) << "\n";
  if (im.slice) {
    ctx.out << "slice_violation: coset " << emb.ambient().format(im.slice->coset);
    if (im.slice->violation) ctx.out << ", " << format_violation(base, *im.slice->violation);
    ctx.out << "\n";
  }
  ok = ok && im.member();
  ctx.out << "member: " << (ok ? "true" : "false") << "\n";
  return ok ? kOk : kFalse;
}

int cmd_enumerate(Context& ctx, const std::string& manifest_path, std::optional<std::size_t> radius,
                  const std::string& cells, bool count_only) {
  const Manifest m = load_manifest(manifest_path);
  const ShiftSpec spec = m.support();
  std::vector<Element> support;
  if (!cells.empty()) support = parse_cells(m.group, cells);
  else support = disk(m.group.identity(), radius.value_or(1), GeneratingSet::standard(m.group));
  const std::vector<Window> windows = enumerate_admissible(spec, support, ctx.cap);
  note_truncation(spec, ctx.out);
  ctx.out << "support:";
  if (!windows.empty())
    for (const auto& x : windows.front().support()) ctx.out << " " << m.group.format(x);
  else
    for (const auto& x : canonical_support(m.group, support)) ctx.out << " " << m.group.format(x);
  ctx.out << "\ncount: " << windows.size() << "\n";
  if (!count_only)
    for (const auto& w : windows) ctx.out << m.alphabet.format(w.values()) << "\n";
  return kOk;
}

int cmd_induce(Context& ctx, const std::string& in, const std::string& embedding, const std::string& out_path) {
  const Manifest m = load_manifest(in);
  const SubgroupEmbedding emb = embedding.empty()
                                    ? (m.embedding ? *m.embedding : throw UsageError("induce needs --embedding"))
                                    : SubgroupEmbedding::parse(embedding, m.group);
  Manifest result;
  result.alphabet = m.alphabet;
  result.group = emb.ambient();
  if (m.shift) result.shift = induce_shift(*m.shift, emb);
  if (m.rule) result.rule = induce_ca(CellularAutomaton(m.support(), *m.rule), emb).rule();
  const std::string text = format_manifest(result);
  if (out_path.empty()) {
    ctx.out << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw UsageError("cannot write '" + out_path + "'");
    f << text;
    ctx.out << "wrote " << out_path << "\n";
  }
  return kOk;
}

int cmd_iota(Context& ctx, const std::string& manifest_path, const std::string& embedding,
             const std::string& window_path, const std::string& cosets, const std::string& cells) {
  const Manifest m = load_manifest(manifest_path);
  const SubgroupEmbedding emb = embedding.empty()
                                    ? (m.embedding ? *m.embedding : throw UsageError("iota needs --embedding"))
                                    : SubgroupEmbedding::parse(embedding, m.group);
  const Window w = parse_window(read_file(window_path), m.group, m.alphabet);
  if (!cells.empty()) {
    const IotaImage img = iota(emb, w, parse_cells(emb.ambient(), cells));
    ctx.out << format_window(img.window, m.alphabet);
    if (img.partial()) {
      ctx.out << "# omitted:";
      for (const auto& x : img.omitted) ctx.out << " " << emb.ambient().format(x);
      ctx.out << "\n";
    }
    return kOk;
  }
  const std::vector<Element> js =
      cosets.empty() ? transversal_slice(emb, 1, GeneratingSet::standard(emb.ambient())) : parse_cells(emb.ambient(), cosets);
  ctx.out << format_window(iota_on_cosets(emb, w, js), m.alphabet);
  return kOk;
}

int cmd_decide(Context& ctx, const std::string& property, const std::string& rule_arg) {
  const CellularAutomaton ca = load_automaton(rule_arg);
  const Alphabet& a = ca.alphabet();
  if (!ca.support().forbidden.empty() || ca.support().is_sofic())
    throw UsageError("exact decisions cover the full shift only; use 'goe' for bounded searches");
  ctx.out << "rule: " << ca.name() << "\n";
  if (property == "surjective") {
    const SurjectivityVerdict v = decide_surjective_1d(ca.rule(), 8, kDefaultTableCap);
    ctx.out << "decision: " << to_string(v.decision) << "\n";
    if (v.goe) ctx.out << "goe: " << a.format(v.goe->values()) << "\n";
    for (const auto& row : v.balance)
      ctx.out << "balance " << row.length << ": min=" << row.min_preimages << " max=" << row.max_preimages << "\n";
    return v.decision == SurjectivityVerdict::Decision::surjective ? kOk : kFalse;
  }
  if (property == "injective") {
    const InjectivityVerdict v = decide_injective_1d(ca.rule());
    ctx.out << "decision: " << to_string(v.decision) << "\n";
    if (v.tori) ctx.out << "certificate:\n" << format_torus(v.tori->first, a) << format_torus(v.tori->second, a);
    return v.decision == InjectivityVerdict::Decision::injective ? kOk : kFalse;
  }
  throw UsageError("decide takes 'surjective' or 'injective', not '" + property + "'");
}

int cmd_goe(Context& ctx, const std::string& rule_arg, std::size_t radius) {
  const CellularAutomaton ca = load_automaton(rule_arg);
  const auto g = find_goe(ca, radius, ctx.cap);
  note_truncation(ca.support(), ctx.out);
  if (!g) {
    ctx.out << "goe: absent up to radius " << radius << "\n";
    return kFalse;
  }
  ctx.out << "goe: found at radius " << g->radius << "\n" << format_window(g->pattern, ca.alphabet());
  return kOk;
}

int cmd_predecessors(Context& ctx, const std::string& rule_arg, const std::string& word) {
  const CellularAutomaton ca = load_automaton(rule_arg);
  const std::vector<Symbol> w = ca.alphabet().parse_word(word);
  ctx.out << "word: " << word << "\npredecessors: " << count_predecessors(ca.rule(), w) << "\n";
  return kOk;
}

int cmd_inverse(Context& ctx, const std::string& rule_arg, std::size_t max_radius) {
  const CellularAutomaton ca = load_automaton(rule_arg);
  const auto inv = inverse_rule_search(ca.rule(), max_radius);
  if (!inv) {
    ctx.out << "inverse: absent up to radius " << max_radius << "\n";
    return kFalse;
  }
  ctx.out << "inverse: found\n" << format_rule_section(*inv);
  return kOk;
}

int cmd_closure(Context& ctx, const std::string& rule_arg, std::size_t radius) {
  const CellularAutomaton ca = load_automaton(rule_arg);
  const ClosureVerdict v = closure_check(ca, radius, ctx.cap);
  note_truncation(ca.support(), ctx.out);
  if (!v.violated) {
    ctx.out << "closure: consistent up to radius " << v.radius << "\n";
    return kOk;
  }
  ctx.out << "closure: violated at radius " << v.radius << "\ninput:\n"
          << format_window(v.witness->input, ca.alphabet()) << "output:\n"
          << format_window(v.witness->output, ca.alphabet())
          << "violation: " << format_violation(ca.support(), v.witness->violation) << "\n";
  return kFalse;
}

int print_report(Context& ctx, const Report& r) {
  ctx.out << r.format();
  return r.pass ? kOk : kFalse;
}

std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> out;
  for (auto part : detail::split_top_level(text, ',')) {
    auto v = detail::parse_int(part);
    if (!v) throw UsageError("bad group order '" + std::string(part) + "'");
    out.push_back(static_cast<int>(*v));
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic dynamics on finitely generated groups", "symdyn"};
  app.require_subcommand(1);
  Context ctx{out, err};
  app.add_option("--cap", ctx.cap, "Search cap for enumerations")->capture_default_str();
  app.add_option("--seed", ctx.seed, "Seed for randomized commands")->capture_default_str();
  app.fallthrough();

  std::string manifest, input, rule = "rule90", embedding, out_path, window, cosets, cells, word, property;
  int steps = 1;
  std::size_t radius = 3;
  std::optional<std::size_t> enum_radius;
  bool count_only = false;

  auto* step = app.add_subcommand("step", "Apply the rule n times to a window or torus");
  step->add_option("--manifest", manifest)->required();
  step->add_option("--input", input)->required();
  step->add_option("--steps,-n", steps)->capture_default_str();

  auto* member = app.add_subcommand("member", "Check a window against the manifest's shift");
  member->add_option("--manifest", manifest)->required();
  member->add_option("--input", input)->required();

  auto* enumerate = app.add_subcommand("enumerate", "List the admissible windows on a support");
  enumerate->add_option("--manifest", manifest)->required();
  enumerate->add_option("--radius", enum_radius, "Disk radius around the identity (default 1)");
  enumerate->add_option("--cells", cells, "Explicit support, ';'-separated element literals");
  enumerate->add_flag("--count-only", count_only);

  auto* induce = app.add_subcommand("induce", "Induce the manifest's shift and rule onto a supergroup");
  induce->add_option("--in", manifest)->required();
  induce->add_option("--embedding", embedding);
  induce->add_option("--out", out_path);

  auto* iota_cmd = app.add_subcommand("iota", "Embed a window into the supergroup, constant on coset fibres");
  iota_cmd->add_option("--manifest", manifest)->required();
  iota_cmd->add_option("--embedding", embedding);
  iota_cmd->add_option("--window", window)->required();
  iota_cmd->add_option("--cosets", cosets, "Transversal elements, ';'-separated");
  iota_cmd->add_option("--cells", cells, "Requested ambient cells, ';'-separated");

  auto* decide = app.add_subcommand("decide", "Decide surjectivity or injectivity of a rule over Z");
  decide->add_option("property", property)->required();
  decide->add_option("--rule", rule)->required();

  auto* goe = app.add_subcommand("goe", "Search for a Garden-of-Eden pattern");
  goe->add_option("--rule", rule)->required();
  goe->add_option("--radius", radius)->capture_default_str();

  auto* preds = app.add_subcommand("predecessors", "Count the preimages of a word");
  preds->add_option("--rule", rule)->required();
  preds->add_option("--word", word)->required();

  auto* inverse = app.add_subcommand("inverse", "Search for an inverse rule over Z");
  inverse->add_option("--rule", rule)->required();
  inverse->add_option("--max-radius", radius)->capture_default_str();

  auto* closure = app.add_subcommand("closure", "Bounded check that the rule preserves its shift");
  closure->add_option("--rule", rule)->required();
  closure->add_option("--radius", radius)->capture_default_str();

  auto* demo = app.add_subcommand("demo", "Run a demonstrator");
  demo->require_subcommand(1);
  int m_param = 1;
  std::int64_t kmax = 8;
  int n_max = 4;
  std::string orders = "3,4,5";
  std::size_t length = 12, rules = 200;
  auto* d_ft = demo->add_subcommand("ft-non-emb", "Finite type is not preserved by iota_J");
  d_ft->add_option("--M", m_param)->capture_default_str();
  auto* d_dist = demo->add_subcommand("distance", "Word-length law in the semidirect group");
  d_dist->add_option("--kmax", kmax)->capture_default_str();
  auto* d_dp = demo->add_subcommand("dp-ft", "Finite type is preserved inside direct products");
  d_dp->add_option("--n", n_max)->capture_default_str();
  auto* d_tr = demo->add_subcommand("transfer", "Property transfer to the induced automaton on Z^2");
  d_tr->add_option("--rule", rule)->capture_default_str();
  d_tr->add_option("--radius", radius)->capture_default_str();
  auto* d_count = demo->add_subcommand("count", "Non-constant binary subshift on finite groups");
  d_count->add_option("--orders", orders)->capture_default_str();
  auto* d_even = demo->add_subcommand("even-shift", "Even shift: sofic image against truncated family");
  d_even->add_option("--length", length)->capture_default_str();
  auto* d_mm = demo->add_subcommand("moore-myhill", "GoE against preinjectivity witnesses on random rules");
  d_mm->add_option("--rules", rules)->capture_default_str();
  d_mm->add_option("--radius", radius)->capture_default_str();

  std::vector<const char*> argv{"symdyn"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*step) return cmd_step(ctx, manifest, input, steps);
    if (*member) return cmd_member(ctx, manifest, input);
    if (*enumerate) return cmd_enumerate(ctx, manifest, enum_radius, cells, count_only);
    if (*induce) return cmd_induce(ctx, manifest, embedding, out_path);
    if (*iota_cmd) return cmd_iota(ctx, manifest, embedding, window, cosets, cells);
    if (*decide) return cmd_decide(ctx, property, rule);
    if (*goe) return cmd_goe(ctx, rule, radius);
    if (*preds) return cmd_predecessors(ctx, rule, word);
    if (*inverse) return cmd_inverse(ctx, rule, radius);
    if (*closure) return cmd_closure(ctx, rule, radius);
    if (*d_ft) return print_report(ctx, sft_refutation_demo(m_param));
    if (*d_dist) return print_report(ctx, dihedral_distance_check(kmax));
    if (*d_dp) return print_report(ctx, product_ft_demo(n_max));
    if (*d_tr) return print_report(ctx, induced_property_transfer(load_automaton(rule).rule(), radius));
    if (*d_count) return print_report(ctx, finite_group_subshift_report(parse_orders(orders)));
    if (*d_even) return print_report(ctx, even_shift_demo(length));
    if (*d_mm) return print_report(ctx, moore_myhill_check(rules, ctx.seed, radius));
  } catch (const ResourceError& e) {
    err << "resource: " << e.what() << "\n";
    return kResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace symdyn::cli
