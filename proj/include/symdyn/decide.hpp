#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "symdyn/automaton.hpp"
#include "symdyn/local_rule.hpp"
#include "symdyn/shift.hpp"

namespace symdyn {

// Number of words on [start + l, end + r] mapped onto `word` (a window on an
// interval [start, end]), where [l, r] is the neighbourhood hull.
std::uint64_t count_predecessors(const LocalRule& rule, const Window& word, std::size_t cap = kDefaultTableCap);
std::uint64_t count_predecessors(const LocalRule& rule, std::span<const Symbol> word,
                                 std::size_t cap = kDefaultTableCap);

struct BalanceRow {
  std::size_t length = 0;
  std::uint64_t min_preimages = 0;
  std::uint64_t max_preimages = 0;
};

struct SurjectivityVerdict {
  enum class Decision { surjective, not_surjective, unknown };
  Decision decision = Decision::unknown;
  std::size_t radius = 0;           // bound searched, for unknown verdicts
  std::optional<Window> goe;        // verified to have no preimage
  std::vector<BalanceRow> balance;  // preimage counts per word length
};

struct InjectivityVerdict {
  enum class Decision { injective, not_injective, unknown };
  Decision decision = Decision::unknown;
  std::size_t radius = 0;
  std::optional<std::pair<TorusConfig, TorusConfig>> tori;  // distinct, equal images
  std::optional<std::pair<Window, Window>> windows;
};

const char* to_string(SurjectivityVerdict::Decision d);
const char* to_string(InjectivityVerdict::Decision d);

/*
 * Exact decision for a rule over Z acting on the full shift: subset construction
 * over the de Bruijn automaton reading the rule's output labels. The certificate
 * is the shortest, then lexicographically least, word without preimage; the
 * balance table covers word lengths 1..balance_length.
 */
SurjectivityVerdict decide_surjective_1d(const LocalRule& rule, std::size_t balance_length = 8,
                                         std::size_t cap = kDefaultTableCap);

// Exact decision via the pair graph; a counterexample is a pair of periodic
// configurations with equal images, checked with apply_torus.
InjectivityVerdict decide_injective_1d(const LocalRule& rule, std::size_t cap = kDefaultTableCap);

struct GoePattern {
  Window pattern;
  std::size_t radius = 0;
};

// Lexicographically least admissible pattern on `support` outside the image of
// the admissible patterns on support * N.
std::optional<Window> find_goe_on_support(const CellularAutomaton& ca, std::vector<Element> support,
                                          std::size_t cap = kDefaultEnumerationCap);
// Tries D_r for r = 0..radius and reports the first hit.
std::optional<GoePattern> find_goe(const CellularAutomaton& ca, std::size_t radius,
                                   std::size_t cap = kDefaultEnumerationCap);

struct PreinjectivityWitness {
  Window first;   // on W = D N^-1 N
  Window second;  // equal to `first` outside D
  std::size_t radius = 0;
};

/*
 * For r = 0..radius, D = D_r: two admissible windows on D N^-1 N that agree
 * outside D, differ on D and have equal images on D N^-1.
 */
std::optional<PreinjectivityWitness> preinjectivity_witness(const CellularAutomaton& ca, std::size_t radius,
                                                            std::size_t cap = kDefaultEnumerationCap);

// Rule g with neighbourhood inside [-r, r], r <= max_radius, such that both
// compositions with `rule` reduce to the identity; returned minimized.
std::optional<LocalRule> inverse_rule_search(const LocalRule& rule, std::size_t max_radius,
                                             std::size_t cap = kDefaultTableCap);

// Neighbourhood hull [l, r] of a rule over Z.
std::pair<std::int64_t, std::int64_t> hull_1d(const LocalRule& rule);

}  // namespace symdyn
