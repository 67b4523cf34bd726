#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "symdyn/decide.hpp"
#include "symdyn/induction.hpp"

namespace symdyn {

// Line-oriented result of a demonstrator: "name: ..." then "key: value" lines in
// insertion order, then "result: PASS" or "result: FAIL".
struct Report {
  std::string name;
  std::vector<std::pair<std::string, std::string>> fields;
  bool pass = true;

  void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
  // Records a check; a false `ok` fails the report.
  void check(std::string key, bool ok, std::string detail = {});
  std::string format() const;
};

// distance((0,k),(1,k)) against 2|k|+1 for |k| <= k_max in the semidirect group.
Report dihedral_distance_check(std::int64_t k_max);

/*
 * Refutes finite type for iota_J of the full shift {a,b}^Z inside the semidirect
 * group: delta (b only at (0,0)) is not a member, chi_M (b at (0,2M+1) and
 * (1,2M+1)) is, and every radius-M pattern of delta occurs in chi_M or in the
 * all-a configuration.
 */
Report sft_refutation_demo(int m);

struct SubshiftCount {
  std::size_t count = 0;
  std::size_t expected = 0;
  bool perfect_power = false;
  bool translation_invariant = false;
};

// Binary configurations on a finite group that are not constant.
SubshiftCount finite_group_subshift_count(const GroupKind& group);
Report finite_group_subshift_report(const std::vector<int>& orders);

bool is_perfect_power(std::size_t n);

// 1D verdicts for `rule` against bounded searches on its induced automaton over Z^2.
Report induced_property_transfer(const LocalRule& rule, std::size_t radius = 2);

// Golden mean along K inside Z x K: X_{F u F_S} against iota_J(X) on n x n windows.
Report product_ft_demo(int n_max = 4);

// Sofic and truncated even shift on Z up to `max_length`, and the induced Z^2 version on rows x cols windows.
Report even_shift_demo(std::size_t max_length = 12, int rows = 3, int cols = 8);

struct CoherenceRow {
  LocalRule rule;
  bool goe = false;
  bool witness = false;
  bool surjective = false;
};

// Random rule over Z with |A| = q and a contiguous neighbourhood of `width` cells.
LocalRule random_rule_1d(std::mt19937_64& rng, std::size_t q, std::size_t width);

// GoE found vs preinjectivity witness found, both searched up to `radius`.
Report moore_myhill_check(std::size_t rules, std::uint64_t seed, std::size_t radius = 3,
                          std::vector<CoherenceRow>* rows = nullptr);

}  // namespace symdyn
