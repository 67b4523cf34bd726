#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "symdyn/embedding.hpp"
#include "symdyn/local_rule.hpp"
#include "symdyn/shift.hpp"

namespace symdyn {

/*
 * Line-oriented description of an alphabet, a group and optionally a shift, a
 * rule and an embedding:
 *
 *   version = 1
 *   alphabet = 01
 *   group = free_abelian(1)
 *   shift {
 *     pattern { at (0)=1; at (1)=1 }
 *   }
 *   rule {
 *     nbhd = (-1),(1)
 *     map 00->0 01->1 10->1 11->0
 *   }
 *   embedding = coordinate_axis(1,2,0)
 *
 * Inside `shift`, `family = even <bound>` expands the even-shift family up to
 * the bound, `truncation = <family> <bound>` only records one, and
 * `presentation { alphabet = ...; shift {...}; rule {...} }` gives a sofic
 * image. Inside `rule`, `builtin = <name>` may replace nbhd/map.
 */
struct Manifest {
  int version = 1;
  Alphabet alphabet = Alphabet::binary();
  GroupKind group = GroupKind::free_abelian(1);
  std::optional<ShiftSpec> shift;
  std::optional<LocalRule> rule;
  std::optional<SubgroupEmbedding> embedding;

  // The shift, or the full shift when none is given.
  ShiftSpec support() const;
};

bool operator==(const Manifest& a, const Manifest& b);

// Throws ParseError with the offending line on any syntax or consistency error.
Manifest parse_manifest(std::string_view text);
std::string format_manifest(const Manifest& m);
Manifest load_manifest(const std::string& path);

// "rule { ... }" section text for a single rule.
std::string format_rule_section(const LocalRule& rule, int indent = 0);

}  // namespace symdyn
