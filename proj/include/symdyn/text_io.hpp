#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "symdyn/local_rule.hpp"
#include "symdyn/window.hpp"

namespace symdyn {

/*
 * Window dumps.
 *
 *   word <start>            Z, contiguous support; next line holds the symbols,
 *   00100                   an optional third line marks the origin with '^'.
 *     ^
 *
 *   grid <x0> <y0>          Z^2; one row per y, increasing, each prefixed by '|'
 *   |010                    ('>' on the row y = 0); '.' is a cell outside the
 *   >1.1                    support; an optional last line marks x = 0 with '^'.
 *     ^
 *
 *   cells                   any group; one "cell <element> = <symbol>" per line.
 *
 * Lines starting with '#' are comments.
 */
std::string format_window(const Window& w, const Alphabet& alphabet);
Window parse_window(std::string_view text, const GroupKind& group, const Alphabet& alphabet);

// "torus m1 [m2]" followed by one symbol row per second coordinate value.
std::string format_torus(const TorusConfig& t, const Alphabet& alphabet);
TorusConfig parse_torus(std::string_view text, const Alphabet& alphabet);

using Configuration = std::variant<Window, TorusConfig>;
Configuration parse_configuration(std::string_view text, const GroupKind& group, const Alphabet& alphabet);

std::string read_file(const std::string& path);

}  // namespace symdyn
