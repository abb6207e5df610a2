#pragma once

#include <string>

#include "permlab/group.hpp"

namespace permlab {

/// Parses "(1 2 3)(4 5)" (1-based, whitespace-separated points, disjoint
/// cycles). "()" and "" denote the identity. Throws ParseError.
Perm parse_cycles(int degree, const std::string& text, int line_no = 0);

/// Group file format (bit-exact writer):
///   line 1: "degree <n>"
///   then:   "gen <cycles>" per generator
/// Blank lines and lines starting with '#' are ignored. LF line endings.
FiniteGroup parse_group_file(const std::string& text, const Limits& limits = {});
std::string write_group_file(const FiniteGroup& g);

} // namespace permlab
