// netfile.hpp -- the line-oriented constraint network file format.
//
//   # comment
//   items:
//   a interval          # or: a point / a <count>
//   constraints:
//   d a allen(s,m)      # scope letters, then an atom list ...
//   a b words {a,b} b ; b {a,b}     # ... or explicit S-words, ';'-separated
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "slang/network.hpp"

namespace slang {

/// Parses a network file body. ParseError positions are 1-based line numbers.
ConstraintNetwork parse_network(std::string_view text);

/// Reads and parses a file; Error when the file cannot be read.
ConstraintNetwork load_network(const std::filesystem::path& path);

/// Renders a network in the file format (occurrence counts as numbers,
/// constraints as explicit word lists). parse_network(render_network(n))
/// reproduces n up to constraint labels.
std::string render_network(const ConstraintNetwork& net);

/// Structural equality modulo constraint labels.
bool equivalent_networks(const ConstraintNetwork& a, const ConstraintNetwork& b);

} // namespace slang
