// io.hpp -- line-oriented text formats for instances, codes and graphs
//
// Instance format:
//
//     # comment
//     msp <kappa> <length>
//     g <c1> ... <c_length> : <black> <white>
//
// Graph format (DIMACS edge style):
//
//     c comment
//     p edge <vertices> <edges>
//     e <u> <v>
//
// Blank lines are ignored in both. The full grammar lives in docs/formats.md.

#pragma once

#include <string>
#include <string_view>

#include "msp/reduction.hpp"
#include "msp/solver.hpp"

namespace msp::io {

/// Throws ParseError (with a 1-based line number) on malformed input.
MspInstance parse_instance(std::string_view text);

/// Canonical form: header, guesses in stored order, single spaces, trailing newline.
std::string serialize_instance(const MspInstance& instance);

/// Throws ParseError on malformed input, self-loops, duplicate edges in either
/// orientation, or an edge count that disagrees with the header.
Graph parse_graph(std::string_view text);

std::string serialize_graph(const Graph& graph);

/// Parses a space-separated code such as "1 2 3 4". Throws ParseError.
Code parse_code(std::string_view text);

/// Parses "b w". Throws ParseError.
Score parse_score(std::string_view text);

/// Reads a whole file. Throws InvalidInput if it cannot be opened.
std::string read_file(const std::string& path);

} // namespace msp::io
