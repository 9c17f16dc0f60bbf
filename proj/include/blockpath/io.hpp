#pragma once

#include <string>

#include "blockpath/digraph.hpp"

namespace blockpath {

struct ParseError : std::runtime_error {
    enum class Kind { malformed_header, arc_count_mismatch, mode_violation, bad_line, bad_digraph6 };
    Kind kind;
    ParseError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Edge-list format:
//   dg <n> <m> <mode>
//   u v            (one arc per line, 0-indexed)
// '#' starts a comment, blank lines are ignored.
std::string serialize_edge_list(const Digraph& d);
Digraph parse_edge_list(const std::string& text);

// digraph6-style: '&', then N(n), then the n*n adjacency matrix row-major,
// packed 6 bits per character at offset 63, diagonal zero.
std::string serialize_digraph6(const Digraph& d);
Digraph parse_digraph6(const std::string& text, Mode mode = Mode::general);

// Sniffs the format from the first non-blank byte ('&' vs "dg").
Digraph parse_any(const std::string& text);

Digraph load_digraph_file(const std::string& path);

}  // namespace blockpath
