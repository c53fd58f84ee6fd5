#pragma once

#include "dendro/indices.hpp"
#include "dendro/path_counts.hpp"
#include "dendro/tree_graph.hpp"

#include <string>

namespace dendro {

inline constexpr int kSchemaVersion = 1;

// Canonical JSON: fixed key order, all big integers as decimal strings,
// ratios as {"num", "den"} in lowest terms, counts ascending by length.
// Byte-identical across runs for the same input.
std::string to_json(const IndexReport& report);
std::string to_json(const PathLengthTable& table);

// "length,count" header then one row per length ascending, LF-only.
std::string to_csv(const PathLengthTable& table);

// Parses "u v" lines (optional "#" comment lines, blank lines ignored)
// into a validated tree rooted at vertex 0.  Malformed lines, self-loops,
// and cycle-closing edges fail with their line number; disconnected input
// fails naming a vertex that cannot reach the root.
TreeGraph from_edge_list(const std::string& text);

}  // namespace dendro
