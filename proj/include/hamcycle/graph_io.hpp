#pragma once

#include <filesystem>
#include <iosfwd>

#include "hamcycle/graph.hpp"

namespace hamcycle {

// Canonical graph file: {"v": <int>, "edges": [[a,b], ...]} with 0-based ids,
// each pair in (min,max) order, pairs sorted lexicographically. Only live
// edges are written.
void write_graph_json(const Graph& g, std::ostream& out);
void write_graph_json(const Graph& g, const std::filesystem::path& file);

Graph read_graph_json(std::istream& in);

// Plain-text alternative: first line "v e", then one "a b" pair per line.
Graph read_graph_edge_list(std::istream& in);

// Sniffs the format (JSON object vs whitespace list) and parses accordingly.
Graph read_graph_file(const std::filesystem::path& file);

}  // namespace hamcycle
