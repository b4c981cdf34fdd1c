#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bidensity/graph.hpp"

namespace bidensity {

enum class GraphFormat { edge_list, matrix_market };

struct LoadedGraph {
  Graph graph;
  /// When the input used sparse vertex ids, original_ids[v] is the id that was
  /// remapped to dense index v. Empty when the ids were already dense.
  std::vector<std::int64_t> original_ids;
  bool remapped = false;
};

/// Parses a graph from a stream.
///
/// Edge list: UTF-8, one "u v" pair per line, '#' starts a comment,
/// whitespace-tolerant. A comment of the form "# vertices N" pins the vertex
/// count (ids must then lie in [0, N)); without it, the vertex set is the set
/// of ids that appear, remapped to dense 0-based indices when it has gaps.
///
/// Matrix Market: coordinate pattern symmetric only; the matrix must be
/// square. Entries are 1-based; either triangle is accepted.
///
/// Self-loops are rejected; duplicate edges collapse.
LoadedGraph load_graph(std::istream& in, GraphFormat format);

/// Sniffs the format ("%%MatrixMarket" banner vs. edge list) and loads.
LoadedGraph load_graph_auto(std::istream& in);
LoadedGraph load_graph_file(const std::string& path);

/// Writes the edge-list form ("# vertices N" directive, then "u v" lines with
/// u < v in ascending order). Reloading yields an identical Graph.
void save_edge_list(const Graph& g, std::ostream& out);
std::string to_edge_list(const Graph& g);

}  // namespace bidensity
