#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "jointgraph/graph.hpp"

namespace jointgraph {

/// Reads an edge-list CSV (header `source,target,weight`). The vertex table
/// is the lexicographically sorted union of all names appearing in the file;
/// duplicate (source,target) arcs are summed. CRLF tolerated.
WeightedDigraph load_edge_list(const std::filesystem::path& path);

/// Reads a label CSV (header `vertex,label`) into raw rows; attachment to a
/// table is a separate step so callers can pick the alignment stage.
std::vector<std::pair<std::string, std::string>> load_label_rows(
    const std::filesystem::path& path);

/// Attaches label rows to `table`. Every row must name a vertex of the table,
/// no vertex may be assigned twice, and every vertex must end up labeled.
void attach_labels(VertexTable& table,
                   const std::vector<std::pair<std::string, std::string>>& rows);

/// load_label_rows + attach_labels in one call.
void load_labels(const std::filesystem::path& path, VertexTable& table);

/// Sorted union of two tables' names (labels are not merged).
VertexTable merged_vertex_table(const VertexTable& a, const VertexTable& b);

/// Re-expresses a digraph over a superset vertex table. Every vertex of `g`
/// must appear in `table`.
WeightedDigraph rebase(const WeightedDigraph& g, const VertexTable& table);

/// Writes a SimpleGraph as an edge-list CSV, one row per undirected edge
/// (source < target, weight 1), newline-terminated.
void write_edge_list(const SimpleGraph& g, const std::filesystem::path& path);

/// Writes a label CSV (header `vertex,label`).
void write_labels(const VertexTable& table, const std::filesystem::path& path);

}  // namespace jointgraph
