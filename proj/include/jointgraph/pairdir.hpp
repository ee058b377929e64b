#pragma once

#include <filesystem>

#include "jointgraph/graph.hpp"

namespace jointgraph {

/// On-disk layout for a canonical preprocessed pair:
///   a1.csv, a2.csv  edge lists (one row per undirected edge, weight 1)
///   labels.csv      vertex labels, present iff the pair is labeled
///   meta.txt        vertex order manifest
void write_pair_dir(const GraphPair& pair, const std::filesystem::path& dir);

/// Loads a pair directory, refusing inputs whose files disagree with the
/// meta.txt manifest (unknown vertices, bad counts, incomplete labels).
GraphPair read_pair_dir(const std::filesystem::path& dir);

}  // namespace jointgraph
