#pragma once

#include <cstdint>
#include <vector>

#include "jointgraph/graph.hpp"

namespace jointgraph {

/// Vertex indices with known cross-graph correspondence. Indices are shared
/// by both graphs (seed s of g1 corresponds to seed s of g2).
struct SeedSet {
    std::vector<int> indices;

    int size() const { return static_cast<int>(indices.size()); }
    void validate(int n) const;  // distinct, in [0,n), m < n
};

struct SgmConfig {
    int max_iterations = 20;
    double tolerance = 1e-6;  // relative objective-change stop threshold
    std::uint64_t rng_seed = 0;
};

/// Per-iteration diagnostics of the relax-round solve, recorded for
/// invariant checks: the trace objective is monotone non-decreasing and every
/// iterate stays doubly stochastic.
struct SgmIterate {
    double objective = 0.0;    // seeded trace objective (higher = fewer disagreements)
    double step = 0.0;         // line-search alpha
    double min_entry = 0.0;    // smallest iterate entry
    double row_sum_err = 0.0;  // max |row sum - 1|
    double col_sum_err = 0.0;  // max |col sum - 1|
};

struct SgmTrace {
    std::vector<SgmIterate> iterations;
    double final_objective = 0.0;    // relaxed objective at the last iterate
    double rounded_objective = 0.0;  // objective of the rounded permutation
};

struct ReorderResult {
    GraphPair pair;
    std::vector<int> applied;  // old index -> new index
};

/// Permutes both adjacency matrices simultaneously so the seed vertices
/// occupy positions 0..m-1 in their given order (non-seeds follow in
/// ascending index order). `applied` supports the inverse mapping.
ReorderResult reorder_seeds_first(const GraphPair& pair, const SeedSet& seeds);

/// Seeded graph matching: minimizes edge disagreements over bijections that
/// fix the seed correspondence. Relaxes the non-seed permutation to the
/// doubly stochastic polytope, runs Frank-Wolfe with exact line search
/// (each direction from an exact LAP solve on the gradient), and rounds the
/// final iterate back to a permutation with one more LAP solve.
///
/// The returned matching is expressed in the pair's original vertex
/// indexing and maps every seed to itself. Fully deterministic.
Matching sgm_match(const GraphPair& pair, const SeedSet& seeds, const SgmConfig& cfg,
                   SgmTrace* trace = nullptr);

/// Correctly matched non-seeds divided by the number of non-seeds.
double matching_accuracy(const Matching& found, const Matching& truth, const SeedSet& seeds);

/// Expected accuracy of a uniformly random non-seed alignment: 1/(n-m).
double chance_accuracy(int n, int m);

}  // namespace jointgraph
