#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "jointgraph/graph.hpp"

namespace jointgraph {

/// Stochastic block model with an edgewise Pearson correlation between the
/// two sampled graphs.
struct SbmSpec {
    std::vector<int> block_sizes;
    Eigen::MatrixXd block_probs;  // symmetric, entries in [0,1]
    double rho = 0.0;             // in [0,1]

    int vertex_count() const;
    void validate() const;
};

/// Samples a rho-correlated pair: A1 edgewise Bernoulli(p) per block pair;
/// A2 conditionally on A1 so that marginals match and the edge correlation
/// is rho. Vertices are labeled by block id ("b0", "b1", ...). Per-edge RNG
/// streams are derived from rng_seed, so the same seed gives a bit-identical
/// pair regardless of traversal or threading.
GraphPair sample_correlated_pair(const SbmSpec& spec, std::uint64_t rng_seed);

}  // namespace jointgraph
