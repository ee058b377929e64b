#pragma once

#include <Eigen/Dense>
#include <vector>

namespace jointgraph {

enum class LapSense { minimize, maximize };

struct Assignment {
    std::vector<int> perm;  // row i assigned to column perm[i]
    double cost = 0.0;      // sum of costs[i][perm[i]] on the input matrix
};

/// Exact dense linear assignment via shortest augmenting paths, O(k^3).
/// Among co-optimal assignments, returns the lexicographically smallest
/// permutation array, so repeated runs are bit-reproducible.
///
/// Throws std::invalid_argument on non-square or non-finite input.
Assignment solve_lap(const Eigen::MatrixXd& costs, LapSense sense = LapSense::minimize);

}  // namespace jointgraph
