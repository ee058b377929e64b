#include "jointgraph/synth.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "jointgraph/rng.hpp"

namespace jointgraph {

int SbmSpec::vertex_count() const {
    return std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
}

void SbmSpec::validate() const {
    const int blocks = static_cast<int>(block_sizes.size());
    if (blocks < 1) throw std::invalid_argument("SbmSpec: need at least one block");
    for (int s : block_sizes)
        if (s < 1) throw std::invalid_argument("SbmSpec: block sizes must be positive");
    if (block_probs.rows() != blocks || block_probs.cols() != blocks)
        throw std::invalid_argument("SbmSpec: block_probs dimension must match block count");
    for (int i = 0; i < blocks; ++i)
        for (int j = 0; j < blocks; ++j) {
            const double p = block_probs(i, j);
            if (!(p >= 0.0 && p <= 1.0))
                throw std::invalid_argument("SbmSpec: probabilities must lie in [0,1]");
            if (p != block_probs(j, i))
                throw std::invalid_argument("SbmSpec: block_probs must be symmetric");
        }
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("SbmSpec: rho must lie in [0,1]");
}

namespace {

std::string padded_name(int idx, int width) {
    std::string digits = std::to_string(idx);
    return "v" + std::string(static_cast<std::size_t>(width) - digits.size(), '0') + digits;
}

}  // namespace

GraphPair sample_correlated_pair(const SbmSpec& spec, std::uint64_t rng_seed) {
    spec.validate();
    const int n = spec.vertex_count();

    std::vector<int> block_of(static_cast<std::size_t>(n));
    {
        int v = 0;
        for (std::size_t b = 0; b < spec.block_sizes.size(); ++b)
            for (int t = 0; t < spec.block_sizes[b]; ++t) block_of[static_cast<std::size_t>(v++)] = static_cast<int>(b);
    }

    VertexTable table;
    const int width = static_cast<int>(std::to_string(n > 0 ? n - 1 : 0).size());
    table.names.reserve(static_cast<std::size_t>(n));
    table.labels.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        table.names.push_back(padded_name(v, width));
        table.labels.push_back("b" + std::to_string(block_of[static_cast<std::size_t>(v)]));
    }

    Eigen::MatrixXd a1 = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd a2 = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double p = spec.block_probs(block_of[static_cast<std::size_t>(i)],
                                              block_of[static_cast<std::size_t>(j)]);
            Rng rng = derive_rng(rng_seed, static_cast<std::uint64_t>(i),
                                 static_cast<std::uint64_t>(j));
            const bool e1 = rng.next_double() < p;
            // Conditional flip keeps the marginal at p and the edgewise
            // Pearson correlation at rho.
            const double p2 = e1 ? p + spec.rho * (1.0 - p) : p * (1.0 - spec.rho);
            const bool e2 = rng.next_double() < p2;
            if (e1) a1(i, j) = a1(j, i) = 1.0;
            if (e2) a2(i, j) = a2(j, i) = 1.0;
        }
    }

    GraphPair pair;
    pair.g1.vertices = table;
    pair.g1.adjacency = std::move(a1);
    pair.g2.vertices = table;
    pair.g2.adjacency = std::move(a2);
    return pair;
}

}  // namespace jointgraph
