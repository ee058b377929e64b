#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>
#include <utility>
#include <vector>

#include "jointgraph/graph.hpp"
#include "jointgraph/rng.hpp"

namespace jgtest {

using namespace jointgraph;

struct TempDir {
    std::filesystem::path path;

    TempDir() {
        static std::atomic<int> counter{0};
        path = std::filesystem::temp_directory_path() /
               ("jointgraph_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
};

inline std::filesystem::path write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
    return p;
}

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline std::vector<std::string> padded_names(int n) {
    const int width = static_cast<int>(std::to_string(n > 0 ? n - 1 : 0).size());
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::string digits = std::to_string(i);
        names.push_back("v" + std::string(static_cast<std::size_t>(width) - digits.size(), '0') +
                        digits);
    }
    return names;
}

inline SimpleGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g;
    g.vertices.names = padded_names(n);
    g.adjacency = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [i, j] : edges) g.adjacency(i, j) = g.adjacency(j, i) = 1.0;
    return g;
}

inline SimpleGraph random_graph(Rng& rng, int n, double p) {
    SimpleGraph g;
    g.vertices.names = padded_names(n);
    g.adjacency = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_double() < p) g.adjacency(i, j) = g.adjacency(j, i) = 1.0;
    return g;
}

inline GraphPair random_pair(Rng& rng, int n, double p1, double p2) {
    GraphPair pair;
    pair.g1 = random_graph(rng, n, p1);
    pair.g2 = random_graph(rng, n, p2);
    return pair;
}

}  // namespace jgtest
