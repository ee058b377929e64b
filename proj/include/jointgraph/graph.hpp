#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jointgraph {

/// Ordered set of named vertices, optionally carrying one categorical label
/// per vertex. Canonical order is lexicographic ascending over names so that
/// independently loaded files align deterministically.
struct VertexTable {
    std::vector<std::string> names;
    std::vector<std::string> labels;  // empty, or exactly one label per vertex

    int size() const { return static_cast<int>(names.size()); }
    bool has_labels() const { return !labels.empty(); }

    /// Index of `name` if present; names must be sorted (canonical order).
    std::optional<int> index_of(std::string_view name) const;

    /// Throws std::invalid_argument if names are not unique/sorted or labels
    /// have the wrong arity.
    void validate() const;
};

struct Arc {
    int source = 0;
    int target = 0;
    double weight = 0.0;
};

/// Directed weighted graph as loaded from an edge list. Duplicate
/// (source, target) pairs are summed on construction; loops allowed.
struct WeightedDigraph {
    VertexTable vertices;
    std::vector<Arc> arcs;  // unique (source, target), sorted, weights >= 0

    int size() const { return vertices.size(); }
    void validate() const;
};

/// Symmetric, binary, hollow adjacency over named vertices; the object all
/// downstream inference consumes.
struct SimpleGraph {
    VertexTable vertices;
    Eigen::MatrixXd adjacency;  // entries in {0,1}, A = A^T, zero diagonal

    int size() const { return static_cast<int>(adjacency.rows()); }
    std::int64_t edge_count() const;  // undirected edges
    std::vector<std::int64_t> degrees() const;
    void validate() const;
};

/// Two graphs over the identical ordered vertex set.
struct GraphPair {
    SimpleGraph g1;
    SimpleGraph g2;

    int size() const { return g1.size(); }
    void validate() const;
};

/// A bijection phi: g1 vertex index -> g2 vertex index.
struct Matching {
    std::vector<int> phi;

    int size() const { return static_cast<int>(phi.size()); }
    static Matching identity(int n);
    bool is_permutation() const;
};

/// Symmetrize (A <- A + A^T), binarize strictly positive entries, zero the
/// diagonal. Result satisfies all SimpleGraph invariants.
SimpleGraph preprocess(const WeightedDigraph& g);

/// One arc per undirected edge (i < j, weight 1); preprocess() of the result
/// reproduces `g` exactly.
WeightedDigraph to_digraph(const SimpleGraph& g);

struct DropResult {
    GraphPair pair;
    std::vector<int> index_map;  // old index -> new index, -1 if dropped
};

/// Removes every vertex isolated in either graph, reindexing both graphs
/// identically. Throws if nothing survives.
DropResult drop_isolated(const GraphPair& pair);

/// Undirected edge count divided by n-choose-2. Requires n >= 2.
double sparsity(const SimpleGraph& g);

/// Number of unordered vertex pairs whose edge status differs under phi:
/// sum over i<j of |A1[i][j] - A2[phi(i)][phi(j)]|.
std::int64_t edge_disagreements(const SimpleGraph& a1, const SimpleGraph& a2,
                                const Matching& phi);

}  // namespace jointgraph
