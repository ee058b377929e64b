#include "jointgraph/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace jointgraph {

std::optional<int> VertexTable::index_of(std::string_view name) const {
    const auto it = std::lower_bound(names.begin(), names.end(), name);
    if (it == names.end() || *it != name) return std::nullopt;
    return static_cast<int>(it - names.begin());
}

void VertexTable::validate() const {
    for (std::size_t i = 1; i < names.size(); ++i) {
        if (!(names[i - 1] < names[i]))
            throw std::invalid_argument("VertexTable: names must be unique and sorted, got '" +
                                        names[i - 1] + "' before '" + names[i] + "'");
    }
    if (!labels.empty() && labels.size() != names.size())
        throw std::invalid_argument("VertexTable: labels present but not one per vertex");
    for (const auto& l : labels)
        if (l.empty()) throw std::invalid_argument("VertexTable: empty label");
}

void WeightedDigraph::validate() const {
    vertices.validate();
    const int n = size();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& a = arcs[i];
        if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
            throw std::invalid_argument("WeightedDigraph: arc index out of range");
        if (!(a.weight >= 0.0))
            throw std::invalid_argument("WeightedDigraph: negative or NaN arc weight");
        if (i > 0) {
            const Arc& p = arcs[i - 1];
            if (p.source > a.source || (p.source == a.source && p.target >= a.target))
                throw std::invalid_argument("WeightedDigraph: arcs must be sorted and unique");
        }
    }
}

std::int64_t SimpleGraph::edge_count() const {
    const int n = size();
    std::int64_t e = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adjacency(i, j) != 0.0) ++e;
    return e;
}

std::vector<std::int64_t> SimpleGraph::degrees() const {
    const int n = size();
    std::vector<std::int64_t> deg(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (adjacency(i, j) != 0.0) ++deg[static_cast<std::size_t>(i)];
    return deg;
}

void SimpleGraph::validate() const {
    vertices.validate();
    if (adjacency.rows() != adjacency.cols())
        throw std::invalid_argument("SimpleGraph: adjacency not square");
    if (vertices.size() != size())
        throw std::invalid_argument("SimpleGraph: vertex table size does not match adjacency");
    const int n = size();
    for (int i = 0; i < n; ++i) {
        if (adjacency(i, i) != 0.0) throw std::invalid_argument("SimpleGraph: nonzero diagonal");
        for (int j = 0; j < n; ++j) {
            const double v = adjacency(i, j);
            if (v != 0.0 && v != 1.0)
                throw std::invalid_argument("SimpleGraph: entry not in {0,1}");
            if (v != adjacency(j, i))
                throw std::invalid_argument("SimpleGraph: adjacency not symmetric");
        }
    }
}

void GraphPair::validate() const {
    g1.validate();
    g2.validate();
    if (g1.vertices.names != g2.vertices.names)
        throw std::invalid_argument("GraphPair: vertex sets differ");
}

Matching Matching::identity(int n) {
    Matching m;
    m.phi.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) m.phi[static_cast<std::size_t>(i)] = i;
    return m;
}

bool Matching::is_permutation() const {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : phi) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

SimpleGraph preprocess(const WeightedDigraph& g) {
    g.validate();
    const int n = g.size();
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (const Arc& a : g.arcs) w(a.source, a.target) += a.weight;
    Eigen::MatrixXd s = w + w.transpose();
    SimpleGraph out;
    out.vertices = g.vertices;
    out.adjacency.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.adjacency(i, j) = (i != j && s(i, j) > 0.0) ? 1.0 : 0.0;
    return out;
}

WeightedDigraph to_digraph(const SimpleGraph& g) {
    WeightedDigraph out;
    out.vertices = g.vertices;
    const int n = g.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacency(i, j) != 0.0) out.arcs.push_back({i, j, 1.0});
    return out;
}

DropResult drop_isolated(const GraphPair& pair) {
    pair.validate();
    const int n = pair.size();
    const auto d1 = pair.g1.degrees();
    const auto d2 = pair.g2.degrees();
    std::vector<int> keep;
    std::vector<int> index_map(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        if (d1[static_cast<std::size_t>(i)] > 0 && d2[static_cast<std::size_t>(i)] > 0) {
            index_map[static_cast<std::size_t>(i)] = static_cast<int>(keep.size());
            keep.push_back(i);
        }
    }
    if (keep.empty()) throw std::invalid_argument("drop_isolated: no vertices survive");

    const int k = static_cast<int>(keep.size());
    auto shrink = [&](const SimpleGraph& g) {
        SimpleGraph out;
        out.adjacency.resize(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                out.adjacency(i, j) = g.adjacency(keep[static_cast<std::size_t>(i)],
                                                  keep[static_cast<std::size_t>(j)]);
        out.vertices.names.reserve(static_cast<std::size_t>(k));
        for (int i : keep) out.vertices.names.push_back(g.vertices.names[static_cast<std::size_t>(i)]);
        if (g.vertices.has_labels()) {
            out.vertices.labels.reserve(static_cast<std::size_t>(k));
            for (int i : keep)
                out.vertices.labels.push_back(g.vertices.labels[static_cast<std::size_t>(i)]);
        }
        return out;
    };

    DropResult res;
    res.pair.g1 = shrink(pair.g1);
    res.pair.g2 = shrink(pair.g2);
    res.index_map = std::move(index_map);
    return res;
}

double sparsity(const SimpleGraph& g) {
    const int n = g.size();
    if (n < 2) throw std::invalid_argument("sparsity: need at least 2 vertices");
    const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    return static_cast<double>(g.edge_count()) / pairs;
}

std::int64_t edge_disagreements(const SimpleGraph& a1, const SimpleGraph& a2,
                                const Matching& phi) {
    const int n = a1.size();
    if (a2.size() != n || phi.size() != n)
        throw std::invalid_argument("edge_disagreements: size mismatch");
    if (!phi.is_permutation())
        throw std::invalid_argument("edge_disagreements: phi is not a permutation");
    std::int64_t d = 0;
    for (int i = 0; i < n; ++i) {
        const int pi = phi.phi[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            const int pj = phi.phi[static_cast<std::size_t>(j)];
            if (a1.adjacency(i, j) != a2.adjacency(pi, pj)) ++d;
        }
    }
    return d;
}

}  // namespace jointgraph
