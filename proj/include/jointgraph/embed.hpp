#pragma once

#include <Eigen/Dense>
#include <utility>

#include "jointgraph/graph.hpp"

namespace jointgraph {

/// 2n x 2n joint matrix [[A1, L], [L, A2]] with L = (A1 + A2) / 2.
struct OmnibusMatrix {
    int n = 0;  // per-graph vertex count
    Eigen::MatrixXd m;
};

/// Spectral embedding: rows are points, column j is the eigenvector of the
/// j-th largest |eigenvalue| scaled by sqrt(|eigenvalue|). Signed
/// eigenvalues are kept for downstream use.
struct EmbeddingMatrix {
    Eigen::MatrixXd coords;
    Eigen::VectorXd eigenvalues;

    int rows() const { return static_cast<int>(coords.rows()); }
    int dim() const { return static_cast<int>(coords.cols()); }
};

OmnibusMatrix omnibus(const GraphPair& pair);

/// Adjacency spectral embedding of a symmetric matrix into R^d: retains the
/// d eigenpairs of largest magnitude. Deterministic across runs: each
/// eigenvector's largest-magnitude entry is made positive, ranking breaks
/// |eigenvalue| ties by descending signed value then by eigenvector
/// lexicographic order. Verifies the eigen residual of every retained pair.
EmbeddingMatrix ase(const Eigen::MatrixXd& matrix, int d);

/// First n rows and last n rows; row i of both halves describes vertex i.
std::pair<EmbeddingMatrix, EmbeddingMatrix> split_embedding(const EmbeddingMatrix& e, int n);

}  // namespace jointgraph
