#include "jointgraph/embed.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace jointgraph {

OmnibusMatrix omnibus(const GraphPair& pair) {
    pair.validate();
    const int n = pair.size();
    OmnibusMatrix out;
    out.n = n;
    out.m.resize(2 * n, 2 * n);
    const Eigen::MatrixXd avg = 0.5 * (pair.g1.adjacency + pair.g2.adjacency);
    out.m.topLeftCorner(n, n) = pair.g1.adjacency;
    out.m.bottomRightCorner(n, n) = pair.g2.adjacency;
    out.m.topRightCorner(n, n) = avg;
    out.m.bottomLeftCorner(n, n) = avg;
    return out;
}

namespace {

// Flip so the entry of largest magnitude (smallest index on ties) is positive.
void fix_sign(Eigen::VectorXd& v) {
    int best = 0;
    double best_abs = std::abs(v(0));
    for (int i = 1; i < v.size(); ++i) {
        const double a = std::abs(v(i));
        if (a > best_abs) {
            best_abs = a;
            best = i;
        }
    }
    if (v(best) < 0.0) v = -v;
}

bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    for (int i = 0; i < a.size(); ++i) {
        if (a(i) < b(i)) return true;
        if (a(i) > b(i)) return false;
    }
    return false;
}

}  // namespace

EmbeddingMatrix ase(const Eigen::MatrixXd& matrix, int d) {
    const int dim = static_cast<int>(matrix.rows());
    if (matrix.cols() != dim) throw std::invalid_argument("ase: matrix must be square");
    if (d < 1 || d > dim) throw std::invalid_argument("ase: d out of range");
    const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
    if ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::invalid_argument("ase: matrix not symmetric");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("ase: eigensolver failed to converge");

    const Eigen::VectorXd values = solver.eigenvalues();
    Eigen::MatrixXd vectors = solver.eigenvectors();
    for (int j = 0; j < dim; ++j) {
        Eigen::VectorXd col = vectors.col(j);
        fix_sign(col);
        vectors.col(j) = col;
    }

    std::vector<int> order(static_cast<std::size_t>(dim));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double ma = std::abs(values(a));
        const double mb = std::abs(values(b));
        if (ma != mb) return ma > mb;
        if (values(a) != values(b)) return values(a) > values(b);
        return lex_less(vectors.col(a), vectors.col(b));
    });

    EmbeddingMatrix out;
    out.coords.resize(dim, d);
    out.eigenvalues.resize(d);
    const double fro = matrix.norm();
    for (int t = 0; t < d; ++t) {
        const int idx = order[static_cast<std::size_t>(t)];
        const double lambda = values(idx);
        const Eigen::VectorXd v = vectors.col(idx);
        if ((matrix * v - lambda * v).norm() > 1e-8 * fro)
            throw std::runtime_error("ase: eigen residual above tolerance");
        out.coords.col(t) = v * std::sqrt(std::abs(lambda));
        out.eigenvalues(t) = lambda;
    }
    return out;
}

std::pair<EmbeddingMatrix, EmbeddingMatrix> split_embedding(const EmbeddingMatrix& e, int n) {
    if (e.rows() != 2 * n)
        throw std::invalid_argument("split_embedding: embedding rows != 2n");
    EmbeddingMatrix u1, u2;
    u1.coords = e.coords.topRows(n);
    u2.coords = e.coords.bottomRows(n);
    u1.eigenvalues = e.eigenvalues;
    u2.eigenvalues = e.eigenvalues;
    return {std::move(u1), std::move(u2)};
}

}  // namespace jointgraph
