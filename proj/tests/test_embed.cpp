#include <doctest.h>

#include <Eigen/QR>
#include <cmath>

#include "jointgraph/embed.hpp"
#include "jointgraph/rng.hpp"
#include "test_util.hpp"

using namespace jointgraph;

namespace {

Eigen::MatrixXd random_gaussian(Rng& rng, int rows, int cols) {
    Eigen::MatrixXd m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.next_normal();
    return m;
}

// Signed rank-d reconstruction from an embedding.
Eigen::MatrixXd reconstruct(const EmbeddingMatrix& e) {
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(e.rows(), e.rows());
    for (int j = 0; j < e.dim(); ++j) {
        const double sign = e.eigenvalues(j) < 0.0 ? -1.0 : 1.0;
        r += sign * e.coords.col(j) * e.coords.col(j).transpose();
    }
    return r;
}

}  // namespace

TEST_SUITE("embed") {

TEST_CASE("omnibus block layout") {
    GraphPair same;
    same.g1 = jgtest::graph_from_edges(3, {{0, 1}, {1, 2}});
    same.g2 = same.g1;
    const OmnibusMatrix m = omnibus(same);
    CHECK(m.m.rows() == 6);
    CHECK(m.m.topLeftCorner(3, 3) == same.g1.adjacency);
    CHECK(m.m.topRightCorner(3, 3) == same.g1.adjacency);
    CHECK(m.m.bottomLeftCorner(3, 3) == same.g1.adjacency);
    CHECK(m.m.bottomRightCorner(3, 3) == same.g1.adjacency);

    GraphPair mixed;
    mixed.g1 = jgtest::graph_from_edges(2, {{0, 1}});
    mixed.g2 = jgtest::graph_from_edges(2, {});
    const OmnibusMatrix avg = omnibus(mixed);
    CHECK(avg.m(0, 3) == 0.5);
    CHECK(avg.m(1, 2) == 0.5);
    CHECK(avg.m(2, 1) == 0.5);
    CHECK(avg.m == avg.m.transpose().eval());
    CHECK(avg.m.diagonal().isZero(0.0));
}

TEST_CASE("ase of the 2-cycle keeps the positive eigenvalue") {
    Eigen::MatrixXd m(2, 2);
    m << 0, 1, 1, 0;
    const EmbeddingMatrix e = ase(m, 1);
    CHECK(e.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(e.coords(0, 0)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::abs(e.coords(1, 0)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("ase of the zero matrix is zero") {
    const EmbeddingMatrix e = ase(Eigen::MatrixXd::Zero(4, 4), 1);
    CHECK(e.coords.isZero(0.0));
    CHECK(e.eigenvalues(0) == 0.0);
}

TEST_CASE("omnibus of two empty graphs is the zero matrix with zero coordinates") {
    GraphPair pair;
    pair.g1 = jgtest::graph_from_edges(4, {});
    pair.g2 = jgtest::graph_from_edges(4, {});
    const OmnibusMatrix m = omnibus(pair);
    CHECK(m.m.isZero(0.0));
    CHECK(ase(m.m, 2).coords.isZero(0.0));
}

TEST_CASE("ase recovers a random rank-3 PSD matrix exactly at d = 3") {
    Rng rng = derive_rng(41, 1);
    for (int trial = 0; trial < 5; ++trial) {
        const Eigen::MatrixXd x = random_gaussian(rng, 12, 3);
        const Eigen::MatrixXd m = x * x.transpose();
        const EmbeddingMatrix e = ase(m, 3);
        CHECK((m - reconstruct(e)).norm() <= 1e-6);
    }
}

TEST_CASE("ase invariants: residuals, column norms, orthogonality") {
    Rng rng = derive_rng(41, 2);
    const SimpleGraph g = jgtest::random_graph(rng, 20, 0.3);
    const Eigen::MatrixXd& m = g.adjacency;
    const int d = 6;
    const EmbeddingMatrix e = ase(m, d);
    const double fro = m.norm();
    for (int j = 0; j < d; ++j) {
        const double lambda = e.eigenvalues(j);
        const double scale = std::sqrt(std::abs(lambda));
        if (scale == 0.0) continue;
        const Eigen::VectorXd v = e.coords.col(j) / scale;
        CHECK((m * v - lambda * v).norm() <= 1e-8 * fro);
        CHECK(e.coords.col(j).squaredNorm() ==
              doctest::Approx(std::abs(lambda)).epsilon(1e-6));
        for (int l = j + 1; l < d; ++l) {
            const double s2 = std::sqrt(std::abs(e.eigenvalues(l)));
            if (s2 == 0.0) continue;
            CHECK(std::abs(v.dot(e.coords.col(l) / s2)) <= 1e-8);
        }
    }
    // magnitudes are non-increasing
    for (int j = 1; j < d; ++j)
        CHECK(std::abs(e.eigenvalues(j)) <= std::abs(e.eigenvalues(j - 1)) + 1e-12);
}

TEST_CASE("truncated spectral reconstruction beats random rank-d projections") {
    Rng rng = derive_rng(41, 3);
    const SimpleGraph g = jgtest::random_graph(rng, 18, 0.4);
    const Eigen::MatrixXd& m = g.adjacency;
    const int d = 4;
    const double ours = (m - reconstruct(ase(m, d))).norm();
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::MatrixXd q =
            Eigen::HouseholderQR<Eigen::MatrixXd>(random_gaussian(rng, 18, d))
                .householderQ() *
            Eigen::MatrixXd::Identity(18, d);
        const Eigen::MatrixXd competitor = q * q.transpose() * m * q * q.transpose();
        CHECK(ours <= (m - competitor).norm() + 1e-12);
    }
}

TEST_CASE("split_embedding halves rows and preserves alignment") {
    EmbeddingMatrix e;
    e.coords.resize(4, 2);
    e.coords << 1, 2, 3, 4, 5, 6, 7, 8;
    e.eigenvalues.resize(2);
    e.eigenvalues << 3.0, -1.0;
    const auto [u1, u2] = split_embedding(e, 2);
    CHECK(u1.coords.rows() == 2);
    CHECK(u2.coords.rows() == 2);
    CHECK(u1.coords(0, 0) == 1);
    CHECK(u2.coords(0, 0) == 5);
    CHECK(u1.eigenvalues == e.eigenvalues);
    CHECK_THROWS_AS(split_embedding(e, 3), std::invalid_argument);
}

TEST_CASE("identical-graph omnibus embeds both copies onto the same points") {
    Rng rng = derive_rng(41, 4);
    GraphPair pair;
    pair.g1 = jgtest::random_graph(rng, 15, 0.35);
    pair.g2 = pair.g1;
    const EmbeddingMatrix e = ase(omnibus(pair).m, 4);
    const auto [u1, u2] = split_embedding(e, 15);
    CHECK((u1.coords - u2.coords).cwiseAbs().maxCoeff() <= 1e-6);
}

TEST_CASE("vertex permutation permutes embedding rows when magnitudes are distinct") {
    // Laplacian-like weighted symmetric matrix with a generic spectrum.
    Rng rng = derive_rng(41, 5);
    const int n = 10;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m(i, j) = m(j, i) = rng.next_double();

    const int d = 3;
    const EmbeddingMatrix base = ase(m, d);
    // require clearly distinct magnitudes for the retained block
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> full(m);
    std::vector<double> mags;
    for (int i = 0; i < n; ++i) mags.push_back(std::abs(full.eigenvalues()(i)));
    std::sort(mags.begin(), mags.end(), std::greater<>());
    REQUIRE(mags[static_cast<std::size_t>(d - 1)] - mags[static_cast<std::size_t>(d)] > 1e-9);

    const auto sigma = sample_without_replacement(rng, n, n);
    Eigen::MatrixXd pm(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            pm(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(j)]) = m(i, j);
    const EmbeddingMatrix permuted = ase(pm, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j)
            CHECK(permuted.coords(sigma[static_cast<std::size_t>(i)], j) ==
                  doctest::Approx(base.coords(i, j)).epsilon(1e-8));
}

TEST_CASE("ase rejects bad input") {
    CHECK_THROWS_AS(ase(Eigen::MatrixXd::Zero(3, 3), 0), std::invalid_argument);
    CHECK_THROWS_AS(ase(Eigen::MatrixXd::Zero(3, 3), 4), std::invalid_argument);
    Eigen::MatrixXd asym(2, 2);
    asym << 0, 1, 0, 0;
    CHECK_THROWS_AS(ase(asym, 1), std::invalid_argument);
}

}  // TEST_SUITE
