#include "jointgraph/sgm.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "jointgraph/lap.hpp"

namespace jointgraph {

void SeedSet::validate(int n) const {
    const int m = size();
    if (m >= n) throw std::invalid_argument("SeedSet: need m < n");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int s : indices) {
        if (s < 0 || s >= n) throw std::invalid_argument("SeedSet: index out of range");
        if (seen[static_cast<std::size_t>(s)])
            throw std::invalid_argument("SeedSet: duplicate index " + std::to_string(s));
        seen[static_cast<std::size_t>(s)] = true;
    }
}

ReorderResult reorder_seeds_first(const GraphPair& pair, const SeedSet& seeds) {
    const int n = pair.size();
    seeds.validate(n);

    // order[new_pos] = old index: seeds in given order, then non-seeds ascending.
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<bool> is_seed(static_cast<std::size_t>(n), false);
    for (int s : seeds.indices) {
        is_seed[static_cast<std::size_t>(s)] = true;
        order.push_back(s);
    }
    for (int i = 0; i < n; ++i)
        if (!is_seed[static_cast<std::size_t>(i)]) order.push_back(i);

    std::vector<int> applied(static_cast<std::size_t>(n));
    for (int pos = 0; pos < n; ++pos) applied[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;

    auto permute = [&](const SimpleGraph& g) {
        SimpleGraph out;
        out.adjacency.resize(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out.adjacency(i, j) = g.adjacency(order[static_cast<std::size_t>(i)],
                                                  order[static_cast<std::size_t>(j)]);
        out.vertices.names.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            out.vertices.names.push_back(g.vertices.names[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
        if (g.vertices.has_labels()) {
            out.vertices.labels.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                out.vertices.labels.push_back(
                    g.vertices.labels[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
        }
        return out;
    };

    ReorderResult res;
    res.pair.g1 = permute(pair.g1);
    res.pair.g2 = permute(pair.g2);
    res.applied = std::move(applied);
    return res;
}

namespace {

constexpr double kMinEntryTol = 1e-12;
constexpr double kSumTol = 1e-9;
constexpr double kAlphaStop = 1e-12;
constexpr double kMonotoneSlack = 1e-9;

SgmIterate check_doubly_stochastic(const Eigen::MatrixXd& p) {
    SgmIterate it;
    it.min_entry = p.minCoeff();
    it.row_sum_err = (p.rowwise().sum().array() - 1.0).abs().maxCoeff();
    it.col_sum_err = (p.colwise().sum().array() - 1.0).abs().maxCoeff();
    if (it.min_entry < -kMinEntryTol || it.row_sum_err > kSumTol || it.col_sum_err > kSumTol)
        throw std::logic_error("sgm_match: iterate left the doubly stochastic polytope");
    return it;
}

Eigen::MatrixXd permutation_matrix(const std::vector<int>& perm) {
    const int k = static_cast<int>(perm.size());
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) q(i, perm[static_cast<std::size_t>(i)]) = 1.0;
    return q;
}

}  // namespace

Matching sgm_match(const GraphPair& pair, const SeedSet& seeds, const SgmConfig& cfg,
                   SgmTrace* trace) {
    pair.validate();
    const int n = pair.size();
    seeds.validate(n);
    if (cfg.max_iterations < 1) throw std::invalid_argument("SgmConfig: max_iterations >= 1");
    if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("SgmConfig: tolerance > 0");
    const int m = seeds.size();
    const int k = n - m;

    const ReorderResult reordered = reorder_seeds_first(pair, seeds);
    const Eigen::MatrixXd& full1 = reordered.pair.g1.adjacency;
    const Eigen::MatrixXd& full2 = reordered.pair.g2.adjacency;

    // Seed/non-seed blocks. With symmetric inputs the two seed-coupling
    // terms coincide, but the general form is kept.
    const Eigen::MatrixXd a22 = full1.bottomRightCorner(k, k);
    const Eigen::MatrixXd b22 = full2.bottomRightCorner(k, k);
    const Eigen::MatrixXd a21 = full1.bottomLeftCorner(k, m);
    const Eigen::MatrixXd b21 = full2.bottomLeftCorner(k, m);
    const Eigen::MatrixXd a12 = full1.topRightCorner(m, k);
    const Eigen::MatrixXd b12 = full2.topRightCorner(m, k);

    // f(P) = tr(A22 P B22^T P^T) + tr(P^T C): common-edge count (doubled)
    // between the aligned non-seed blocks plus the seed-coupling agreement.
    const Eigen::MatrixXd lin = a21 * b21.transpose() + a12.transpose() * b12;

    Eigen::MatrixXd p = Eigen::MatrixXd::Constant(k, k, 1.0 / static_cast<double>(k));

    SgmTrace local_trace;
    SgmTrace& tr = trace ? *trace : local_trace;
    tr.iterations.clear();

    Eigen::MatrixXd s1(k, k), sd(k, k), d(k, k);
    double objective = (a22 * p * b22.transpose()).cwiseProduct(p).sum() +
                       lin.cwiseProduct(p).sum();

    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
        SgmIterate it = check_doubly_stochastic(p);

        s1.noalias() = a22 * p * b22.transpose();
        const Eigen::MatrixXd grad = s1 + a22.transpose() * p * b22 + lin;

        const Assignment dir = solve_lap(grad, LapSense::maximize);
        d = permutation_matrix(dir.perm) - p;

        // f along the segment is quadratic: g(alpha) = f(P) + b*alpha + a*alpha^2.
        sd.noalias() = a22 * d * b22.transpose();
        const double qa = sd.cwiseProduct(d).sum();
        const double qb = s1.cwiseProduct(d).sum() + sd.cwiseProduct(p).sum() +
                          lin.cwiseProduct(d).sum();

        double alpha;
        if (qa < 0.0) {
            alpha = std::min(1.0, std::max(0.0, -qb / (2.0 * qa)));
        } else {
            alpha = (qb + qa >= 0.0) ? 1.0 : 0.0;
        }

        it.step = alpha;
        if (alpha <= kAlphaStop) {
            it.objective = objective;
            tr.iterations.push_back(it);
            break;
        }

        const double next = objective + qb * alpha + qa * alpha * alpha;
        if (next < objective - kMonotoneSlack * std::max(1.0, std::abs(objective)))
            throw std::logic_error("sgm_match: objective decreased along the line search");

        p += alpha * d;
        const double change = std::abs(next - objective);
        it.objective = next;
        tr.iterations.push_back(it);
        objective = next;
        if (change <= cfg.tolerance * std::max(1.0, std::abs(objective))) break;
    }

    // Round the relaxed solution to the nearest permutation (max trace(P^T Q)).
    const Assignment rounded = solve_lap(p, LapSense::maximize);
    tr.final_objective = objective;
    const Eigen::MatrixXd q = permutation_matrix(rounded.perm);
    tr.rounded_objective =
        (a22 * q * b22.transpose()).cwiseProduct(q).sum() + lin.cwiseProduct(q).sum();

    // Assemble phi in the reordered space, then map back to original indices.
    std::vector<int> phi_new(static_cast<std::size_t>(n));
    for (int s = 0; s < m; ++s) phi_new[static_cast<std::size_t>(s)] = s;
    for (int i = 0; i < k; ++i)
        phi_new[static_cast<std::size_t>(m + i)] = m + rounded.perm[static_cast<std::size_t>(i)];

    std::vector<int> inverse(static_cast<std::size_t>(n));
    for (int old = 0; old < n; ++old)
        inverse[static_cast<std::size_t>(reordered.applied[static_cast<std::size_t>(old)])] = old;

    Matching out;
    out.phi.resize(static_cast<std::size_t>(n));
    for (int old = 0; old < n; ++old) {
        const int pos = reordered.applied[static_cast<std::size_t>(old)];
        out.phi[static_cast<std::size_t>(old)] =
            inverse[static_cast<std::size_t>(phi_new[static_cast<std::size_t>(pos)])];
    }
    return out;
}

double matching_accuracy(const Matching& found, const Matching& truth, const SeedSet& seeds) {
    const int n = found.size();
    if (truth.size() != n) throw std::invalid_argument("matching_accuracy: size mismatch");
    seeds.validate(n);
    const int m = seeds.size();
    if (m >= n) throw std::invalid_argument("matching_accuracy: no non-seeds");
    std::vector<bool> is_seed(static_cast<std::size_t>(n), false);
    for (int s : seeds.indices) {
        if (found.phi[static_cast<std::size_t>(s)] != truth.phi[static_cast<std::size_t>(s)])
            throw std::invalid_argument("matching_accuracy: matchings disagree on a seed");
        is_seed[static_cast<std::size_t>(s)] = true;
    }
    int correct = 0;
    for (int i = 0; i < n; ++i)
        if (!is_seed[static_cast<std::size_t>(i)] &&
            found.phi[static_cast<std::size_t>(i)] == truth.phi[static_cast<std::size_t>(i)])
            ++correct;
    return static_cast<double>(correct) / static_cast<double>(n - m);
}

double chance_accuracy(int n, int m) {
    if (m >= n) throw std::invalid_argument("chance_accuracy: need m < n");
    return 1.0 / static_cast<double>(n - m);
}

}  // namespace jointgraph
