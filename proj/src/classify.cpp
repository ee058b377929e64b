#include "jointgraph/classify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace jointgraph {

void LabeledPoints::validate() const {
    if (static_cast<int>(labels.size()) != size())
        throw std::invalid_argument("LabeledPoints: one label per row required");
    if (classes.empty()) throw std::invalid_argument("LabeledPoints: empty class set");
    for (int l : labels)
        if (l < 0 || l >= static_cast<int>(classes.size()))
            throw std::invalid_argument("LabeledPoints: label id out of range");
}

LabeledPoints make_labeled_points(Eigen::MatrixXd coords,
                                  const std::vector<std::string>& labels) {
    if (static_cast<Eigen::Index>(labels.size()) != coords.rows())
        throw std::invalid_argument("make_labeled_points: label count != rows");
    const std::set<std::string> distinct(labels.begin(), labels.end());
    LabeledPoints out;
    out.coords = std::move(coords);
    out.classes.assign(distinct.begin(), distinct.end());
    out.labels.reserve(labels.size());
    for (const auto& l : labels) {
        const auto it = std::lower_bound(out.classes.begin(), out.classes.end(), l);
        out.labels.push_back(static_cast<int>(it - out.classes.begin()));
    }
    return out;
}

void ClassifierConfig::validate() const {
    if (kind == ClassifierKind::knn) {
        if (k < 1 || k % 2 == 0)
            throw std::invalid_argument("ClassifierConfig: knn k must be odd and >= 1");
    } else {
        if (!(gamma > 0.0) || !(c > 0.0))
            throw std::invalid_argument("ClassifierConfig: svm_rbf needs gamma, c > 0");
    }
}

namespace {

// Distances within this relative tolerance count as tied and fall back to
// the row-index rule. Embedded coordinates carry eigensolver round-off, so a
// bitwise comparison would make neighbor selection unstable (e.g. between
// the two halves of an identical-pair joint embedding).
constexpr double kDistanceTieTol = 1e-9;

// Shared kNN kernel for direct classification and LOOCV. `skip` removes one
// training row (the held-out vertex); row indices keep their original order
// so the distance tie rule is stable across folds.
int knn_predict(const LabeledPoints& train, const Eigen::VectorXd& point,
                const ClassifierConfig& cfg, int skip) {
    const int n = train.size();
    const int usable = (skip >= 0) ? n - 1 : n;
    if (usable < 1) throw std::invalid_argument("classify_vertex: empty training set");

    std::vector<std::pair<double, int>> dist;
    dist.reserve(static_cast<std::size_t>(usable));
    for (int i = 0; i < n; ++i) {
        if (i == skip) continue;
        dist.emplace_back((train.coords.row(i).transpose() - point).squaredNorm(), i);
    }
    std::sort(dist.begin(), dist.end());
    // reorder every near-tied run by row index
    std::size_t run = 0;
    for (std::size_t t = 1; t <= dist.size(); ++t) {
        if (t == dist.size() ||
            dist[t].first - dist[run].first >
                kDistanceTieTol * std::max(1.0, dist[run].first)) {
            std::sort(dist.begin() + static_cast<std::ptrdiff_t>(run),
                      dist.begin() + static_cast<std::ptrdiff_t>(t),
                      [](const auto& a, const auto& b) { return a.second < b.second; });
            run = t;
        }
    }

    const int kk = std::min(cfg.k, usable);
    std::vector<int> votes(train.classes.size(), 0);
    for (int t = 0; t < kk; ++t) ++votes[static_cast<std::size_t>(train.labels[static_cast<std::size_t>(dist[static_cast<std::size_t>(t)].second)])];
    int best = 0;
    for (std::size_t cl = 1; cl < votes.size(); ++cl)
        if (votes[cl] > votes[static_cast<std::size_t>(best)]) best = static_cast<int>(cl);
    return best;
}

}  // namespace

int classify_vertex(const LabeledPoints& train, const Eigen::VectorXd& point,
                    const ClassifierConfig& cfg) {
    train.validate();
    cfg.validate();
    if (cfg.kind == ClassifierKind::svm_rbf)
        throw std::invalid_argument("classify_vertex: svm_rbf is not built; use knn");
    if (point.size() != train.coords.cols())
        throw std::invalid_argument("classify_vertex: dimension mismatch");
    if (train.size() < 1) throw std::invalid_argument("classify_vertex: empty training set");
    return knn_predict(train, point, cfg, -1);
}

double loocv_error(const LabeledPoints& points, const ClassifierConfig& cfg) {
    points.validate();
    cfg.validate();
    if (cfg.kind == ClassifierKind::svm_rbf)
        throw std::invalid_argument("loocv_error: svm_rbf is not built; use knn");
    const int n = points.size();
    if (n < 3) throw std::invalid_argument("loocv_error: need n >= 3");

    int wrong = 0;
    for (int i = 0; i < n; ++i) {
        const int predicted = knn_predict(points, points.coords.row(i).transpose(), cfg, i);
        if (predicted != points.labels[static_cast<std::size_t>(i)]) ++wrong;
    }
    return static_cast<double>(wrong) / static_cast<double>(n);
}

double joint_classification_error(const GraphPair& pair, const std::vector<std::string>& labels,
                                  int d, const ClassifierConfig& cfg, Target target) {
    const int n = pair.size();
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("joint_classification_error: label count != n");
    if (d < 1 || d > 2 * n)
        throw std::invalid_argument("joint_classification_error: d out of range");
    const OmnibusMatrix omni = omnibus(pair);
    const EmbeddingMatrix joint = ase(omni.m, d);
    const auto [u1, u2] = split_embedding(joint, n);
    const EmbeddingMatrix& u = (target == Target::g1) ? u1 : u2;
    return loocv_error(make_labeled_points(u.coords, labels), cfg);
}

double single_classification_error(const SimpleGraph& g, const std::vector<std::string>& labels,
                                   int d, const ClassifierConfig& cfg) {
    const int n = g.size();
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("single_classification_error: label count != n");
    if (d < 1 || d > n)
        throw std::invalid_argument("single_classification_error: d out of range");
    const EmbeddingMatrix e = ase(g.adjacency, d);
    return loocv_error(make_labeled_points(e.coords, labels), cfg);
}

}  // namespace jointgraph
