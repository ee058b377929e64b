#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "jointgraph/embed.hpp"
#include "jointgraph/graph.hpp"

namespace jointgraph {

/// Embedded points with class labels. `labels[i]` indexes into `classes`,
/// which holds the distinct label strings in ascending order.
struct LabeledPoints {
    Eigen::MatrixXd coords;
    std::vector<int> labels;
    std::vector<std::string> classes;

    int size() const { return static_cast<int>(coords.rows()); }
    void validate() const;
};

/// Builds LabeledPoints from raw label strings; classes become the sorted
/// distinct labels.
LabeledPoints make_labeled_points(Eigen::MatrixXd coords,
                                  const std::vector<std::string>& labels);

enum class ClassifierKind { knn, svm_rbf };

struct ClassifierConfig {
    ClassifierKind kind = ClassifierKind::knn;
    int k = 5;           // knn neighbor count, odd
    double gamma = 1.0;  // svm_rbf kernel width
    double c = 1.0;      // svm_rbf regularization

    void validate() const;
};

/// Predicts the class of `point` from the training set. kNN with Euclidean
/// distance; distances within 1e-9 relative tolerance count as tied and
/// break toward the smaller training row index, vote ties toward the
/// smaller class index. Deterministic.
int classify_vertex(const LabeledPoints& train, const Eigen::VectorXd& point,
                    const ClassifierConfig& cfg);

/// Leave-one-out error: each row is predicted from all the others.
/// A fold whose training labels collapse to a single class still trains
/// (and predicts that class).
double loocv_error(const LabeledPoints& points, const ClassifierConfig& cfg);

enum class Target { g1, g2 };

/// Omnibus -> ASE(d) -> split -> LOOCV on the target graph's rows.
double joint_classification_error(const GraphPair& pair, const std::vector<std::string>& labels,
                                  int d, const ClassifierConfig& cfg, Target target);

/// ASE(d) of the single adjacency -> LOOCV.
double single_classification_error(const SimpleGraph& g, const std::vector<std::string>& labels,
                                   int d, const ClassifierConfig& cfg);

}  // namespace jointgraph
