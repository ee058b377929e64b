#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "jointgraph/classify.hpp"
#include "jointgraph/graph.hpp"
#include "jointgraph/sgm.hpp"

namespace jointgraph {

enum class ExperimentKind { sgm_sweep, class_sweep };
enum class Metric { delta, chance, joint_error, single_error };

std::string to_string(ExperimentKind kind);
std::string to_string(Metric metric);
std::string to_string(Target target);

/// One row of a sweep result. For sgm_sweep records `replicate` is the Monte
/// Carlo index; class_sweep records carry replicate -1 and a target, printed
/// as the "loocv-g1"/"loocv-g2" marker in CSV output.
struct ExperimentRecord {
    ExperimentKind experiment = ExperimentKind::sgm_sweep;
    int parameter = 0;  // m or d
    int replicate = 0;
    Target target = Target::g1;  // class_sweep only
    Metric metric = Metric::delta;
    double value = 0.0;

    std::string replicate_cell() const;
};

struct SgmSweepConfig {
    std::vector<int> m_values = {0, 20, 40, 60, 80, 100, 120, 140, 160, 180};
    int replicates = 100;
    std::uint64_t rng_seed = 0;
    SgmConfig sgm;
    unsigned threads = 0;  // 0 = available parallelism
};

struct ClassSweepConfig {
    std::vector<int> d_values;  // default: 2,5,8,...,119
    ClassifierConfig classifier;
    std::vector<Target> targets = {Target::g1, Target::g2};
    unsigned threads = 0;

    ClassSweepConfig();
};

/// For each (m, replicate): draws a seed set from an independent derived
/// stream, runs sgm_match, and records the matching accuracy delta(m)
/// against the identity correspondence plus the chance accuracy 1/(n-m).
std::vector<ExperimentRecord> run_sgm_sweep(const GraphPair& pair, const SgmSweepConfig& cfg);

/// For each d and target: records the joint (omnibus) and single-graph
/// LOOCV classification errors. The pair's g1 vertex table must be labeled.
std::vector<ExperimentRecord> run_class_sweep(const GraphPair& pair, const ClassSweepConfig& cfg);

/// Writes `experiment,parameter,replicate,metric,value` with rows sorted by
/// that tuple and values printed to 9 significant digits.
void emit_csv(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path);

enum class PlotKind { errorbar, lines };

/// Renders records of a single experiment type to a static SVG. errorbar:
/// mean +- one standard deviation per parameter plus the chance curve.
/// lines: joint vs single error per embedding dimension, per target.
void emit_plot(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path,
               PlotKind kind);

struct SummaryPoint {
    int parameter = 0;
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation, 0 for a single value
    int count = 0;
};

/// Per-parameter mean/sd of one metric (class_sweep summaries are filtered
/// by target as well).
std::vector<SummaryPoint> summarize(const std::vector<ExperimentRecord>& records, Metric metric,
                                    Target target = Target::g1);

}  // namespace jointgraph
