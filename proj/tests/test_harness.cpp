#include <doctest.h>

#include <sstream>

#include "jointgraph/harness.hpp"
#include "jointgraph/pairdir.hpp"
#include "jointgraph/synth.hpp"
#include "test_util.hpp"

using namespace jointgraph;
using jgtest::TempDir;
using jgtest::slurp;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

GraphPair identical_pair(int n, double p, std::uint64_t seed) {
    Rng rng = derive_rng(seed);
    GraphPair pair;
    pair.g1 = jgtest::random_graph(rng, n, p);
    pair.g2 = pair.g1;
    return pair;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("emit_csv writes a sorted, newline-terminated file") {
    TempDir tmp;

    SUBCASE("empty records give a header-only file") {
        emit_csv({}, tmp.path / "empty.csv");
        CHECK(slurp(tmp.path / "empty.csv") == "experiment,parameter,replicate,metric,value\n");
    }
    SUBCASE("one record gives exactly two lines") {
        ExperimentRecord r;
        r.experiment = ExperimentKind::sgm_sweep;
        r.parameter = 20;
        r.replicate = 3;
        r.metric = Metric::delta;
        r.value = 1.0 / 3.0;
        emit_csv({r}, tmp.path / "one.csv");
        const auto ls = lines_of(slurp(tmp.path / "one.csv"));
        REQUIRE(ls.size() == 2);
        CHECK(ls[1] == "sgm_sweep,20,3,delta,0.333333333");
    }
    SUBCASE("a full synthetic sweep grid has the expected row count") {
        std::vector<ExperimentRecord> records;
        for (int mi = 0; mi < 10; ++mi)
            for (int rep = 0; rep < 100; ++rep)
                for (Metric metric : {Metric::delta, Metric::chance}) {
                    ExperimentRecord r;
                    r.experiment = ExperimentKind::sgm_sweep;
                    r.parameter = 20 * mi;
                    r.replicate = rep;
                    r.metric = metric;
                    r.value = 0.5;
                    records.push_back(r);
                }
        emit_csv(records, tmp.path / "grid.csv");
        CHECK(lines_of(slurp(tmp.path / "grid.csv")).size() == 2001);
    }
    SUBCASE("rows are sorted by (experiment, parameter, replicate, metric)") {
        std::vector<ExperimentRecord> records;
        ExperimentRecord r;
        r.experiment = ExperimentKind::sgm_sweep;
        r.metric = Metric::delta;
        r.value = 0.25;
        r.parameter = 40;
        r.replicate = 1;
        records.push_back(r);
        r.parameter = 20;
        records.push_back(r);
        r.metric = Metric::chance;
        records.push_back(r);
        emit_csv(records, tmp.path / "sorted.csv");
        const auto ls = lines_of(slurp(tmp.path / "sorted.csv"));
        REQUIRE(ls.size() == 4);
        CHECK(ls[1].rfind("sgm_sweep,20,1,chance", 0) == 0);
        CHECK(ls[2].rfind("sgm_sweep,20,1,delta", 0) == 0);
        CHECK(ls[3].rfind("sgm_sweep,40,1,delta", 0) == 0);
    }
    SUBCASE("out-of-range values are rejected") {
        ExperimentRecord r;
        r.value = 1.5;
        CHECK_THROWS_AS(emit_csv({r}, tmp.path / "bad.csv"), std::invalid_argument);
    }
}

TEST_CASE("run_sgm_sweep on an identical pair attains delta = 1 with many seeds") {
    const GraphPair pair = identical_pair(12, 0.4, 61);
    SgmSweepConfig cfg;
    cfg.m_values = {9};
    cfg.replicates = 5;
    cfg.rng_seed = 7;
    const auto records = run_sgm_sweep(pair, cfg);
    REQUIRE(records.size() == 10);
    const auto deltas = summarize(records, Metric::delta);
    REQUIRE(deltas.size() == 1);
    CHECK(deltas[0].mean == 1.0);
    const auto chances = summarize(records, Metric::chance);
    CHECK(chances[0].mean == 1.0 / 3.0);  // n - m = 3, exactly
}

TEST_CASE("run_sgm_sweep is deterministic and order-independent") {
    const GraphPair pair = identical_pair(10, 0.5, 62);
    SgmSweepConfig cfg;
    cfg.m_values = {0, 3};
    cfg.replicates = 3;
    cfg.rng_seed = 99;
    cfg.threads = 1;
    const auto a = run_sgm_sweep(pair, cfg);
    cfg.threads = 2;
    const auto b = run_sgm_sweep(pair, cfg);

    TempDir tmp;
    emit_csv(a, tmp.path / "a.csv");
    emit_csv(b, tmp.path / "b.csv");
    CHECK(slurp(tmp.path / "a.csv") == slurp(tmp.path / "b.csv"));
}

TEST_CASE("run_sgm_sweep validates m against n") {
    const GraphPair pair = identical_pair(6, 0.5, 63);
    SgmSweepConfig cfg;
    cfg.m_values = {0, 6};
    CHECK_THROWS_AS(run_sgm_sweep(pair, cfg), std::invalid_argument);
}

TEST_CASE("run_class_sweep on identical graphs gives equal target errors") {
    GraphPair pair = identical_pair(12, 0.4, 64);
    std::vector<std::string> labels;
    for (int i = 0; i < 12; ++i) labels.push_back(i < 6 ? "x" : "y");
    pair.g1.vertices.labels = labels;
    pair.g2.vertices.labels = labels;

    ClassSweepConfig cfg;
    cfg.d_values = {2, 3};
    const auto records = run_class_sweep(pair, cfg);
    CHECK(records.size() == 8);  // 2 d-values x 2 targets x 2 metrics
    for (int d : cfg.d_values) {
        double joint_g1 = -1, joint_g2 = -2;
        for (const auto& r : records) {
            if (r.parameter != d || r.metric != Metric::joint_error) continue;
            (r.target == Target::g1 ? joint_g1 : joint_g2) = r.value;
        }
        CHECK(joint_g1 == joint_g2);
    }
    for (const auto& r : records) CHECK(r.replicate_cell().rfind("loocv-", 0) == 0);
}

TEST_CASE("run_class_sweep is thread-count independent") {
    GraphPair pair = identical_pair(10, 0.5, 69);
    std::vector<std::string> labels;
    for (int i = 0; i < 10; ++i) labels.push_back(i % 2 == 0 ? "p" : "q");
    pair.g1.vertices.labels = labels;
    pair.g2.vertices.labels = labels;
    ClassSweepConfig cfg;
    cfg.d_values = {2, 3, 4};
    cfg.threads = 1;
    const auto a = run_class_sweep(pair, cfg);
    cfg.threads = 3;
    const auto b = run_class_sweep(pair, cfg);
    TempDir tmp;
    emit_csv(a, tmp.path / "a.csv");
    emit_csv(b, tmp.path / "b.csv");
    CHECK(slurp(tmp.path / "a.csv") == slurp(tmp.path / "b.csv"));
}

TEST_CASE("run_class_sweep requires labels") {
    const GraphPair pair = identical_pair(8, 0.5, 65);
    ClassSweepConfig cfg;
    cfg.d_values = {2};
    CHECK_THROWS_AS(run_class_sweep(pair, cfg), std::invalid_argument);
}

TEST_CASE("emit_plot renders one series per metric") {
    TempDir tmp;
    const GraphPair pair = identical_pair(10, 0.4, 66);
    SgmSweepConfig scfg;
    scfg.m_values = {0, 4};
    scfg.replicates = 2;
    const auto sgm_records = run_sgm_sweep(pair, scfg);
    emit_plot(sgm_records, tmp.path / "sgm.svg", PlotKind::errorbar);
    const std::string svg = slurp(tmp.path / "sgm.svg");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("series-delta") != std::string::npos);
    CHECK(svg.find("series-chance") != std::string::npos);
    CHECK(svg.find("standard deviation") != std::string::npos);

    GraphPair labeled = pair;
    std::vector<std::string> labels;
    for (int i = 0; i < 10; ++i) labels.push_back(i % 2 == 0 ? "a" : "b");
    labeled.g1.vertices.labels = labels;
    labeled.g2.vertices.labels = labels;
    ClassSweepConfig ccfg;
    ccfg.d_values = {2, 4};
    const auto class_records = run_class_sweep(labeled, ccfg);
    emit_plot(class_records, tmp.path / "class.svg", PlotKind::lines);
    const std::string lines_svg = slurp(tmp.path / "class.svg");
    CHECK(lines_svg.find("series-joint_error-g1") != std::string::npos);
    CHECK(lines_svg.find("series-single_error-g1") != std::string::npos);
    CHECK(lines_svg.find("series-joint_error-g2") != std::string::npos);
    CHECK(lines_svg.find("series-single_error-g2") != std::string::npos);

    SUBCASE("rejections") {
        CHECK_THROWS_AS(emit_plot({}, tmp.path / "x.svg", PlotKind::errorbar),
                        std::invalid_argument);
        auto mixed = sgm_records;
        mixed.push_back(class_records.front());
        CHECK_THROWS_AS(emit_plot(mixed, tmp.path / "x.svg", PlotKind::errorbar),
                        std::invalid_argument);
        CHECK_THROWS_AS(emit_plot(sgm_records, tmp.path / "x.svg", PlotKind::lines),
                        std::invalid_argument);
        CHECK_THROWS_AS(emit_plot(class_records, tmp.path / "x.svg", PlotKind::errorbar),
                        std::invalid_argument);
    }
}

TEST_CASE("pair directories round-trip graphs and labels") {
    TempDir tmp;
    SbmSpec spec;
    spec.block_sizes = {5, 5};
    spec.block_probs = Eigen::MatrixXd::Constant(2, 2, 0.2);
    spec.block_probs.diagonal().setConstant(0.6);
    spec.rho = 0.5;
    const GraphPair pair = sample_correlated_pair(spec, 68);

    write_pair_dir(pair, tmp.path / "pair");
    const GraphPair loaded = read_pair_dir(tmp.path / "pair");
    CHECK(loaded.g1.adjacency == pair.g1.adjacency);
    CHECK(loaded.g2.adjacency == pair.g2.adjacency);
    CHECK(loaded.g1.vertices.names == pair.g1.vertices.names);
    CHECK(loaded.g1.vertices.labels == pair.g1.vertices.labels);
}

TEST_CASE("record values stay in [0,1] and chance is exact") {
    const GraphPair pair = identical_pair(9, 0.45, 67);
    SgmSweepConfig cfg;
    cfg.m_values = {0, 2, 5};
    cfg.replicates = 4;
    const auto records = run_sgm_sweep(pair, cfg);
    for (const auto& r : records) {
        CHECK(r.value >= 0.0);
        CHECK(r.value <= 1.0);
        if (r.metric == Metric::chance) CHECK(r.value == 1.0 / (9 - r.parameter));
    }
}

}  // TEST_SUITE
