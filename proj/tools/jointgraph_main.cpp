#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jointgraph/classify.hpp"
#include "jointgraph/errors.hpp"
#include "jointgraph/graph.hpp"
#include "jointgraph/graph_io.hpp"
#include "jointgraph/harness.hpp"
#include "jointgraph/pairdir.hpp"
#include "jointgraph/synth.hpp"

namespace fs = std::filesystem;
using namespace jointgraph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

/// Parses `1,2,3` and `a:b:step` range shorthand (inclusive of b when hit).
std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string tok =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (tok.empty())
            throw std::invalid_argument("empty entry in list '" + text + "'");
        const std::size_t c1 = tok.find(':');
        try {
            if (c1 == std::string::npos) {
                std::size_t used = 0;
                const int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                out.push_back(v);
            } else {
                const std::size_t c2 = tok.find(':', c1 + 1);
                if (c2 == std::string::npos)
                    throw std::invalid_argument("range needs a:b:step, got '" + tok + "'");
                const int a = std::stoi(tok.substr(0, c1));
                const int b = std::stoi(tok.substr(c1 + 1, c2 - c1 - 1));
                const int step = std::stoi(tok.substr(c2 + 1));
                if (step <= 0) throw std::invalid_argument("range step must be positive");
                for (int v = a; v <= b; v += step) out.push_back(v);
            }
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad list token '" + tok + "'");
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("list token out of range '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty list '" + text + "'");
    return out;
}

unsigned resolve_threads(unsigned flag_value) {
    if (flag_value != 0) return flag_value;
    if (const char* env = std::getenv("JOINTGRAPH_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 0;  // library resolves to available parallelism
}

void print_label_proportions(std::ostream& out, const VertexTable& table) {
    std::map<std::string, int> counts;
    for (const auto& l : table.labels) ++counts[l];
    for (const auto& [label, count] : counts) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f", 100.0 * count / static_cast<double>(table.size()));
        out << "label " << label << " " << count << " (" << buf << "%)\n";
    }
}

int cmd_preprocess(const fs::path& edges_a, const fs::path& edges_b,
                   const std::optional<fs::path>& labels_path, const fs::path& out_dir) {
    const WeightedDigraph raw_a = load_edge_list(edges_a);
    const WeightedDigraph raw_b = load_edge_list(edges_b);

    // Two independently loaded files align through the sorted union of their
    // vertex names; a vertex absent from one file is isolated there.
    const VertexTable common = merged_vertex_table(raw_a.vertices, raw_b.vertices);
    const WeightedDigraph da = rebase(raw_a, common);
    const WeightedDigraph db = rebase(raw_b, common);

    GraphPair full;
    full.g1 = preprocess(da);
    full.g2 = preprocess(db);

    std::vector<std::pair<std::string, std::string>> label_rows;
    bool labels_on_full = false;
    if (labels_path) {
        label_rows = load_label_rows(*labels_path);
        try {
            attach_labels(full.g1.vertices, label_rows);
            full.g2.vertices = full.g1.vertices;
            labels_on_full = true;
        } catch (const std::invalid_argument&) {
            labels_on_full = false;  // retry below on the reduced pair
        }
    }

    DropResult dropped = drop_isolated(full);
    if (labels_path && !labels_on_full) {
        attach_labels(dropped.pair.g1.vertices, label_rows);
        dropped.pair.g2.vertices = dropped.pair.g1.vertices;
    }

    write_pair_dir(dropped.pair, out_dir);

    std::ofstream report(out_dir / "stats.txt", std::ios::binary);
    if (!report) throw IoError("cannot open for writing: " + (out_dir / "stats.txt").string());
    auto arc_stats = [](const WeightedDigraph& g) {
        std::pair<long, long> counts{0, 0};  // non-loop arcs, loops
        for (const Arc& a : g.arcs) ++(a.source == a.target ? counts.second : counts.first);
        return counts;
    };
    auto emit_stats = [&](std::ostream& out) {
        const int n = full.size();
        out << "vertices loaded " << n << "\n";
        char buf[64];
        for (const auto& [tag, raw] : {std::pair<const char*, const WeightedDigraph&>{"g1", raw_a},
                                       {"g2", raw_b}}) {
            const auto [arcs, loops] = arc_stats(raw);
            out << "arcs " << tag << " " << arcs << " (+" << loops << " loops)\n";
            // directed sparsity of the raw input, over n*(n-1) ordered pairs
            std::snprintf(buf, sizeof buf, "%.6f",
                          static_cast<double>(arcs) / (static_cast<double>(n) * (n - 1)));
            out << "arc sparsity " << tag << " " << buf << "\n";
        }
        out << "edges g1 " << full.g1.edge_count() << "\n";
        out << "edges g2 " << full.g2.edge_count() << "\n";
        std::snprintf(buf, sizeof buf, "%.6f", sparsity(full.g1));
        out << "sparsity g1 " << buf << "\n";
        std::snprintf(buf, sizeof buf, "%.6f", sparsity(full.g2));
        out << "sparsity g2 " << buf << "\n";
        out << "vertices kept " << dropped.pair.size() << "\n";
        out << "vertices dropped " << (full.size() - dropped.pair.size()) << "\n";
        if (labels_on_full) {
            out << "labels over full vertex set:\n";
            print_label_proportions(out, full.g1.vertices);
        }
        if (dropped.pair.g1.vertices.has_labels()) {
            out << "labels over kept vertex set:\n";
            print_label_proportions(out, dropped.pair.g1.vertices);
        }
    };
    emit_stats(report);
    emit_stats(std::cout);
    return kExitOk;
}

int cmd_sgm_sweep(const fs::path& pair_dir, const std::string& m_list, int replicates,
                  std::uint64_t rng_seed, unsigned threads, const fs::path& out_csv,
                  const std::optional<fs::path>& plot_path) {
    const GraphPair pair = read_pair_dir(pair_dir);
    SgmSweepConfig cfg;
    cfg.m_values = parse_int_list(m_list);
    cfg.replicates = replicates;
    cfg.rng_seed = rng_seed;
    cfg.threads = resolve_threads(threads);
    const auto records = run_sgm_sweep(pair, cfg);
    emit_csv(records, out_csv);
    if (plot_path) emit_plot(records, *plot_path, PlotKind::errorbar);
    std::cout << "wrote " << records.size() << " records to " << out_csv.string() << "\n";
    return kExitOk;
}

int cmd_class_sweep(const fs::path& pair_dir, const std::string& d_list,
                    const std::string& classifier, int k, const std::string& target,
                    unsigned threads, const fs::path& out_csv,
                    const std::optional<fs::path>& plot_path) {
    const GraphPair pair = read_pair_dir(pair_dir);
    ClassSweepConfig cfg;
    cfg.d_values = parse_int_list(d_list);
    if (classifier == "knn") {
        cfg.classifier.kind = ClassifierKind::knn;
        cfg.classifier.k = k;
    } else if (classifier == "svm_rbf") {
        cfg.classifier.kind = ClassifierKind::svm_rbf;
    } else {
        throw std::invalid_argument("unknown classifier '" + classifier + "'");
    }
    if (target == "g1") {
        cfg.targets = {Target::g1};
    } else if (target == "g2") {
        cfg.targets = {Target::g2};
    } else if (target == "both") {
        cfg.targets = {Target::g1, Target::g2};
    } else {
        throw std::invalid_argument("unknown target '" + target + "'");
    }
    cfg.threads = resolve_threads(threads);
    const auto records = run_class_sweep(pair, cfg);
    emit_csv(records, out_csv);
    if (plot_path) emit_plot(records, *plot_path, PlotKind::lines);
    std::cout << "wrote " << records.size() << " records to " << out_csv.string() << "\n";
    return kExitOk;
}

Eigen::MatrixXd load_prob_matrix(const fs::path& path, int blocks) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    Eigen::MatrixXd probs(blocks, blocks);
    std::string line;
    long lineno = 0;
    for (int i = 0; i < blocks; ++i) {
        if (!std::getline(in, line))
            throw ParseError(path.string(), lineno + 1, "expected " + std::to_string(blocks) + " rows");
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = 0;
        for (int j = 0; j < blocks; ++j) {
            const std::size_t comma = line.find(',', start);
            const std::string tok = line.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            try {
                std::size_t used = 0;
                probs(i, j) = std::stod(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError(path.string(), lineno, "bad probability '" + tok + "'");
            }
            if (comma == std::string::npos && j + 1 < blocks)
                throw ParseError(path.string(), lineno, "expected " + std::to_string(blocks) + " columns");
            start = comma + 1;
        }
    }
    return probs;
}

int cmd_synth(const std::string& blocks_list, const fs::path& probs_file, double rho,
              std::uint64_t rng_seed, const fs::path& out_dir) {
    SbmSpec spec;
    spec.block_sizes = parse_int_list(blocks_list);
    spec.block_probs = load_prob_matrix(probs_file, static_cast<int>(spec.block_sizes.size()));
    spec.rho = rho;
    const GraphPair pair = sample_correlated_pair(spec, rng_seed);
    write_pair_dir(pair, out_dir);
    std::cout << "wrote synthetic pair (n=" << pair.size() << ") to " << out_dir.string() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Joint inference on a pair of graphs sharing a vertex set: "
                 "seeded graph matching and omnibus-embedding vertex classification"};
    app.require_subcommand(1);

    std::string edges_a, edges_b, labels_file, out_dir;
    auto* pre = app.add_subcommand("preprocess",
                                   "Load two edge lists, symmetrize/binarize, drop isolated "
                                   "vertices, write a canonical pair directory");
    pre->add_option("--edges-a", edges_a, "edge list CSV for graph 1")->required();
    pre->add_option("--edges-b", edges_b, "edge list CSV for graph 2")->required();
    pre->add_option("--labels", labels_file, "vertex label CSV");
    pre->add_option("--out-dir", out_dir, "output pair directory")->required();

    std::string pair_dir, m_values = "0:180:20", out_csv, plot_file;
    int replicates = 100;
    std::uint64_t rng_seed = 0;
    unsigned threads = 0;
    auto* sgm = app.add_subcommand("sgm-sweep", "Seeded graph matching accuracy sweep over m");
    sgm->add_option("--pair-dir", pair_dir, "pair directory from preprocess/synth")->required();
    sgm->add_option("--m-values", m_values, "seed counts, e.g. 0,20,40 or 0:180:20");
    sgm->add_option("--replicates", replicates, "Monte Carlo replicates per m");
    sgm->add_option("--rng-seed", rng_seed, "root RNG seed");
    sgm->add_option("--threads", threads, "worker cap (default: available parallelism)");
    sgm->add_option("--out", out_csv, "output CSV")->required();
    sgm->add_option("--plot", plot_file, "optional errorbar SVG");

    std::string d_values = "2:119:3", classifier = "knn", target = "both";
    int knn_k = 5;
    auto* cls = app.add_subcommand("class-sweep",
                                   "Joint vs single vertex classification error over d");
    cls->add_option("--pair-dir", pair_dir, "pair directory from preprocess/synth")->required();
    cls->add_option("--d-values", d_values, "embedding dimensions, e.g. 2:119:3");
    cls->add_option("--classifier", classifier, "knn or svm_rbf");
    cls->add_option("--k", knn_k, "kNN neighbor count (odd)");
    cls->add_option("--target", target, "g1, g2, or both");
    cls->add_option("--threads", threads, "worker cap (default: available parallelism)");
    cls->add_option("--out", out_csv, "output CSV")->required();
    cls->add_option("--plot", plot_file, "optional lines SVG");

    std::string blocks, probs_file;
    double rho = 0.0;
    auto* synth = app.add_subcommand("synth", "Sample a rho-correlated SBM pair directory");
    synth->add_option("--blocks", blocks, "block sizes, e.g. 50,50,50")->required();
    synth->add_option("--probs", probs_file, "CSV matrix of block probabilities")->required();
    synth->add_option("--rho", rho, "edge correlation in [0,1]")->required();
    synth->add_option("--rng-seed", rng_seed, "root RNG seed");
    synth->add_option("--out-dir", out_dir, "output pair directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (pre->parsed()) {
            std::optional<fs::path> labels;
            if (!labels_file.empty()) labels = labels_file;
            return cmd_preprocess(edges_a, edges_b, labels, out_dir);
        }
        std::optional<fs::path> plot;
        if (!plot_file.empty()) plot = plot_file;
        if (sgm->parsed())
            return cmd_sgm_sweep(pair_dir, m_values, replicates, rng_seed, threads, out_csv, plot);
        if (cls->parsed())
            return cmd_class_sweep(pair_dir, d_values, classifier, knn_k, target, threads,
                                   out_csv, plot);
        if (synth->parsed()) return cmd_synth(blocks, probs_file, rho, rng_seed, out_dir);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
