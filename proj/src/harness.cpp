#include "jointgraph/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "jointgraph/errors.hpp"
#include "jointgraph/parallel.hpp"
#include "jointgraph/rng.hpp"

namespace jointgraph {

std::string to_string(ExperimentKind kind) {
    return kind == ExperimentKind::sgm_sweep ? "sgm_sweep" : "class_sweep";
}

std::string to_string(Metric metric) {
    switch (metric) {
        case Metric::delta: return "delta";
        case Metric::chance: return "chance";
        case Metric::joint_error: return "joint_error";
        case Metric::single_error: return "single_error";
    }
    return "?";
}

std::string to_string(Target target) { return target == Target::g1 ? "g1" : "g2"; }

std::string ExperimentRecord::replicate_cell() const {
    if (experiment == ExperimentKind::class_sweep) return "loocv-" + to_string(target);
    return std::to_string(replicate);
}

ClassSweepConfig::ClassSweepConfig() {
    for (int d = 2; d <= 119; d += 3) d_values.push_back(d);
}

std::vector<ExperimentRecord> run_sgm_sweep(const GraphPair& pair, const SgmSweepConfig& cfg) {
    pair.validate();
    const int n = pair.size();
    if (cfg.replicates < 1) throw std::invalid_argument("run_sgm_sweep: replicates >= 1");
    if (cfg.m_values.empty()) throw std::invalid_argument("run_sgm_sweep: no m values");
    for (int m : cfg.m_values)
        if (m < 0 || m >= n)
            throw std::invalid_argument("run_sgm_sweep: m = " + std::to_string(m) +
                                        " out of range for n = " + std::to_string(n));

    const std::size_t cells =
        cfg.m_values.size() * static_cast<std::size_t>(cfg.replicates);
    std::vector<ExperimentRecord> records(2 * cells);
    const Matching truth = Matching::identity(n);

    run_parallel(cells, cfg.threads, [&](std::size_t cell) {
        const int mi = static_cast<int>(cell / static_cast<std::size_t>(cfg.replicates));
        const int rep = static_cast<int>(cell % static_cast<std::size_t>(cfg.replicates));
        const int m = cfg.m_values[static_cast<std::size_t>(mi)];

        Rng rng = derive_rng(cfg.rng_seed, static_cast<std::uint64_t>(m),
                             static_cast<std::uint64_t>(rep));
        SeedSet seeds{sample_without_replacement(rng, n, m)};
        const Matching found = sgm_match(pair, seeds, cfg.sgm);
        const double delta = matching_accuracy(found, truth, seeds);

        ExperimentRecord& a = records[2 * cell];
        a.experiment = ExperimentKind::sgm_sweep;
        a.parameter = m;
        a.replicate = rep;
        a.metric = Metric::delta;
        a.value = delta;
        ExperimentRecord& b = records[2 * cell + 1];
        b = a;
        b.metric = Metric::chance;
        b.value = chance_accuracy(n, m);
    });
    return records;
}

std::vector<ExperimentRecord> run_class_sweep(const GraphPair& pair, const ClassSweepConfig& cfg) {
    pair.validate();
    const int n = pair.size();
    if (!pair.g1.vertices.has_labels())
        throw std::invalid_argument("run_class_sweep: pair has no vertex labels");
    if (cfg.d_values.empty()) throw std::invalid_argument("run_class_sweep: no d values");
    for (int d : cfg.d_values)
        if (d < 1 || d > 2 * n)
            throw std::invalid_argument("run_class_sweep: d = " + std::to_string(d) +
                                        " out of range for n = " + std::to_string(n));
    if (cfg.targets.empty()) throw std::invalid_argument("run_class_sweep: no targets");
    const std::vector<std::string>& labels = pair.g1.vertices.labels;

    const std::size_t cells = cfg.d_values.size() * cfg.targets.size();
    std::vector<ExperimentRecord> records(2 * cells);

    run_parallel(cells, cfg.threads, [&](std::size_t cell) {
        const std::size_t di = cell / cfg.targets.size();
        const Target target = cfg.targets[cell % cfg.targets.size()];
        const int d = cfg.d_values[di];

        const double joint = joint_classification_error(pair, labels, d, cfg.classifier, target);
        const SimpleGraph& g = (target == Target::g1) ? pair.g1 : pair.g2;
        const double single = single_classification_error(g, labels, d, cfg.classifier);

        ExperimentRecord& a = records[2 * cell];
        a.experiment = ExperimentKind::class_sweep;
        a.parameter = d;
        a.replicate = -1;
        a.target = target;
        a.metric = Metric::joint_error;
        a.value = joint;
        ExperimentRecord& b = records[2 * cell + 1];
        b = a;
        b.metric = Metric::single_error;
        b.value = single;
    });
    return records;
}

namespace {

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::vector<ExperimentRecord> sorted_records(std::vector<ExperimentRecord> records) {
    std::sort(records.begin(), records.end(),
              [](const ExperimentRecord& a, const ExperimentRecord& b) {
                  return std::make_tuple(static_cast<int>(a.experiment), a.parameter, a.replicate,
                                         static_cast<int>(a.target), to_string(a.metric)) <
                         std::make_tuple(static_cast<int>(b.experiment), b.parameter, b.replicate,
                                         static_cast<int>(b.target), to_string(b.metric));
              });
    return records;
}

}  // namespace

void emit_csv(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path) {
    for (const auto& r : records)
        if (!(r.value >= 0.0 && r.value <= 1.0))
            throw std::invalid_argument("emit_csv: record value outside [0,1]");
    const auto sorted = sorted_records(records);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << "experiment,parameter,replicate,metric,value\n";
    for (const auto& r : sorted)
        out << to_string(r.experiment) << ',' << r.parameter << ',' << r.replicate_cell() << ','
            << to_string(r.metric) << ',' << format_value(r.value) << '\n';
    if (!out) throw IoError("write failed: " + path.string());
}

std::vector<SummaryPoint> summarize(const std::vector<ExperimentRecord>& records, Metric metric,
                                    Target target) {
    std::map<int, std::vector<double>> groups;
    for (const auto& r : records) {
        if (r.metric != metric) continue;
        if (r.experiment == ExperimentKind::class_sweep && r.target != target) continue;
        groups[r.parameter].push_back(r.value);
    }
    std::vector<SummaryPoint> out;
    out.reserve(groups.size());
    for (const auto& [param, values] : groups) {
        SummaryPoint pt;
        pt.parameter = param;
        pt.count = static_cast<int>(values.size());
        double sum = 0.0;
        for (double v : values) sum += v;
        pt.mean = sum / static_cast<double>(values.size());
        if (values.size() > 1) {
            double ss = 0.0;
            for (double v : values) ss += (v - pt.mean) * (v - pt.mean);
            pt.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
        }
        out.push_back(pt);
    }
    return out;
}

namespace {

// Minimal static SVG chart writer: axes, ticks, polylines, whiskers, legend.
struct Chart {
    static constexpr double kWidth = 640.0, kHeight = 440.0;
    static constexpr double kLeft = 64.0, kRight = 616.0, kTop = 24.0, kBottom = 384.0;

    double x_min, x_max, y_min, y_max;
    std::ostringstream body;

    Chart(double xmin, double xmax, double ymin, double ymax)
        : x_min(xmin), x_max(xmax), y_min(ymin), y_max(ymax) {
        if (x_max <= x_min) x_max = x_min + 1.0;
        if (y_max <= y_min) y_max = y_min + 1.0;
    }

    double px(double x) const { return kLeft + (x - x_min) / (x_max - x_min) * (kRight - kLeft); }
    double py(double y) const { return kBottom - (y - y_min) / (y_max - y_min) * (kBottom - kTop); }

    static std::string num(double v) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return buf;
    }

    static std::string tick_label(double v) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.4g", v);
        return buf;
    }

    void axes(const std::string& x_label, const std::string& y_label,
              const std::vector<double>& x_ticks) {
        body << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kBottom) << "\" x2=\""
             << num(kRight) << "\" y2=\"" << num(kBottom) << "\" stroke=\"black\"/>\n";
        body << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft)
             << "\" y2=\"" << num(kBottom) << "\" stroke=\"black\"/>\n";
        for (double t : x_ticks) {
            const double x = px(t);
            body << "<line x1=\"" << num(x) << "\" y1=\"" << num(kBottom) << "\" x2=\"" << num(x)
                 << "\" y2=\"" << num(kBottom + 6) << "\" stroke=\"black\"/>\n";
            body << "<text x=\"" << num(x) << "\" y=\"" << num(kBottom + 22)
                 << "\" text-anchor=\"middle\" font-size=\"12\">" << tick_label(t) << "</text>\n";
        }
        for (int i = 0; i <= 5; ++i) {
            const double v = y_min + (y_max - y_min) * i / 5.0;
            const double y = py(v);
            body << "<line x1=\"" << num(kLeft - 6) << "\" y1=\"" << num(y) << "\" x2=\""
                 << num(kLeft) << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>\n";
            body << "<text x=\"" << num(kLeft - 10) << "\" y=\"" << num(y + 4)
                 << "\" text-anchor=\"end\" font-size=\"12\">" << tick_label(v) << "</text>\n";
        }
        body << "<text x=\"" << num((kLeft + kRight) / 2) << "\" y=\"" << num(kBottom + 44)
             << "\" text-anchor=\"middle\" font-size=\"14\">" << x_label << "</text>\n";
        body << "<text x=\"16\" y=\"" << num((kTop + kBottom) / 2)
             << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 16 "
             << num((kTop + kBottom) / 2) << ")\">" << y_label << "</text>\n";
    }

    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& cls,
                  const std::string& color, bool dashed) {
        body << "<polyline class=\"" << cls << "\" fill=\"none\" stroke=\"" << color
             << "\" stroke-width=\"1.5\"";
        if (dashed) body << " stroke-dasharray=\"6 4\"";
        body << " points=\"";
        for (const auto& [x, y] : pts) body << num(px(x)) << ',' << num(py(y)) << ' ';
        body << "\"/>\n";
    }

    void whisker(double x, double lo, double hi, const std::string& color) {
        const double xp = px(x);
        body << "<line x1=\"" << num(xp) << "\" y1=\"" << num(py(lo)) << "\" x2=\"" << num(xp)
             << "\" y2=\"" << num(py(hi)) << "\" stroke=\"" << color << "\"/>\n";
        body << "<line x1=\"" << num(xp - 4) << "\" y1=\"" << num(py(lo)) << "\" x2=\""
             << num(xp + 4) << "\" y2=\"" << num(py(lo)) << "\" stroke=\"" << color << "\"/>\n";
        body << "<line x1=\"" << num(xp - 4) << "\" y1=\"" << num(py(hi)) << "\" x2=\""
             << num(xp + 4) << "\" y2=\"" << num(py(hi)) << "\" stroke=\"" << color << "\"/>\n";
    }

    void legend_entry(int slot, const std::string& label, const std::string& color, bool dashed) {
        const double y = kTop + 16.0 * slot + 8.0;
        body << "<line x1=\"" << num(kRight - 150) << "\" y1=\"" << num(y) << "\" x2=\""
             << num(kRight - 120) << "\" y2=\"" << num(y) << "\" stroke=\"" << color
             << "\" stroke-width=\"1.5\"" << (dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
        body << "<text x=\"" << num(kRight - 114) << "\" y=\"" << num(y + 4)
             << "\" font-size=\"12\">" << label << "</text>\n";
    }

    void write(const std::filesystem::path& path, const std::string& desc) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot open for writing: " + path.string());
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
            << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
            << "\">\n<desc>" << desc << "</desc>\n"
            << body.str() << "</svg>\n";
        if (!out) throw IoError("write failed: " + path.string());
    }
};

void plot_errorbar(const std::vector<ExperimentRecord>& records,
                   const std::filesystem::path& path) {
    const auto delta = summarize(records, Metric::delta);
    const auto chance = summarize(records, Metric::chance);
    if (delta.empty() || chance.empty())
        throw std::invalid_argument("emit_plot: sgm records lack delta/chance metrics");

    double x_lo = delta.front().parameter, x_hi = delta.back().parameter;
    Chart chart(x_lo, x_hi, 0.0, 1.0);
    std::vector<double> ticks;
    for (const auto& pt : delta) ticks.push_back(pt.parameter);
    chart.axes("seeds m", "matching accuracy", ticks);

    std::vector<std::pair<double, double>> mean_pts, chance_pts;
    for (const auto& pt : delta) {
        mean_pts.emplace_back(pt.parameter, pt.mean);
        chart.whisker(pt.parameter, std::max(0.0, pt.mean - pt.sd), std::min(1.0, pt.mean + pt.sd),
                      "black");
    }
    for (const auto& pt : chance) chance_pts.emplace_back(pt.parameter, pt.mean);
    chart.polyline(mean_pts, "series-delta", "black", false);
    chart.polyline(chance_pts, "series-chance", "#8b5a2b", true);
    chart.legend_entry(0, "mean delta(m)", "black", false);
    chart.legend_entry(1, "chance 1/(n-m)", "#8b5a2b", true);
    chart.write(path,
                "seeded graph matching accuracy sweep; errorbars show the mean plus/minus one "
                "standard deviation over replicates; chance curve is 1/(n-m)");
}

void plot_lines(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path) {
    double x_lo = 1e300, x_hi = -1e300, y_hi = 0.0;
    for (const auto& r : records) {
        x_lo = std::min(x_lo, static_cast<double>(r.parameter));
        x_hi = std::max(x_hi, static_cast<double>(r.parameter));
        y_hi = std::max(y_hi, r.value);
    }
    y_hi = std::max(0.05, std::ceil(y_hi * 20.0) / 20.0);
    Chart chart(x_lo, x_hi, 0.0, y_hi);

    std::vector<double> ticks;
    const int span = static_cast<int>(x_hi - x_lo);
    const int step = std::max(1, span / 8);
    for (int t = static_cast<int>(x_lo); t <= static_cast<int>(x_hi); t += step)
        ticks.push_back(t);
    chart.axes("embedding dimension d", "classification error", ticks);

    int slot = 0;
    for (Target target : {Target::g1, Target::g2}) {
        for (Metric metric : {Metric::joint_error, Metric::single_error}) {
            const auto pts = summarize(records, metric, target);
            if (pts.empty()) continue;
            std::vector<std::pair<double, double>> line;
            for (const auto& pt : pts) line.emplace_back(pt.parameter, pt.mean);
            const std::string color = metric == Metric::joint_error ? "#c832c8c" : "black";
            const bool dashed = target == Target::g2;
            const std::string cls =
                "series-" + to_string(metric) + "-" + to_string(target);
            chart.polyline(line, cls, color, dashed);
            chart.legend_entry(slot++, to_string(metric) + " " + to_string(target), color, dashed);
        }
    }
    chart.write(path,
                "joint vs single vertex classification error by embedding dimension; one LOOCV "
                "value per (d, target)");
}

}  // namespace

void emit_plot(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path,
               PlotKind kind) {
    if (records.empty()) throw std::invalid_argument("emit_plot: no records");
    const ExperimentKind experiment = records.front().experiment;
    for (const auto& r : records)
        if (r.experiment != experiment)
            throw std::invalid_argument("emit_plot: mixed experiment types");
    if (kind == PlotKind::errorbar) {
        if (experiment != ExperimentKind::sgm_sweep)
            throw std::invalid_argument("emit_plot: errorbar expects sgm_sweep records");
        plot_errorbar(records, path);
    } else {
        if (experiment != ExperimentKind::class_sweep)
            throw std::invalid_argument("emit_plot: lines expects class_sweep records");
        plot_lines(records, path);
    }
}

}  // namespace jointgraph
