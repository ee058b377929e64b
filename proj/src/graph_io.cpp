#include "jointgraph/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>

#include "jointgraph/errors.hpp"

namespace jointgraph {

namespace {

bool valid_identifier(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                        (c >= '0' && c <= '9') || c == '_';
        if (!ok) return false;
    }
    return true;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::ifstream open_for_read(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    return in;
}

double parse_weight(const std::string& field, const std::filesystem::path& path, long line) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end)
        throw ParseError(path.string(), line, "weight does not parse as a real: '" + field + "'");
    return value;
}

}  // namespace

WeightedDigraph load_edge_list(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    std::string line;
    long lineno = 0;

    if (!std::getline(in, line)) throw ParseError(path.string(), 1, "empty file, expected header");
    ++lineno;
    strip_cr(line);
    if (line != "source,target,weight")
        throw ParseError(path.string(), lineno,
                         "expected header 'source,target,weight', got '" + line + "'");

    struct Row {
        std::string source, target;
        double weight;
    };
    std::vector<Row> rows;
    std::set<std::string> names;

    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 3)
            throw ParseError(path.string(), lineno,
                             "expected 3 comma-separated fields, got " +
                                 std::to_string(fields.size()));
        if (!valid_identifier(fields[0]))
            throw ParseError(path.string(), lineno, "bad source name '" + fields[0] + "'");
        if (!valid_identifier(fields[1]))
            throw ParseError(path.string(), lineno, "bad target name '" + fields[1] + "'");
        const double w = parse_weight(fields[2], path, lineno);
        if (w < 0.0)
            throw ParseError(path.string(), lineno, "negative weight " + fields[2]);
        names.insert(fields[0]);
        names.insert(fields[1]);
        rows.push_back({fields[0], fields[1], w});
    }

    WeightedDigraph g;
    g.vertices.names.assign(names.begin(), names.end());

    std::map<std::pair<int, int>, double> summed;
    for (const Row& r : rows) {
        const int s = *g.vertices.index_of(r.source);
        const int t = *g.vertices.index_of(r.target);
        summed[{s, t}] += r.weight;
    }
    g.arcs.reserve(summed.size());
    for (const auto& [key, w] : summed) g.arcs.push_back({key.first, key.second, w});
    g.validate();
    return g;
}

std::vector<std::pair<std::string, std::string>> load_label_rows(
    const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    std::string line;
    long lineno = 0;

    if (!std::getline(in, line)) throw ParseError(path.string(), 1, "empty file, expected header");
    ++lineno;
    strip_cr(line);
    if (line != "vertex,label")
        throw ParseError(path.string(), lineno,
                         "expected header 'vertex,label', got '" + line + "'");

    std::vector<std::pair<std::string, std::string>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 2)
            throw ParseError(path.string(), lineno,
                             "expected 2 comma-separated fields, got " +
                                 std::to_string(fields.size()));
        if (!valid_identifier(fields[0]))
            throw ParseError(path.string(), lineno, "bad vertex name '" + fields[0] + "'");
        if (fields[1].empty()) throw ParseError(path.string(), lineno, "empty label");
        rows.emplace_back(fields[0], fields[1]);
    }
    return rows;
}

void attach_labels(VertexTable& table,
                   const std::vector<std::pair<std::string, std::string>>& rows) {
    std::vector<std::string> labels(table.names.size());
    std::vector<bool> assigned(table.names.size(), false);
    for (const auto& [name, label] : rows) {
        const auto idx = table.index_of(name);
        if (!idx)
            throw std::invalid_argument("attach_labels: unknown vertex '" + name + "'");
        if (assigned[static_cast<std::size_t>(*idx)])
            throw std::invalid_argument("attach_labels: duplicate assignment for '" + name + "'");
        if (label.empty()) throw std::invalid_argument("attach_labels: empty label for '" + name + "'");
        labels[static_cast<std::size_t>(*idx)] = label;
        assigned[static_cast<std::size_t>(*idx)] = true;
    }
    for (std::size_t i = 0; i < assigned.size(); ++i)
        if (!assigned[i])
            throw std::invalid_argument("attach_labels: vertex '" + table.names[i] +
                                        "' has no label");
    table.labels = std::move(labels);
}

void load_labels(const std::filesystem::path& path, VertexTable& table) {
    attach_labels(table, load_label_rows(path));
}

VertexTable merged_vertex_table(const VertexTable& a, const VertexTable& b) {
    std::set<std::string> names(a.names.begin(), a.names.end());
    names.insert(b.names.begin(), b.names.end());
    VertexTable out;
    out.names.assign(names.begin(), names.end());
    return out;
}

WeightedDigraph rebase(const WeightedDigraph& g, const VertexTable& table) {
    WeightedDigraph out;
    out.vertices = table;
    std::vector<int> remap(static_cast<std::size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i) {
        const auto idx = table.index_of(g.vertices.names[static_cast<std::size_t>(i)]);
        if (!idx)
            throw std::invalid_argument("rebase: vertex '" +
                                        g.vertices.names[static_cast<std::size_t>(i)] +
                                        "' missing from target table");
        remap[static_cast<std::size_t>(i)] = *idx;
    }
    std::map<std::pair<int, int>, double> summed;
    for (const Arc& a : g.arcs)
        summed[{remap[static_cast<std::size_t>(a.source)],
                remap[static_cast<std::size_t>(a.target)]}] += a.weight;
    out.arcs.reserve(summed.size());
    for (const auto& [key, w] : summed) out.arcs.push_back({key.first, key.second, w});
    return out;
}

void write_edge_list(const SimpleGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << "source,target,weight\n";
    const int n = g.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacency(i, j) != 0.0)
                out << g.vertices.names[static_cast<std::size_t>(i)] << ','
                    << g.vertices.names[static_cast<std::size_t>(j)] << ",1\n";
    if (!out) throw IoError("write failed: " + path.string());
}

void write_labels(const VertexTable& table, const std::filesystem::path& path) {
    if (!table.has_labels()) throw std::invalid_argument("write_labels: table has no labels");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << "vertex,label\n";
    for (std::size_t i = 0; i < table.names.size(); ++i)
        out << table.names[i] << ',' << table.labels[i] << '\n';
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace jointgraph
