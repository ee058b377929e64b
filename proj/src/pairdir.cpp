#include "jointgraph/pairdir.hpp"

#include <fstream>
#include <string>

#include "jointgraph/errors.hpp"
#include "jointgraph/graph_io.hpp"

namespace jointgraph {

namespace {

constexpr const char* kMetaHeader = "jointgraph pair v1";

void write_meta(const GraphPair& pair, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << kMetaHeader << '\n';
    out << "n " << pair.size() << '\n';
    out << "labels " << (pair.g1.vertices.has_labels() ? 1 : 0) << '\n';
    for (const auto& name : pair.g1.vertices.names) out << name << '\n';
    if (!out) throw IoError("write failed: " + path.string());
}

VertexTable read_meta(const std::filesystem::path& path, bool& labeled) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::string line;
    long lineno = 0;
    auto next = [&]() {
        if (!std::getline(in, line)) throw ParseError(path.string(), lineno + 1, "unexpected end of manifest");
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
    };

    next();
    if (line != kMetaHeader)
        throw ParseError(path.string(), lineno, "not a pair manifest: '" + line + "'");
    next();
    if (line.rfind("n ", 0) != 0) throw ParseError(path.string(), lineno, "expected 'n <count>'");
    int n = 0;
    try {
        n = std::stoi(line.substr(2));
    } catch (const std::exception&) {
        throw ParseError(path.string(), lineno, "bad vertex count '" + line.substr(2) + "'");
    }
    if (n < 1) throw ParseError(path.string(), lineno, "vertex count must be positive");
    next();
    if (line.rfind("labels ", 0) != 0)
        throw ParseError(path.string(), lineno, "expected 'labels <0|1>'");
    labeled = line.substr(7) == "1";

    VertexTable table;
    table.names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        next();
        table.names.push_back(line);
    }
    table.validate();
    return table;
}

SimpleGraph read_graph_on(const VertexTable& table, const std::filesystem::path& path) {
    const WeightedDigraph raw = load_edge_list(path);
    WeightedDigraph based;
    try {
        based = rebase(raw, table);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path.string() + " disagrees with meta.txt: " + e.what());
    }
    return preprocess(based);
}

}  // namespace

void write_pair_dir(const GraphPair& pair, const std::filesystem::path& dir) {
    pair.validate();
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory: " + dir.string());
    write_edge_list(pair.g1, dir / "a1.csv");
    write_edge_list(pair.g2, dir / "a2.csv");
    if (pair.g1.vertices.has_labels()) write_labels(pair.g1.vertices, dir / "labels.csv");
    write_meta(pair, dir / "meta.txt");
}

GraphPair read_pair_dir(const std::filesystem::path& dir) {
    bool labeled = false;
    VertexTable table = read_meta(dir / "meta.txt", labeled);
    if (labeled) {
        try {
            load_labels(dir / "labels.csv", table);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument((dir / "labels.csv").string() +
                                        " disagrees with meta.txt: " + e.what());
        }
    }
    GraphPair pair;
    pair.g1 = read_graph_on(table, dir / "a1.csv");
    pair.g2 = read_graph_on(table, dir / "a2.csv");
    pair.validate();
    return pair;
}

}  // namespace jointgraph
