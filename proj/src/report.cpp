#include "dendro/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dendro {

namespace {

using Json = nlohmann::ordered_json;

Json ratio_json(const ExactRatio& value) {
    return Json{{"num", value.num().str()}, {"den", value.den().str()}};
}

Json counts_json(const PathLengthTable& table) {
    Json counts = Json::array();
    for (const auto& [length, count] : table.counts)
        counts.push_back(Json{{"length", length}, {"count", count.str()}});
    return counts;
}

}  // namespace

std::string to_json(const IndexReport& report) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["n"] = report.params.radius();
    doc["k"] = report.params.degree();
    doc["vertices"] = report.vertices.str();
    doc["edges"] = report.edges.str();
    doc["leaves"] = report.leaves.str();
    doc["counts"] = counts_json(report.table);
    doc["wiener"] = report.wiener.str();
    doc["average_distance"] = ratio_json(report.average_distance);
    Json meddom = Json::array();
    for (const auto& [sigma, value] : report.medium_domination)
        meddom.push_back(Json{{"sigma", sigma}, {"value", ratio_json(value)}});
    doc["medium_domination"] = std::move(meddom);
    return doc.dump(2) + "\n";
}

std::string to_json(const PathLengthTable& table) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["n"] = table.params.radius();
    doc["k"] = table.params.degree();
    doc["counts"] = counts_json(table);
    return doc.dump(2) + "\n";
}

std::string to_csv(const PathLengthTable& table) {
    std::string out = "length,count\n";
    for (const auto& [length, count] : table.counts)
        out += std::to_string(length) + "," + count.str() + "\n";
    return out;
}

namespace {

// Union-find over vertex ids, grown lazily, for cycle and connectivity
// checks while the edge list is still being read.
class DisjointSets {
public:
    int find(int v) {
        grow(v);
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    // false if u and v were already connected
    bool unite(int u, int v) {
        int root_u = find(u);
        int root_v = find(v);
        if (root_u == root_v)
            return false;
        parent_[root_u] = root_v;
        return true;
    }

private:
    void grow(int v) {
        std::size_t old_size = parent_.size();
        if (static_cast<std::size_t>(v) >= old_size) {
            parent_.resize(v + 1);
            for (std::size_t i = old_size; i < parent_.size(); ++i)
                parent_[i] = static_cast<int>(i);
        }
    }

    std::vector<int> parent_;
};

}  // namespace

TreeGraph from_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    DisjointSets components;
    int max_vertex = -1;
    std::istringstream lines(text);
    std::string line;
    int line_number = 0;
    while (std::getline(lines, line)) {
        ++line_number;
        std::istringstream fields(line);
        std::string token;
        if (!(fields >> token))
            continue;  // blank line
        if (token[0] == '#')
            continue;  // comment
        auto parse_vertex = [line_number](const std::string& t) -> int {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(t, &used);
            } catch (...) {
                used = 0;
            }
            if (used != t.size() || value < 0)
                throw std::runtime_error("line " + std::to_string(line_number) +
                                         ": expected a nonnegative vertex id, got \"" + t + "\"");
            return value;
        };
        int u = parse_vertex(token);
        std::string second;
        if (!(fields >> second))
            throw std::runtime_error("line " + std::to_string(line_number) +
                                     ": expected two vertex ids");
        int v = parse_vertex(second);
        std::string extra;
        if (fields >> extra)
            throw std::runtime_error("line " + std::to_string(line_number) +
                                     ": trailing content \"" + extra + "\"");
        if (u == v)
            throw std::runtime_error("line " + std::to_string(line_number) +
                                     ": self-loop at vertex " + std::to_string(u));
        if (!components.unite(u, v))
            throw std::runtime_error("line " + std::to_string(line_number) + ": edge " +
                                     std::to_string(u) + " " + std::to_string(v) +
                                     " closes a cycle");
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
    }
    if (edges.empty())
        throw std::runtime_error("edge list contains no edges");
    int vertex_total = max_vertex + 1;
    for (int v = 0; v < vertex_total; ++v)
        if (components.find(v) != components.find(0))
            throw std::runtime_error("disconnected input: vertex " + std::to_string(v) +
                                     " is not connected to vertex 0");
    return TreeGraph(vertex_total, edges);
}

}  // namespace dendro
