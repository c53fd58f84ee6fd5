#include "dendro/tree_graph.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace dendro {

TreeGraph::TreeGraph(int vertex_total, const std::vector<std::pair<int, int>>& edges,
                     std::optional<DendrimerParams> source)
    : source_(std::move(source)) {
    if (vertex_total < 1)
        throw std::runtime_error("invalid tree: vertex count must be >= 1, got " +
                                 std::to_string(vertex_total));
    if (static_cast<long long>(edges.size()) != vertex_total - 1)
        throw std::runtime_error("invalid tree: " + std::to_string(vertex_total) +
                                 " vertices need " + std::to_string(vertex_total - 1) +
                                 " edges, got " + std::to_string(edges.size()));
    adjacency_.assign(vertex_total, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= vertex_total || v < 0 || v >= vertex_total)
            throw std::runtime_error("invalid tree: edge " + std::to_string(u) + " " +
                                     std::to_string(v) + " is out of range");
        if (u == v)
            throw std::runtime_error("invalid tree: self-loop at vertex " + std::to_string(u));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_)
        std::sort(list.begin(), list.end());

    level_.assign(vertex_total, -1);
    level_[0] = 0;
    std::vector<int> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v : adjacency_[u]) {
            if (level_[v] < 0) {
                level_[v] = level_[u] + 1;
                queue.push_back(v);
            }
        }
    }
    // With exactly V-1 edges, full reachability also proves acyclicity.
    for (int v = 0; v < vertex_total; ++v)
        if (level_[v] < 0)
            throw std::runtime_error("invalid tree: vertex " + std::to_string(v) +
                                     " is unreachable from root 0");
}

TreeGraph build_dendrimer(const DendrimerParams& p, long long vertex_cap) {
    ExactInt total = vertex_count(p);
    long long cap = std::min<long long>(vertex_cap, std::numeric_limits<int>::max());
    if (total > ExactInt(cap))
        throw std::domain_error("refusing to build the explicit tree: radius " +
                                std::to_string(p.radius()) + ", degree " +
                                std::to_string(p.degree()) + " needs " + total.str() +
                                " vertices, cap is " + std::to_string(cap));
    int vertex_total = total.raw().convert_to<int>();

    std::vector<std::pair<int, int>> edges;
    edges.reserve(vertex_total - 1);
    std::vector<int> parents{0};
    int next_id = 1;
    for (int depth = 1; depth <= p.radius(); ++depth) {
        std::vector<int> children;
        int fanout = (depth == 1) ? p.degree() : p.degree() - 1;
        children.reserve(parents.size() * fanout);
        for (int parent : parents) {
            for (int c = 0; c < fanout; ++c) {
                edges.emplace_back(parent, next_id);
                children.push_back(next_id);
                ++next_id;
            }
        }
        parents = std::move(children);
    }
    return TreeGraph(vertex_total, edges, p);
}

namespace {

// Hop counts from source into dist; both buffers are caller-owned so the
// per-source sweeps do not reallocate.
void bfs_distances(const TreeGraph& g, int source, std::vector<int>& dist,
                   std::vector<int>& queue) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(source);
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
}

}  // namespace

std::map<int, ExactInt> distance_histogram(const TreeGraph& g) {
    int vertex_total = g.vertex_total();
    std::vector<long long> counts(vertex_total, 0);  // distances in a tree are < V
    std::vector<int> dist(vertex_total);
    std::vector<int> queue;
    queue.reserve(vertex_total);
    for (int source = 0; source < vertex_total; ++source) {
        bfs_distances(g, source, dist, queue);
        for (int target = source + 1; target < vertex_total; ++target)
            ++counts[dist[target]];
    }
    std::map<int, ExactInt> histogram;
    for (int length = 1; length < vertex_total; ++length)
        if (counts[length] > 0)
            histogram[length] = ExactInt(counts[length]);
    return histogram;
}

std::vector<EndpointBreakdown> endpoint_breakdown_all(const TreeGraph& g) {
    int vertex_total = g.vertex_total();
    struct Row {
        long long neither = 0;
        long long one = 0;
        long long both = 0;
    };
    std::vector<Row> rows(vertex_total);
    std::vector<int> dist(vertex_total);
    std::vector<int> queue;
    queue.reserve(vertex_total);
    int max_length = 0;
    for (int source = 0; source < vertex_total; ++source) {
        bfs_distances(g, source, dist, queue);
        int source_leaf = g.is_leaf(source) ? 1 : 0;
        for (int target = source + 1; target < vertex_total; ++target) {
            int length = dist[target];
            max_length = std::max(max_length, length);
            Row& row = rows[length];
            switch (source_leaf + (g.is_leaf(target) ? 1 : 0)) {
                case 0: ++row.neither; break;
                case 1: ++row.one; break;
                default: ++row.both; break;
            }
        }
    }
    std::vector<EndpointBreakdown> result;
    result.reserve(max_length);
    for (int length = 1; length <= max_length; ++length) {
        const Row& row = rows[length];
        result.push_back({length, ExactInt(row.neither), ExactInt(row.one), ExactInt(row.both)});
    }
    return result;
}

EndpointBreakdown endpoint_breakdown(const TreeGraph& g, int length) {
    if (length < 1)
        throw std::domain_error("endpoint_breakdown: length must be >= 1, got " +
                                std::to_string(length));
    std::vector<EndpointBreakdown> rows = endpoint_breakdown_all(g);
    if (length <= static_cast<int>(rows.size()))
        return rows[length - 1];
    return {length, 0, 0, 0};
}

ExactInt wiener_brute(const TreeGraph& g) {
    int vertex_total = g.vertex_total();
    std::vector<int> dist(vertex_total);
    std::vector<int> queue;
    queue.reserve(vertex_total);
    BigInt total = 0;
    for (int source = 0; source < vertex_total; ++source) {
        bfs_distances(g, source, dist, queue);
        long long row = 0;
        for (int target = source + 1; target < vertex_total; ++target)
            row += dist[target];
        total += row;
    }
    return ExactInt(std::move(total));
}

TreeGraph random_tree(int vertex_total, std::uint64_t seed) {
    if (vertex_total < 1)
        throw std::domain_error("random_tree: vertex count must be >= 1, got " +
                                std::to_string(vertex_total));
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(vertex_total > 0 ? vertex_total - 1 : 0);
    for (int v = 1; v < vertex_total; ++v) {
        // modulo instead of uniform_int_distribution keeps the stream
        // identical across standard library implementations
        int parent = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
        edges.emplace_back(parent, v);
    }
    return TreeGraph(vertex_total, edges);
}

std::string export_edge_list(const TreeGraph& g) {
    std::string out;
    if (g.source_params()) {
        const DendrimerParams& p = *g.source_params();
        out += "# dendrimer n=" + std::to_string(p.radius()) + " k=" +
               std::to_string(p.degree()) + " V=" + std::to_string(g.vertex_total()) + "\n";
    }
    for (int u = 0; u < g.vertex_total(); ++u)
        for (int v : g.neighbors(u))
            if (u < v)
                out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string export_dot(const TreeGraph& g) {
    std::string out = "graph {\n";
    for (int u = 0; u < g.vertex_total(); ++u)
        for (int v : g.neighbors(u))
            if (u < v)
                out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace dendro
