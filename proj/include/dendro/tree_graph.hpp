#pragma once

#include "dendro/dendrimer.hpp"
#include "dendro/exact.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dendro {

// Refuse to materialize graphs above this many vertices unless the caller
// raises the cap explicitly; the brute-force routines are quadratic.
inline constexpr long long kDefaultVertexCap = 10'000'000;

// Explicit tree over vertices 0..V-1 with vertex 0 as the root.  This is
// the ground truth every formula in the library is checked against.
class TreeGraph {
public:
    // Validates shape on construction: exactly V-1 edges, endpoints in
    // range, no self-loops, every vertex reachable from the root.
    TreeGraph(int vertex_total, const std::vector<std::pair<int, int>>& edges,
              std::optional<DendrimerParams> source = std::nullopt);

    int vertex_total() const { return static_cast<int>(adjacency_.size()); }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    bool is_leaf(int v) const { return adjacency_[v].size() == 1; }
    // Distance from the root.
    int level(int v) const { return level_[v]; }
    // Set when the graph was built from dendrimer parameters.
    const std::optional<DendrimerParams>& source_params() const { return source_; }

private:
    std::vector<std::vector<int>> adjacency_;  // each list sorted ascending
    std::vector<int> level_;
    std::optional<DendrimerParams> source_;
};

// Pairs at one distance, split by how many endpoints are leaves.
struct EndpointBreakdown {
    int length = 0;
    ExactInt neither_leaf;
    ExactInt one_leaf;
    ExactInt both_leaves;

    ExactInt total() const { return neither_leaf + one_leaf + both_leaves; }
};

// Deterministic labeling: root is 0, levels get consecutive ids in
// breadth-first order, children of lower-numbered parents first.
TreeGraph build_dendrimer(const DendrimerParams& p, long long vertex_cap = kDefaultVertexCap);

// histogram[d] = number of unordered vertex pairs at distance d, for every
// realized d >= 1.  In a tree this is also the number of d-edge paths.
std::map<int, ExactInt> distance_histogram(const TreeGraph& g);

EndpointBreakdown endpoint_breakdown(const TreeGraph& g, int length);
// One entry per realized length, ascending from 1.
std::vector<EndpointBreakdown> endpoint_breakdown_all(const TreeGraph& g);

// Sum of distances over all unordered pairs, accumulated directly so it
// can cross-check the histogram route.
ExactInt wiener_brute(const TreeGraph& g);

// Uniform-attachment tree: vertex v joins a uniformly random earlier
// vertex.  Same seed, same tree, on every platform.
TreeGraph random_tree(int vertex_total, std::uint64_t seed);

// One "u v" line per edge with u < v, ascending; graphs built from
// dendrimer parameters get a "# dendrimer n=.. k=.. V=.." header.
std::string export_edge_list(const TreeGraph& g);

std::string export_dot(const TreeGraph& g);

}  // namespace dendro
