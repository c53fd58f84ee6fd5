#pragma once

#include "dendro/tree_graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dendro {

// Outcome of one cross-check family over the whole sweep.
struct CheckResult {
    std::string name;
    long long instances = 0;
    bool passed = true;
    std::string counterexample;  // first mismatch; empty when passed
};

// Sweep bounds for run_verification.  Oracle-backed families build
// explicit graphs up to T(max_n, max_k), so that cell must stay under
// vertex_cap.
struct VerifyOptions {
    int max_n = 4;
    int max_k = 4;
    int random_trees = 200;
    int random_tree_max_vertices = 200;
    std::uint64_t seed = 1;
    long long vertex_cap = kDefaultVertexCap;
    // Perturbs one recursion result so the failure reporting path can be
    // demonstrated on an otherwise healthy build.
    bool inject_fault = false;
};

// Cross-checks every formula family against its independent counterpart
// (closed form vs recursion vs brute-force enumeration, endpoint
// classification, pair-count identity, Wiener agreement, sigma sums,
// census, and random-tree total distance).  One result per family.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace dendro
