#include "dendro/verify.hpp"

#include "dendro/dendrimer.hpp"
#include "dendro/exact.hpp"
#include "dendro/indices.hpp"
#include "dendro/path_counts.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace dendro {

namespace {

std::string cell_text(int n, int k) {
    return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

std::string mismatch_text(int n, int k, int length, const ExactInt& expected,
                          const ExactInt& got) {
    return cell_text(n, k) + " length=" + std::to_string(length) + " expected=" +
           expected.str() + " got=" + got.str();
}

// Counts instances and keeps the first failure.
struct Family {
    CheckResult result;

    explicit Family(std::string name) { result.name = std::move(name); }

    void check(bool ok, const std::string& detail) {
        ++result.instances;
        if (!ok && result.passed) {
            result.passed = false;
            result.counterexample = detail;
        }
    }
};

ExactInt histogram_count(const std::map<int, ExactInt>& histogram, int length) {
    auto hit = histogram.find(length);
    return hit == histogram.end() ? ExactInt(0) : hit->second;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    if (options.max_n < 1 || options.max_k < 2)
        throw std::domain_error("verification bounds must satisfy max_n >= 1 and max_k >= 2");
    if (options.random_trees < 0)
        throw std::domain_error("random tree count must be >= 0");
    if (options.random_tree_max_vertices < 2)
        throw std::domain_error("random trees need at least 2 vertices");
    if (options.inject_fault && options.max_k < 3)
        throw std::domain_error("fault injection perturbs a recursion cell, which needs max_k >= 3");
    DendrimerParams largest(options.max_n, options.max_k);
    if (vertex_count(largest) > ExactInt(options.vertex_cap))
        throw std::domain_error("verification sweep too large: the n=" +
                                std::to_string(options.max_n) + ", k=" +
                                std::to_string(options.max_k) + " cell needs " +
                                vertex_count(largest).str() + " vertices, cap is " +
                                std::to_string(options.vertex_cap));

    std::vector<CheckResult> results;

    {
        Family family("path counts: closed form vs brute-force enumeration");
        for (int n = 1; n <= options.max_n; ++n)
            for (int k = 2; k <= options.max_k; ++k) {
                DendrimerParams p(n, k);
                auto histogram = distance_histogram(build_dendrimer(p, options.vertex_cap));
                for (int length = 1; length <= diameter(p); ++length) {
                    ExactInt expected = histogram_count(histogram, length);
                    ExactInt got = path_count_closed(p, length);
                    family.check(got == expected, mismatch_text(n, k, length, expected, got));
                }
            }
        results.push_back(std::move(family.result));
    }

    {
        Family family("path counts: recursion vs closed form");
        for (int n = 1; n <= options.max_n; ++n)
            for (int k = 3; k <= options.max_k; ++k) {
                DendrimerParams p(n, k);
                for (int length = 1; length <= diameter(p); ++length) {
                    ExactInt expected = path_count_closed(p, length);
                    ExactInt got = path_count_recursive(p, length);
                    if (options.inject_fault && n == options.max_n && k == options.max_k &&
                        length == 1)
                        got += 1;
                    family.check(got == expected, mismatch_text(n, k, length, expected, got));
                }
            }
        results.push_back(std::move(family.result));
    }

    {
        Family one("one-leaf-end path counts vs brute-force classification");
        Family two("two-leaf-end path counts vs brute-force classification");
        for (int n = 1; n <= options.max_n; ++n)
            for (int k = 3; k <= options.max_k; ++k) {
                DendrimerParams p(n, k);
                auto rows = endpoint_breakdown_all(build_dendrimer(p, options.vertex_cap));
                for (int length = 1; length <= diameter(p); ++length) {
                    ExactInt seen_one(0), seen_two(0);
                    if (length <= static_cast<int>(rows.size())) {
                        seen_one = rows[length - 1].one_leaf;
                        seen_two = rows[length - 1].both_leaves;
                    }
                    ExactInt got_one = n1_leaf_paths(p, length);
                    ExactInt got_two = n2_leaf_paths(p, length);
                    one.check(got_one == seen_one, mismatch_text(n, k, length, seen_one, got_one));
                    two.check(got_two == seen_two, mismatch_text(n, k, length, seen_two, got_two));
                }
            }
        results.push_back(std::move(one.result));
        results.push_back(std::move(two.result));
    }

    {
        Family family("total path count equals vertex-pair count");
        for (int n = 1; n <= options.max_n; ++n)
            for (int k = 2; k <= options.max_k; ++k) {
                IdentityReport report = identity_check(DendrimerParams(n, k));
                family.check(report.holds, cell_text(n, k) + " pairs=" +
                                               report.vertex_pairs.str() + " paths=" +
                                               report.path_total.str());
            }
        results.push_back(std::move(family.result));
    }

    {
        Family family("wiener index: closed form vs length sum vs brute force");
        for (int n = 1; n <= options.max_n; ++n)
            for (int k = 2; k <= options.max_k; ++k) {
                DendrimerParams p(n, k);
                ExactInt from_counts = wiener_from_counts(p);
                ExactInt brute = wiener_brute(build_dendrimer(p, options.vertex_cap));
                std::string detail = cell_text(n, k) + " sum=" + from_counts.str() + " brute=" +
                                     brute.str();
                bool ok = from_counts == brute;
                if (k >= 3) {
                    ExactInt closed = wiener_closed(p);
                    detail += " closed=" + closed.str();
                    ok = ok && closed == from_counts;
                }
                family.check(ok, detail);
            }
        results.push_back(std::move(family.result));
    }

    {
        Family family("sigma sums: closed form vs direct sum; ratio reaches 1 at the diameter");
        for (int n = 1; n <= options.max_n; ++n)
            for (int k = 3; k <= options.max_k; ++k) {
                DendrimerParams p(n, k);
                ExactRatio previous;  // 0/1, below every real ratio
                for (int sigma = 2; sigma <= diameter(p); ++sigma) {
                    ExactInt direct = sigma_sum(p, sigma);
                    ExactInt closed = sigma_sum_closed(p, sigma);
                    ExactRatio ratio = medium_domination(p, sigma);
                    bool ok = direct == closed && previous <= ratio;
                    if (sigma == diameter(p))
                        ok = ok && ratio == ExactRatio(ExactInt(1));
                    family.check(ok, cell_text(n, k) + " sigma=" + std::to_string(sigma) +
                                         " direct=" + direct.str() + " closed=" + closed.str() +
                                         " ratio=" + ratio.str());
                    previous = ratio;
                }
            }
        results.push_back(std::move(family.result));
    }

    {
        Family family("census formulas vs built-graph degrees");
        for (int n = 1; n <= options.max_n; ++n)
            for (int k = 2; k <= options.max_k; ++k) {
                DendrimerParams p(n, k);
                TreeGraph g = build_dendrimer(p, options.vertex_cap);
                long long leaf_total = 0;
                long long internal_total = 0;
                int internal_degree = (k == 2) ? 2 : k;
                for (int v = 0; v < g.vertex_total(); ++v) {
                    if (g.degree(v) == 1)
                        ++leaf_total;
                    else if (g.degree(v) == internal_degree)
                        ++internal_total;
                }
                bool ok = ExactInt(g.vertex_total()) == vertex_count(p) &&
                          ExactInt(g.vertex_total() - 1) == edge_count(p) &&
                          ExactInt(leaf_total) == leaf_count(p) &&
                          ExactInt(internal_total) == internal_vertex_count(p) &&
                          ExactInt(leaf_total + internal_total) == vertex_count(p);
                family.check(ok, cell_text(n, k) + " vertices=" +
                                     std::to_string(g.vertex_total()) + " leaves=" +
                                     std::to_string(leaf_total) + " internal=" +
                                     std::to_string(internal_total));
            }
        results.push_back(std::move(family.result));
    }

    {
        Family family("random trees: length-weighted counts vs brute-force total distance");
        std::mt19937_64 rng(options.seed);
        for (int t = 0; t < options.random_trees; ++t) {
            int vertex_total =
                2 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                               options.random_tree_max_vertices - 1));
            TreeGraph tree = random_tree(vertex_total, rng());
            ExactInt weighted = total_distance_from_counts(distance_histogram(tree));
            ExactInt brute = wiener_brute(tree);
            family.check(weighted == brute,
                         "tree " + std::to_string(t) + " (" + std::to_string(vertex_total) +
                             " vertices) weighted=" + weighted.str() + " brute=" + brute.str());
        }
        results.push_back(std::move(family.result));
    }

    return results;
}

}  // namespace dendro
