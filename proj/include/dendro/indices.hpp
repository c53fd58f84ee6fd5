#pragma once

#include "dendro/dendrimer.hpp"
#include "dendro/exact.hpp"
#include "dendro/path_counts.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dendro {

// Sum of length * count; applied to a distance histogram this is the total
// distance over all vertex pairs, for any tree.
ExactInt total_distance_from_counts(const std::map<int, ExactInt>& counts);

// Wiener index straight from its closed form.  Rejects degree 2 (the form
// divides by (k-2)^3); use wiener_from_counts there instead.
ExactInt wiener_closed(const DendrimerParams& p);

// Wiener index as the length-weighted sum over the path-count table;
// covers degree 2 as well.
ExactInt wiener_from_counts(const DendrimerParams& p);

// Wiener index divided by the number of vertex pairs, in lowest terms.
ExactRatio average_distance(const DendrimerParams& p);

// Number of paths of length <= sigma, by direct summation of the
// per-length counts.  sigma must lie in [2, 2n].
ExactInt sigma_sum(const DendrimerParams& p, int sigma);

// The same quantity from the piecewise two-sum closed form (odd lengths
// and even lengths summed separately).  Rejects degree 2.
ExactInt sigma_sum_closed(const DendrimerParams& p, int sigma);

// sigma_sum over the number of vertex pairs, in lowest terms; reaches 1/1
// exactly at sigma = 2n.
ExactRatio medium_domination(const DendrimerParams& p, int sigma);

struct IndexReport {
    DendrimerParams params;
    ExactInt vertices;
    ExactInt edges;
    ExactInt leaves;
    PathLengthTable table;
    ExactInt wiener;
    ExactRatio average_distance;
    std::vector<std::pair<int, ExactRatio>> medium_domination;  // (sigma, ratio), ascending
};

IndexReport build_index_report(const DendrimerParams& p, const std::vector<int>& sigmas);

}  // namespace dendro
