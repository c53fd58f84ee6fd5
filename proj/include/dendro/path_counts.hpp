#pragma once

#include "dendro/dendrimer.hpp"
#include "dendro/exact.hpp"

#include <map>

namespace dendro {

// Count of paths for every length 1..2n; counts[l] is also the number of
// unordered vertex pairs at distance l.
struct PathLengthTable {
    DendrimerParams params;
    std::map<int, ExactInt> counts;

    ExactInt total() const;
};

// Paths of the given length with exactly one leaf endpoint.  Zero at and
// beyond the diameter: a full-diameter path necessarily ends on two
// leaves.  Rejects degree 2 (a path graph needs no endpoint split).
ExactInt n1_leaf_paths(const DendrimerParams& p, int length);

// Paths of the given length with both endpoints leaves.  Zero for odd
// lengths: both ends sit at the deepest level, so the distance through
// the common ancestor is even.  Rejects degree 2.
ExactInt n2_leaf_paths(const DendrimerParams& p, int length);

// Count of paths of the given length, directly from the closed forms.
// Lengths beyond the diameter yield 0.
ExactInt path_count_closed(const DendrimerParams& p, int length);

// Same count, derived by growing the tree one level at a time and
// extending shorter paths; memoized, independent of path_count_closed.
// Rejects degree 2.
ExactInt path_count_recursive(const DendrimerParams& p, int length);

PathLengthTable path_count_table(const DendrimerParams& p);

// Two-way count of unordered vertex pairs: choosing 2 of V vertices must
// agree with summing path counts over every length.
struct IdentityReport {
    ExactInt vertex_pairs;
    ExactInt path_total;
    bool holds = false;
};

IdentityReport identity_check(const DendrimerParams& p);

}  // namespace dendro
