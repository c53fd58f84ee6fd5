#pragma once

#include "dendro/exact.hpp"

namespace dendro {

// Parameters of the tree family T(radius, degree): a rooted tree in which
// every vertex closer than `radius` to the root has degree exactly
// `degree` and every vertex at distance `radius` is a leaf.  degree == 2
// degenerates to a path on 2*radius + 1 vertices.
class DendrimerParams {
public:
    DendrimerParams(int radius, int degree);

    int radius() const { return radius_; }
    int degree() const { return degree_; }

private:
    int radius_;
    int degree_;
};

ExactInt vertex_count(const DendrimerParams& p);
ExactInt edge_count(const DendrimerParams& p);
ExactInt leaf_count(const DendrimerParams& p);
ExactInt internal_vertex_count(const DendrimerParams& p);
int diameter(const DendrimerParams& p);

}  // namespace dendro
