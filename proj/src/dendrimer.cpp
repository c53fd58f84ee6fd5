#include "dendro/dendrimer.hpp"

#include <stdexcept>
#include <string>

namespace dendro {

DendrimerParams::DendrimerParams(int radius, int degree) : radius_(radius), degree_(degree) {
    if (radius < 1)
        throw std::domain_error("DendrimerParams: radius must be >= 1, got " +
                                std::to_string(radius));
    if (degree < 2)
        throw std::domain_error("DendrimerParams: degree must be >= 2, got " +
                                std::to_string(degree));
}

// The closed forms below all divide by (degree - 2), so the degenerate
// path case degree == 2 is handled by its own branch in each operation.

ExactInt vertex_count(const DendrimerParams& p) {
    if (p.degree() == 2)
        return ExactInt(2LL * p.radius() + 1);
    // 1 + k[(k-1)^n - 1]/(k-2)
    ExactInt k(p.degree());
    ExactInt grown = pow(ExactInt(p.degree() - 1), p.radius()) - ExactInt(1);
    return ExactInt(1) + exact_div(k * grown, ExactInt(p.degree() - 2));
}

ExactInt edge_count(const DendrimerParams& p) {
    if (p.degree() == 2)
        return ExactInt(2LL * p.radius());
    // level j contributes k(k-1)^(j-1) edges down from level j-1
    return geometric_sum(ExactInt(p.degree()), ExactInt(p.degree() - 1), p.radius());
}

ExactInt leaf_count(const DendrimerParams& p) {
    // k(k-1)^(n-1); yields 2 for the path case as well
    return ExactInt(p.degree()) * pow(ExactInt(p.degree() - 1), p.radius() - 1);
}

ExactInt internal_vertex_count(const DendrimerParams& p) {
    if (p.degree() == 2)
        return ExactInt(2LL * p.radius() - 1);
    // (k(k-1)^(n-1) - 2)/(k-2)
    return exact_div(leaf_count(p) - ExactInt(2), ExactInt(p.degree() - 2));
}

int diameter(const DendrimerParams& p) {
    return 2 * p.radius();
}

}  // namespace dendro
