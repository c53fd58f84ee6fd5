#include "dendro/path_counts.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace dendro {

namespace {

void require_branching(const DendrimerParams& p, const char* op) {
    if (p.degree() == 2)
        throw std::domain_error(std::string(op) +
                                ": degree-2 trees are plain paths; only the total count "
                                "covers them");
}

void require_positive_length(int length, const char* op) {
    if (length <= 0)
        throw std::domain_error(std::string(op) + ": length must be >= 1, got " +
                                std::to_string(length));
}

}  // namespace

ExactInt PathLengthTable::total() const {
    ExactInt sum;
    for (const auto& [length, count] : counts)
        sum += count;
    return sum;
}

ExactInt n1_leaf_paths(const DendrimerParams& p, int length) {
    require_positive_length(length, "n1_leaf_paths");
    require_branching(p, "n1_leaf_paths");
    int n = p.radius();
    int k = p.degree();
    if (length >= 2 * n)
        return 0;
    int exponent = (length % 2 == 0) ? n + length / 2 - 2 : n + (length - 1) / 2 - 1;
    return ExactInt(k) * pow(ExactInt(k - 1), exponent);
}

ExactInt n2_leaf_paths(const DendrimerParams& p, int length) {
    require_positive_length(length, "n2_leaf_paths");
    require_branching(p, "n2_leaf_paths");
    int n = p.radius();
    int k = p.degree();
    if (length % 2 != 0 || length > 2 * n)
        return 0;
    if (length == 2 * n)
        return pow(ExactInt(k - 1), length - 2) * binomial(ExactInt(k), 2);
    return ExactInt(k) * pow(ExactInt(k - 1), n + length / 2 - 3) * binomial(ExactInt(k - 1), 2);
}

ExactInt path_count_closed(const DendrimerParams& p, int length) {
    require_positive_length(length, "path_count_closed");
    int n = p.radius();
    int k = p.degree();
    if (length > 2 * n)
        return 0;
    if (k == 2)
        return ExactInt(2LL * n + 1 - length);  // path graph: one pair per offset
    if (length % 2 == 0) {
        // k(k-1)^(length-1)/2 * [k(k-1)^(n - length/2) - 2]/(k-2)
        ExactInt bracket = ExactInt(k) * pow(ExactInt(k - 1), n - length / 2) - ExactInt(2);
        ExactInt numerator = ExactInt(k) * pow(ExactInt(k - 1), length - 1) * bracket;
        return exact_div(numerator, ExactInt(2LL * (k - 2)));
    }
    // k(k-1)^((length-1)/2) * [(k-1)^n - (k-1)^((length-1)/2)]/(k-2)
    int half = (length - 1) / 2;
    ExactInt bracket = pow(ExactInt(k - 1), n) - pow(ExactInt(k - 1), half);
    return exact_div(ExactInt(k) * pow(ExactInt(k - 1), half) * bracket, ExactInt(k - 2));
}

namespace {

// Grows the tree level by level, extending each shorter path by one edge
// at each end.  Lengths 1 and 2 need their own growth rules: no
// positive-length path inside the smaller tree can stand in for a brand
// new pendant edge (length 1) or for a cherry whose midpoint is the
// parent of two new leaves (length 2, where both extension ends attach to
// the same vertex, so the multiplier is a choice of 2 among k-1 slots).
class RecursiveCounter {
public:
    explicit RecursiveCounter(int degree) : degree_(degree) {}

    ExactInt count(int radius, int length) {
        if (length > 2 * radius)
            return 0;
        auto key = std::pair(radius, length);
        if (auto hit = memo_.find(key); hit != memo_.end())
            return hit->second;
        ExactInt value = compute(radius, length);
        memo_.emplace(key, value);
        return value;
    }

private:
    ExactInt compute(int radius, int length) {
        int k = degree_;
        if (radius == 1)
            return length == 1 ? ExactInt(k) : binomial(ExactInt(k), 2);
        DendrimerParams smaller(radius - 1, k);
        ExactInt grow(k - 1);
        if (length == 1)
            return count(radius - 1, 1) + grow * leaf_count(smaller);
        if (length == 2)
            return count(radius - 1, 2) + grow * n1_leaf_paths(smaller, 1) +
                   binomial(ExactInt(k - 1), 2) * leaf_count(smaller);
        if (length % 2 == 0)
            return grow * n1_leaf_paths(smaller, length - 1) +
                   grow * grow * n2_leaf_paths(smaller, length - 2) + count(radius - 1, length);
        return grow * n1_leaf_paths(smaller, length - 1) +
               ExactInt(2) * grow * n2_leaf_paths(smaller, length - 1) + count(radius - 1, length);
    }

    int degree_;
    std::map<std::pair<int, int>, ExactInt> memo_;
};

}  // namespace

ExactInt path_count_recursive(const DendrimerParams& p, int length) {
    require_positive_length(length, "path_count_recursive");
    require_branching(p, "path_count_recursive");
    return RecursiveCounter(p.degree()).count(p.radius(), length);
}

PathLengthTable path_count_table(const DendrimerParams& p) {
    PathLengthTable table{p, {}};
    for (int length = 1; length <= diameter(p); ++length)
        table.counts[length] = path_count_closed(p, length);
    return table;
}

IdentityReport identity_check(const DendrimerParams& p) {
    IdentityReport report{binomial(vertex_count(p), 2), path_count_table(p).total(), false};
    report.holds = report.vertex_pairs == report.path_total;
    return report;
}

}  // namespace dendro
