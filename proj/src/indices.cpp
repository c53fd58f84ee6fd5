#include "dendro/indices.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace dendro {

ExactInt total_distance_from_counts(const std::map<int, ExactInt>& counts) {
    ExactInt sum;
    for (const auto& [length, count] : counts) {
        if (length < 1)
            throw std::domain_error("total_distance_from_counts: length must be >= 1, got " +
                                    std::to_string(length));
        sum += ExactInt(length) * count;
    }
    return sum;
}

ExactInt wiener_closed(const DendrimerParams& p) {
    if (p.degree() == 2)
        throw std::domain_error("wiener_closed: no degree-2 closed form; use wiener_from_counts");
    // [ (k-1)^(2n) (n k^3 - 2(n+1) k^2 + k) + 2 k^2 (k-1)^n - k ] / (k-2)^3.
    // The polynomial factor can be negative (it is -24 at n=1, k=3), so
    // this works on signed integers and converts at the end.
    BigInt n = p.radius();
    BigInt k = p.degree();
    BigInt poly = n * k * k * k - 2 * (n + 1) * k * k + k;
    BigInt numerator =
        boost::multiprecision::pow(k - 1, static_cast<unsigned>(2 * p.radius())) * poly +
        2 * k * k * boost::multiprecision::pow(k - 1, static_cast<unsigned>(p.radius())) - k;
    BigInt cube = (k - 2) * (k - 2) * (k - 2);
    return exact_div(ExactInt(std::move(numerator)), ExactInt(std::move(cube)));
}

ExactInt wiener_from_counts(const DendrimerParams& p) {
    return total_distance_from_counts(path_count_table(p).counts);
}

ExactRatio average_distance(const DendrimerParams& p) {
    return ExactRatio(wiener_from_counts(p), binomial(vertex_count(p), 2));
}

namespace {

void require_sigma_range(const DendrimerParams& p, int sigma, const char* op) {
    if (sigma < 2 || sigma > diameter(p))
        throw std::domain_error(std::string(op) + ": sigma must lie in [2, " +
                                std::to_string(diameter(p)) + "], got " + std::to_string(sigma));
}

}  // namespace

ExactInt sigma_sum(const DendrimerParams& p, int sigma) {
    require_sigma_range(p, sigma, "sigma_sum");
    ExactInt sum;
    for (int length = 1; length <= sigma; ++length)
        sum += path_count_closed(p, length);
    return sum;
}

ExactInt sigma_sum_closed(const DendrimerParams& p, int sigma) {
    require_sigma_range(p, sigma, "sigma_sum_closed");
    if (p.degree() == 2)
        throw std::domain_error("sigma_sum_closed: no degree-2 closed form; use sigma_sum");
    int n = p.radius();
    int k = p.degree();
    int half = sigma / 2;
    // odd lengths 2l+1 <= sigma, then even lengths 2l <= sigma
    int odd_top = (sigma % 2 != 0) ? half : half - 1;
    ExactInt sum;
    for (int l = 0; l <= odd_top; ++l) {
        ExactInt bracket = pow(ExactInt(k - 1), n) - pow(ExactInt(k - 1), l);
        sum += ExactInt(k) * pow(ExactInt(k - 1), l) * exact_div(bracket, ExactInt(k - 2));
    }
    for (int l = 1; l <= half; ++l) {
        ExactInt bracket = ExactInt(k) * pow(ExactInt(k - 1), n - l) - ExactInt(2);
        ExactInt term = ExactInt(k) * pow(ExactInt(k - 1), 2 * l - 1) *
                        exact_div(bracket, ExactInt(k - 2));
        sum += exact_div(term, ExactInt(2));
    }
    return sum;
}

ExactRatio medium_domination(const DendrimerParams& p, int sigma) {
    require_sigma_range(p, sigma, "medium_domination");
    return ExactRatio(sigma_sum(p, sigma), binomial(vertex_count(p), 2));
}

IndexReport build_index_report(const DendrimerParams& p, const std::vector<int>& sigmas) {
    IndexReport report{p,
                       vertex_count(p),
                       edge_count(p),
                       leaf_count(p),
                       path_count_table(p),
                       ExactInt(),
                       ExactRatio(),
                       {}};
    report.wiener = total_distance_from_counts(report.table.counts);
    report.average_distance = ExactRatio(report.wiener, binomial(report.vertices, 2));
    for (int sigma : sigmas)
        report.medium_domination.emplace_back(sigma, medium_domination(p, sigma));
    return report;
}

}  // namespace dendro
