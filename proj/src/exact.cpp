#include "dendro/exact.hpp"

namespace dendro {

ExactInt ExactInt::from_decimal(const std::string& text) {
    if (text.empty())
        throw std::runtime_error("ExactInt: empty decimal string");
    for (char c : text)
        if (c < '0' || c > '9')
            throw std::runtime_error("ExactInt: malformed decimal string \"" + text + "\"");
    return ExactInt(BigInt(text));
}

ExactInt pow(const ExactInt& base, int exponent) {
    if (exponent < 0)
        throw std::domain_error("pow: negative exponent " + std::to_string(exponent));
    return ExactInt(boost::multiprecision::pow(base.raw(), static_cast<unsigned>(exponent)));
}

ExactInt gcd(const ExactInt& a, const ExactInt& b) {
    return ExactInt(boost::multiprecision::gcd(a.raw(), b.raw()));
}

ExactInt binomial(const ExactInt& n, int r) {
    if (r < 0)
        throw std::domain_error("binomial: negative r " + std::to_string(r));
    if (n.raw() < r)
        return 0;
    BigInt result = 1;
    for (int i = 1; i <= r; ++i) {
        result *= n.raw() - (r - i);
        result /= i;  // exact: the partial product is C(n - r + i, i)
    }
    return ExactInt(std::move(result));
}

ExactInt geometric_sum(const ExactInt& first, const ExactInt& ratio, int terms) {
    if (ratio.raw() <= 1)
        throw std::domain_error("geometric_sum: ratio must be >= 2, got " + ratio.str());
    if (terms < 0)
        throw std::domain_error("geometric_sum: negative term count " + std::to_string(terms));
    if (terms == 0)
        return 0;
    return exact_div(first * (pow(ratio, terms) - ExactInt(1)), ratio - ExactInt(1));
}

ExactInt exact_div(const ExactInt& dividend, const ExactInt& divisor) {
    if (divisor.is_zero())
        throw std::domain_error("exact_div: division by zero");
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(dividend.raw(), divisor.raw(), quotient, remainder);
    if (!remainder.is_zero())
        throw std::domain_error("exact_div: " + dividend.str() + " is not divisible by " +
                                divisor.str());
    return ExactInt(std::move(quotient));
}

ExactRatio::ExactRatio(ExactInt numerator, ExactInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero())
        throw std::domain_error("ExactRatio: zero denominator");
    ExactInt common = gcd(num_, den_);
    if (common != ExactInt(1)) {
        num_ = exact_div(num_, common);
        den_ = exact_div(den_, common);
    }
}

ExactRatio operator+(const ExactRatio& a, const ExactRatio& b) {
    return ExactRatio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ExactRatio operator*(const ExactRatio& a, const ExactRatio& b) {
    return ExactRatio(a.num_ * b.num_, a.den_ * b.den_);
}

ExactRatio operator*(const ExactRatio& a, const ExactInt& b) {
    return ExactRatio(a.num_ * b, a.den_);
}

}  // namespace dendro
