#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace dendro {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision integer restricted to values >= 0.  Everything this
// library computes is a count, so a negative value always means a caller
// bug; construction and subtraction reject it loudly instead of wrapping
// or truncating.
class ExactInt {
public:
    ExactInt() = default;

    ExactInt(long long value) : value_(value) {
        if (value < 0)
            throw std::domain_error("ExactInt: negative value " + std::to_string(value));
    }

    // For results of signed intermediate arithmetic (see wiener_closed).
    explicit ExactInt(BigInt value) : value_(std::move(value)) {
        if (value_.sign() < 0)
            throw std::domain_error("ExactInt: negative value " + value_.str());
    }

    // Strict base-10 parse: digits only, no sign, no whitespace.
    static ExactInt from_decimal(const std::string& text);

    const BigInt& raw() const { return value_; }
    std::string str() const { return value_.str(); }
    bool is_zero() const { return value_.is_zero(); }

    ExactInt& operator+=(const ExactInt& rhs) {
        value_ += rhs.value_;
        return *this;
    }
    ExactInt& operator*=(const ExactInt& rhs) {
        value_ *= rhs.value_;
        return *this;
    }
    ExactInt& operator-=(const ExactInt& rhs) {
        if (value_ < rhs.value_)
            throw std::domain_error("ExactInt: subtraction underflow, " + str() + " - " + rhs.str());
        value_ -= rhs.value_;
        return *this;
    }

    friend ExactInt operator+(ExactInt lhs, const ExactInt& rhs) { return lhs += rhs; }
    friend ExactInt operator*(ExactInt lhs, const ExactInt& rhs) { return lhs *= rhs; }
    friend ExactInt operator-(ExactInt lhs, const ExactInt& rhs) { return lhs -= rhs; }

    friend bool operator==(const ExactInt& a, const ExactInt& b) { return a.value_ == b.value_; }
    friend bool operator!=(const ExactInt& a, const ExactInt& b) { return a.value_ != b.value_; }
    friend bool operator<(const ExactInt& a, const ExactInt& b) { return a.value_ < b.value_; }
    friend bool operator<=(const ExactInt& a, const ExactInt& b) { return a.value_ <= b.value_; }
    friend bool operator>(const ExactInt& a, const ExactInt& b) { return a.value_ > b.value_; }
    friend bool operator>=(const ExactInt& a, const ExactInt& b) { return a.value_ >= b.value_; }

private:
    BigInt value_;
};

inline std::ostream& operator<<(std::ostream& os, const ExactInt& value) {
    return os << value.str();
}

ExactInt pow(const ExactInt& base, int exponent);
ExactInt gcd(const ExactInt& a, const ExactInt& b);

// C(n, r); 0 when n < r.
ExactInt binomial(const ExactInt& n, int r);

// first + first*ratio + ... + first*ratio^(terms-1).  The ratio must be at
// least 2 so the closed form first*(ratio^terms - 1)/(ratio - 1) divides
// exactly; no caller here ever needs ratio 0 or 1.
ExactInt geometric_sum(const ExactInt& first, const ExactInt& ratio, int terms);

// Division that insists on a zero remainder.  Every division in this
// library is exact by construction, so a remainder means a transcription
// bug in a formula and must not be silently truncated.
ExactInt exact_div(const ExactInt& dividend, const ExactInt& divisor);

// Fraction of nonnegative integers kept in lowest terms; the denominator
// is always strictly positive.  Equality is value equality: 6/4 == 3/2.
class ExactRatio {
public:
    ExactRatio() : num_(0), den_(1) {}
    explicit ExactRatio(ExactInt whole) : num_(std::move(whole)), den_(1) {}
    ExactRatio(ExactInt numerator, ExactInt denominator);

    const ExactInt& num() const { return num_; }
    const ExactInt& den() const { return den_; }
    std::string str() const { return num_.str() + "/" + den_.str(); }
    bool is_integer() const { return den_ == ExactInt(1); }

    friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ExactRatio& a, const ExactRatio& b) { return !(a == b); }
    friend bool operator<(const ExactRatio& a, const ExactRatio& b) {
        return a.num_.raw() * b.den_.raw() < b.num_.raw() * a.den_.raw();
    }
    friend bool operator<=(const ExactRatio& a, const ExactRatio& b) { return !(b < a); }
    friend bool operator>(const ExactRatio& a, const ExactRatio& b) { return b < a; }
    friend bool operator>=(const ExactRatio& a, const ExactRatio& b) { return !(a < b); }

    friend ExactRatio operator+(const ExactRatio& a, const ExactRatio& b);
    friend ExactRatio operator*(const ExactRatio& a, const ExactRatio& b);
    friend ExactRatio operator*(const ExactRatio& a, const ExactInt& b);

private:
    ExactInt num_;
    ExactInt den_;
};

inline std::ostream& operator<<(std::ostream& os, const ExactRatio& value) {
    return os << value.str();
}

}  // namespace dendro
