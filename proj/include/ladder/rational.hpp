#pragma once
// Arbitrary-precision rational arithmetic in canonical form: denominator > 0,
// gcd(|num|, den) = 1, zero uniquely 0/1. Integers are boost cpp_int, so
// factorial denominators and long products of energy denominators never
// overflow.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace ladder {

using bigint = boost::multiprecision::cpp_int;

class rational {
public:
    rational() : num_(0), den_(1) {}
    rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
    rational(bigint num, bigint den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
        normalize();
    }

    const bigint& num() const { return num_; }
    const bigint& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    rational operator-() const {
        rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend rational operator+(const rational& a, const rational& b) {
        return rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational operator-(const rational& a, const rational& b) {
        return rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational operator*(const rational& a, const rational& b) {
        return rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend rational operator/(const rational& a, const rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("rational: division by zero");
        return rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    rational& operator+=(const rational& o) { return *this = *this + o; }
    rational& operator-=(const rational& o) { return *this = *this - o; }
    rational& operator*=(const rational& o) { return *this = *this * o; }
    rational& operator/=(const rational& o) { return *this = *this / o; }

    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;  // canonical form
    }
    friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
    friend bool operator<(const rational& a, const rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

    // Serialized form is always "p/q", e.g. "-2/3", "0/1".
    std::string to_string() const {
        return num_.str() + "/" + den_.str();
    }

    static rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return rational(bigint(s), 1);
        return rational(bigint(s.substr(0, slash)), bigint(s.substr(slash + 1)));
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        bigint g = boost::multiprecision::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    bigint num_;
    bigint den_;
};

// Shorthand constructor: reduced fraction, sign carried by the numerator.
inline rational rat(long long num, long long den) {
    return rational(bigint(num), bigint(den));
}

inline rational factorial_reciprocal(int k) {  // g_k = 1/k!
    bigint f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return rational(1, f);
}

}  // namespace ladder
