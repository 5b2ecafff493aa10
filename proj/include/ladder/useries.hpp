#pragma once
// Truncated univariate power series in u = v/E with exact rational
// coefficients. All arithmetic truncates at order_cap; index k holds the
// coefficient of u^k.

#include "ladder/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ladder {

inline constexpr int default_order_cap = 12;

class useries {
public:
    explicit useries(int order_cap = default_order_cap) {
        if (order_cap < 0) throw std::invalid_argument("useries: negative order cap");
        c_.resize(static_cast<size_t>(order_cap) + 1);
    }

    int cap() const { return static_cast<int>(c_.size()) - 1; }

    const rational& operator[](int k) const { return c_.at(static_cast<size_t>(k)); }
    rational& operator[](int k) { return c_.at(static_cast<size_t>(k)); }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    // Lowest nonzero term, or nullopt if identically zero to the cap.
    std::optional<std::pair<int, rational>> leading() const {
        for (int k = 0; k <= cap(); ++k)
            if (!c_[static_cast<size_t>(k)].is_zero()) return std::make_pair(k, c_[static_cast<size_t>(k)]);
        return std::nullopt;
    }

    friend useries operator+(const useries& a, const useries& b) {
        check_caps(a, b);
        useries r(a.cap());
        for (int k = 0; k <= a.cap(); ++k) r[k] = a[k] + b[k];
        return r;
    }
    friend useries operator-(const useries& a, const useries& b) {
        check_caps(a, b);
        useries r(a.cap());
        for (int k = 0; k <= a.cap(); ++k) r[k] = a[k] - b[k];
        return r;
    }
    friend useries operator*(const useries& a, const useries& b) {
        check_caps(a, b);
        useries r(a.cap());
        for (int i = 0; i <= a.cap(); ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; i + j <= a.cap(); ++j) {
                if (b[j].is_zero()) continue;
                r[i + j] += a[i] * b[j];
            }
        }
        return r;
    }

    friend bool operator==(const useries& a, const useries& b) {
        if (a.cap() != b.cap()) return false;
        for (int k = 0; k <= a.cap(); ++k)
            if (a[k] != b[k]) return false;
        return true;
    }
    friend bool operator!=(const useries& a, const useries& b) { return !(a == b); }

    double eval(double u) const {  // Horner, binary64
        double acc = 0.0;
        for (int k = cap(); k >= 0; --k) acc = acc * u + c_[static_cast<size_t>(k)].to_double();
        return acc;
    }

private:
    static void check_caps(const useries& a, const useries& b) {
        if (a.cap() != b.cap())
            throw std::invalid_argument("useries: mismatched order caps");
    }

    std::vector<rational> c_;
};

inline useries series_mul(const useries& a, const useries& b) { return a * b; }

inline double series_eval(const useries& s, double u) { return s.eval(u); }

// Negate odd-order coefficients; eval(s, -u) == eval(flip_odd(s), u).
inline useries flip_odd(const useries& s) {
    useries r(s.cap());
    for (int k = 0; k <= s.cap(); ++k) r[k] = (k % 2 == 0) ? s[k] : -s[k];
    return r;
}

}  // namespace ladder
