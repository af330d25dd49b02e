#pragma once
// Small exact-arithmetic helpers shared by every module: floor division on
// signed integers, integer square roots, and a minimal reduced fraction type.
// All quantities in this project are desk-scale, so 64-bit is plenty.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hcgap {

using Int = long long;

// Floor division (rounds toward -infinity).  Requires b > 0.
constexpr Int floor_div(Int a, Int b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

constexpr Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

// Exact integer square root of v >= 0.
inline Int isqrt(Int v) {
    if (v < 0) throw std::domain_error("isqrt: negative argument");
    if (v == 0) return 0;
    Int r = static_cast<Int>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

inline bool is_square(Int v) {
    if (v < 0) return false;
    Int r = isqrt(v);
    return r * r == v;
}

// Reduced fraction with positive denominator.  Only the handful of operations
// the bound functions need.
struct Rational {
    Int num = 0;
    Int den = 1;

    Rational() = default;
    Rational(Int n) : num(n), den(1) {}
    Rational(Int n, Int d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        Int g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_integer() const { return den == 1; }
    Int floor() const { return floor_div(num, den); }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(Int k, Rational a) { return Rational(k * a.num, a.den); }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace hcgap
