#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace diagdensity {

// Exact nonnegative rational, kept reduced.  Densities are stored this way so
// dominance tests can be done in integer arithmetic; doubles only appear at
// reporting time.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    Rational() = default;
    Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) { reduce(); }

    void reduce()
    {
        if (den == 0) return;
        std::uint64_t g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num == b.num && a.den == b.den;
    }

    // a/b <= c/d without overflow for desk-scale operands (num, den < 2^63).
    friend bool operator<=(const Rational& a, const Rational& b)
    {
        return static_cast<unsigned __int128>(a.num) * b.den <=
               static_cast<unsigned __int128>(b.num) * a.den;
    }

    friend Rational operator*(const Rational& a, const Rational& b)
    {
        // cross-reduce first so desk-scale products stay in 64 bits
        std::uint64_t g1 = std::gcd(a.num, b.den);
        std::uint64_t g2 = std::gcd(b.num, a.den);
        return Rational((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
    }
};

} // namespace diagdensity
