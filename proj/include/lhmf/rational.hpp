#pragma once
// Arbitrary-precision integers/rationals (GMP) plus a small normalized
// 64-bit rational used as a memoization key on the exact evaluation paths.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lhmf/ntheory.hpp"

namespace lhmf {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(i64 num, i64 den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    BigRat r(BigInt((long)num), BigInt((long)den));
    r.canonicalize();
    return r;
}

inline BigRat rat_pow(const BigRat& x, unsigned e) {
    BigRat r(1);
    BigRat b = x;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline BigInt big_from_i128(i128 v) {
    bool neg = v < 0;
    u128 u = neg ? (u128)(-v) : (u128)v;
    BigInt r((unsigned long)(u >> 64));
    r <<= 64;
    r += (unsigned long)(u & ~0ull);
    return neg ? BigInt(-r) : r;
}

// Small exact rational with positive denominator, always reduced.
// Used for evaluation points x and Hecke fan-out arguments, whose
// denominators stay below ~10^5 in every workflow here.
struct Rat64 {
    i64 num = 0;
    i64 den = 1;

    Rat64() = default;
    Rat64(i64 n, i64 d) {
        if (d == 0) throw std::domain_error("Rat64: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i64 g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        num = n;
        den = d;
    }

    friend bool operator==(const Rat64&, const Rat64&) = default;
    friend auto operator<=>(const Rat64&, const Rat64&) = default;

    i64 floor() const { return num >= 0 ? num / den : -((-num + den - 1) / den); }
    Rat64 frac() const { return Rat64(num - floor() * den, den); }  // in [0,1)
    double to_double() const { return (double)num / (double)den; }
    BigRat to_big() const { return make_rat(num, den); }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Rat64 operator+(const Rat64& a, i64 n) { return Rat64(a.num + n * a.den, a.den); }
inline Rat64 operator*(const Rat64& a, i64 n) { return Rat64(a.num * n, a.den); }

// Parse "p/q" or "p".
inline Rat64 parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat64(std::stoll(s), 1);
    return Rat64(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

inline std::string rat_str(const BigRat& v) { return v.get_str(); }

}  // namespace lhmf
