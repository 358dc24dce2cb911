#pragma once
// Bernoulli numbers/polynomials, generalized Bernoulli numbers attached to
// Kronecker characters, Dirichlet L-values at non-positive integers (exact)
// and at positive integers (floating, via Hurwitz zeta / Euler-Maclaurin).

#include <cmath>
#include <mutex>
#include <vector>

#include "lhmf/ntheory.hpp"
#include "lhmf/rational.hpp"

namespace lhmf {

// B_0..B_n with the convention B_1 = -1/2, via the standard recurrence
// sum_{j=0}^{n} C(n+1,j) B_j = 0.
inline const std::vector<BigRat>& bernoulli_numbers(unsigned n) {
    static std::vector<BigRat> cache{BigRat(1)};
    while (cache.size() <= n) {
        unsigned m = (unsigned)cache.size();  // computing B_m
        BigRat s(0);
        BigInt binom(1);  // C(m+1, j)
        for (unsigned j = 0; j < m; ++j) {
            if (j > 0) {
                binom *= (m + 2 - j);
                binom /= j;
            } else {
                binom = 1;
            }
            s += BigRat(binom) * cache[j];
        }
        BigInt mp1(m + 1);
        cache.push_back(-s / BigRat(mp1));
    }
    return cache;
}

inline BigRat bernoulli_number(unsigned n) { return bernoulli_numbers(n)[n]; }

// B_n(x) = sum_{j=0}^n C(n,j) B_j x^(n-j)
inline BigRat bernoulli_poly(unsigned n, const BigRat& x) {
    const auto& B = bernoulli_numbers(n);
    BigRat r(0);
    BigInt binom(1);
    // Horner in x over j descending would need reversed coeffs; do direct.
    BigRat xp(1);
    std::vector<BigRat> xpow(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        xpow[i] = xp;
        xp *= x;
    }
    for (unsigned j = 0; j <= n; ++j) {
        if (j > 0) {
            binom *= (n - j + 1);
            binom /= j;
        }
        r += BigRat(binom) * B[j] * xpow[n - j];
    }
    return r;
}

// Generalized Bernoulli number B_{k,chi_t} for the Kronecker character
// chi_t = (t/.), conductor f = |t|:  B_{k,chi} = f^{k-1} sum_{a=1}^{f} chi(a) B_k(a/f).
inline BigRat generalized_bernoulli(unsigned k, i64 t) {
    i64 f = t < 0 ? -t : t;
    BigRat s(0);
    for (i64 a = 1; a <= f; ++a) {
        int chi = kronecker(t, a);
        if (chi) s += chi * bernoulli_poly(k, make_rat(a, f));
    }
    BigRat fk(1);
    for (unsigned i = 0; i + 1 < k; ++i) fk *= (long)f;
    return fk * s;
}

// Exact L_ell(1-k, chi_t) = L(1-k, chi_t) * prod_{p | ell} (1 - chi_t(p) p^{k-1}),
// with L(1-k, chi) = -B_{k,chi}/k. t fundamental (or 1), ell squarefree, k >= 1.
inline BigRat dirichlet_L_nonpositive(unsigned k, i64 t, i64 ell = 1) {
    if (k == 0) throw std::domain_error("dirichlet_L_nonpositive: k = 0");
    BigRat L = -generalized_bernoulli(k, t) / BigRat((long)k);
    for (auto [p, e] : factorize(ell)) {
        BigRat pk(1);
        for (unsigned i = 0; i + 1 < k; ++i) pk *= (long)p;
        L *= (BigRat(1) - BigRat((long)kronecker(t, p)) * pk);
    }
    return L;
}

// Hurwitz zeta(s, x) for integer s >= 2, 0 < x <= 1, by Euler-Maclaurin.
inline double hurwitz_zeta(int s, double x) {
    const int M = 24;       // direct terms
    const int B_terms = 8;  // correction terms
    double sum = 0;
    for (int n = 0; n < M; ++n) sum += std::pow(x + n, -s);
    double a = x + M;
    sum += std::pow(a, 1 - s) / (s - 1);
    sum += 0.5 * std::pow(a, -s);
    // sum_{j>=1} B_{2j}/(2j)! * (s)_{2j-1} * a^(-s-2j+1)
    double poch = s;  // (s)_1
    double apow = std::pow(a, -s - 1);
    static const double B2j[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30,
                                 5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510};
    double fact = 2;  // (2j)!
    for (int j = 1; j <= B_terms; ++j) {
        sum += B2j[j - 1] / fact * poch * apow;
        // advance to j+1
        poch *= (double)(s + 2 * j - 1) * (s + 2 * j);
        apow /= a * a;
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    return sum;
}

// Floating L_ell(k, chi_t) for integer k >= 2, chi_t = (t/.), via
// L(k, chi) = q^-k sum_{a=1}^{q} chi(a) zeta(k, a/q), q = |t|,
// then removal of the Euler factors at p | ell.
inline double dirichlet_L_positive(int k, i64 t, i64 ell = 1) {
    if (k < 2) throw std::domain_error("dirichlet_L_positive: k < 2");
    i64 q = t < 0 ? -t : t;
    double L = 0;
    for (i64 a = 1; a <= q; ++a) {
        int chi = kronecker(t, a);
        if (chi) L += chi * hurwitz_zeta(k, (double)a / (double)q);
    }
    L *= std::pow((double)q, -k);
    for (auto [p, e] : factorize(ell))
        L *= 1.0 - kronecker(t, p) * std::pow((double)p, -k);
    return L;
}

// Direct-series evaluation of L_ell(k, chi_t), for cross-checks.
// Tail bound: sum_{n > X} n^-k <= X^(1-k)/(k-1).
inline double dirichlet_L_series(int k, i64 t, i64 ell = 1, i64 X = 2000000) {
    double L = 0;
    for (i64 n = X; n >= 1; --n) {
        if (ell > 1 && std::gcd(n, ell) != 1) continue;
        int chi = kronecker(t, n);
        if (chi) L += chi * std::pow((double)n, -k);
    }
    return L;
}

// Exact zeta(2k) / pi^(2k) = (-1)^(k+1) B_2k 2^(2k-1) / (2k)!.
inline BigRat zeta_even_over_pi_pow(unsigned k) {
    BigRat b = bernoulli_number(2 * k);
    BigInt fact(1);
    for (unsigned i = 2; i <= 2 * k; ++i) fact *= i;
    BigRat r = b * rat_pow(BigRat(2), 2 * k - 1) / BigRat(fact);
    if (k % 2 == 0) r = -r;
    return r;
}

}  // namespace lhmf
