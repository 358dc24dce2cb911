#pragma once
// Pei-Wang generalized Hurwitz class numbers H(k,1,ell,N;n), the sigma
// variants they are built from, and the closed form of c_infty, which
// cross-validates the series path of local_poly.hpp.
//
// For the closed form, H is needed at the non-positive index k' = 1-k, where
// the L-factor L_ell(1-k', chi_t) = L_ell(k, chi_t) is a convergent series
// (floating); everything else stays rational until the final combination.
// At k' = 1-k <= 0 the case condition is read as t m^2 = n directly.

#include <cmath>
#include <numbers>

#include "lhmf/bernoulli.hpp"
#include "lhmf/local_poly.hpp"
#include "lhmf/ntheory.hpp"
#include "lhmf/rational.hpp"

namespace lhmf {

struct DiscriminantDecomposition {
    bool exists = false;
    i64 t = 0;  // fundamental discriminant or 1
    i64 m = 0;  // positive, t * m^2 reconstructs the input
};

// Decompose v = t * m^2 with t fundamental-or-1 and m maximal, if possible.
inline DiscriminantDecomposition decompose_tm2(i64 v) {
    if (v == 0) return {};
    i64 fmax = 1;
    for (auto [p, e] : factorize(v < 0 ? -v : v))
        for (int i = 0; i < e / 2; ++i) fmax *= p;
    std::vector<i64> gs = divisors(fmax);
    for (auto it = gs.rbegin(); it != gs.rend(); ++it) {
        i64 g = *it;
        if (v % (g * g)) continue;
        i64 t = v / (g * g);
        if (t == 1 || is_fundamental_discriminant(t)) return {true, t, g};
    }
    return {};
}

// (-1)^k n = t m^2 with t fundamental; for k <= 0 the convention is n = t m^2.
inline DiscriminantDecomposition fundamental_decomposition(int k, i64 n) {
    if (n < 0) throw std::domain_error("fundamental_decomposition: n >= 0 required");
    if (n == 0) return {};
    i64 v = (k >= 1 && k % 2 == 1) ? -n : n;
    return decompose_tm2(v);
}

// sigma_{ell,s}(n) = sum over r | n with gcd(ell, r) = 1 of r^s (s may be < 0).
inline BigRat sigma_ell(i64 ell, int s, i64 n) {
    if (n < 1) throw std::domain_error("sigma_ell: n >= 1 required");
    BigRat total(0);
    for (i64 r : divisors(n)) {
        if (std::gcd(ell, r) != 1) continue;
        BigRat rp = rat_pow(BigRat((long)r), s < 0 ? -s : s);
        total += s < 0 ? BigRat(1) / rp : rp;
    }
    return total;
}

// sigma_{ell,N,s}(n): additionally gcd(n/r, N/ell) = 1.
inline BigRat sigma_ell_N(i64 ell, i64 N, int s, i64 n) {
    if (n < 1) throw std::domain_error("sigma_ell_N: n >= 1 required");
    if (N % ell) throw std::domain_error("sigma_ell_N: ell | N required");
    BigRat total(0);
    for (i64 r : divisors(n)) {
        if (std::gcd(ell, r) != 1) continue;
        if (std::gcd(n / r, N / ell) != 1) continue;
        BigRat rp = rat_pow(BigRat((long)r), s < 0 ? -s : s);
        total += s < 0 ? BigRat(1) / rp : rp;
    }
    return total;
}

// The divisor-sum factor shared by both branches:
// sum_{a | m, gcd(a, N) = 1} mu(a) chi_t(a) a^(k-1) sigma(m/a).
template <class Sigma>
inline BigRat hurwitz_divisor_sum(int k, i64 N, i64 t, i64 m, Sigma&& sigma) {
    BigRat s(0);
    for (i64 a : divisors(m)) {
        if (std::gcd(a, N) != 1) continue;
        int mu = mobius(a);
        if (!mu) continue;
        int chi = kronecker(t, a);
        if (!chi) continue;
        int e = k - 1;
        BigRat ap = rat_pow(BigRat((long)a), e < 0 ? -e : e);
        if (e < 0) ap = BigRat(1) / ap;
        s += BigRat(mu * chi) * ap * sigma(m / a);
    }
    return s;
}

// H(k,1,ell,N;n), floating. Exact-rational L-values (k >= 1) are converted at
// the end; for k <= 0 the L-factor is the convergent series L_ell(1-k, chi_t).
inline double hurwitz_H(int k, i64 ell, i64 N, i64 n) {
    if (N % ell) throw std::domain_error("hurwitz_H: ell | N required");
    if (n < 0) throw std::domain_error("hurwitz_H: n >= 0 required");
    if (n == 0) {
        if (ell != N) return 0.0;
        // L_N(1-2k, id)
        if (k >= 1) return dirichlet_L_nonpositive(2 * k, 1, N).get_d();
        return dirichlet_L_positive(1 - 2 * k, 1, N);
    }
    DiscriminantDecomposition d = fundamental_decomposition(k, n);
    if (!d.exists) return 0.0;
    double Lval = (k >= 1) ? dirichlet_L_nonpositive(k, d.t, ell).get_d()
                           : dirichlet_L_positive(1 - k, d.t, ell);
    if (ell == N) {
        BigRat ds = hurwitz_divisor_sum(k, N, d.t, d.m,
                                        [&](i64 x) { return sigma_ell(N, 2 * k - 1, x); });
        return Lval * ds.get_d();
    }
    // ell != N branch: extra Euler-type product over p | N/ell
    double prod = 1.0;
    for (auto [p, e] : factorize(N / ell)) {
        double pk = std::pow((double)p, -k);
        double p2k = std::pow((double)p, -2 * k);
        prod *= (1.0 - kronecker(d.t, p) * pk) / (1.0 - p2k);
    }
    BigRat ds = hurwitz_divisor_sum(k, N, d.t, d.m,
                                    [&](i64 x) { return sigma_ell_N(ell, N, 1, x); });
    return Lval * prod * ds.get_d();
}

// Closed form of c_infty: solves
//   (2k-1)/(D D0)^(k-1/2) c_infty
//     = pi 2^(2-2k) / zeta(2k) * sum_{ell | N} mu(ell)
//       (prod_{p | ell} (1 - p^-2k)^-1) H(1-k,1,ell,ell;D) H(1-k,1,ell,ell;D0),
// with zeta(2k) exact via Bernoulli numbers. Returns the same {value, bare}
// pair as the series path (tail_bound is 0: the formula is not truncated).
inline CInftyResult c_infty_closed(const LocalPolyParams& params) {
    params.validate();
    const int k = params.k;
    const double pi = std::numbers::pi;
    double S = 0;
    for (i64 ell : divisors(params.N)) {
        int mu = mobius(ell);
        if (!mu) continue;
        double euler = 1.0;
        for (auto [p, e] : factorize(ell)) euler /= 1.0 - std::pow((double)p, -2 * k);
        S += mu * euler * hurwitz_H(1 - k, ell, ell, std::abs(params.D)) *
             hurwitz_H(1 - k, ell, ell, std::abs(params.D0));
    }
    double zeta2k = zeta_even_over_pi_pow(k).get_d() * std::pow(pi, 2 * k);
    CInftyResult r;
    r.bare = pi * std::pow(2.0, 2 - 2 * k) * S / zeta2k;
    r.value = std::pow((double)params.Delta(), k - 0.5) / (double)(2 * k - 1) * r.bare;
    r.tail_bound = 0;
    r.a_max = 0;
    return r;
}

// Lemma 7.1 indicator: sum_{ell | N} mu(ell) chi_ell(a)^2 = [N | a], with
// chi_ell the principal character mod ell (chi^2 = the gcd-coprimality
// indicator).
inline int mobius_indicator(i64 N, i64 a) {
    int s = 0;
    for (i64 ell : divisors(N)) {
        int mu = mobius(ell);
        if (!mu) continue;
        if (std::gcd(ell, a) == 1) s += mu;
    }
    return s;
}

}  // namespace lhmf
