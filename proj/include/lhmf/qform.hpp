#pragma once
// Integral binary quadratic forms [a,b,c], unimodular matrix action, and the
// generalized genus character chi_{D0} on Q_{N,Delta}.
//
// Coefficients are stored as 64-bit integers; every workflow in this project
// keeps |a| <= Delta q^2 / 4 < 2^63 (Delta <= ~2.1e5, denominators <= ~7e4).
// Intermediates that can exceed 64 bits use __int128.

#include <map>
#include <tuple>

#include "lhmf/ntheory.hpp"
#include "lhmf/rational.hpp"

namespace lhmf {

struct QuadForm {
    i64 a = 0, b = 0, c = 0;
    i64 disc() const { return b * b - 4 * a * c; }
    // Q(x, y) for 64-bit x, y (128-bit internally).
    i128 eval(i64 x, i64 y) const {
        return (i128)a * x * x + (i128)b * x * y + (i128)c * y * y;
    }
    friend bool operator==(const QuadForm&, const QuadForm&) = default;
    friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

struct GL2Matrix {
    // [[alpha, beta], [gamma, delta]]
    i64 alpha = 1, beta = 0, gamma = 0, delta = 1;
    i64 det() const { return alpha * delta - beta * gamma; }
    GL2Matrix operator*(const GL2Matrix& o) const {
        return {alpha * o.alpha + beta * o.gamma, alpha * o.beta + beta * o.delta,
                gamma * o.alpha + delta * o.gamma, gamma * o.beta + delta * o.delta};
    }
};

// (Q o M)(x, y) = Q(alpha x + beta y, gamma x + delta y); requires det M = +-1.
inline QuadForm apply_matrix(const QuadForm& Q, const GL2Matrix& M) {
    if (M.det() != 1 && M.det() != -1)
        throw std::domain_error("apply_matrix: matrix not unimodular");
    i128 A = Q.eval(M.alpha, M.gamma);
    i128 C = Q.eval(M.beta, M.delta);
    i128 B = 2 * (i128)Q.a * M.alpha * M.beta + (i128)Q.b * ((i128)M.alpha * M.delta + (i128)M.beta * M.gamma) +
             2 * (i128)Q.c * M.gamma * M.delta;
    return {(i64)A, (i64)B, (i64)C};
}

// Fricke action: [a,b,c] o W_N = [cN, -b, a/N] for N | a.
inline QuadForm apply_fricke(const QuadForm& Q, i64 N) {
    if (Q.a % N != 0) throw std::domain_error("apply_fricke: N does not divide a");
    return {Q.c * N, -Q.b, Q.a / N};
}

// Generalized genus character chi_{D0}(Q) for Q = [a,b,c] in Q_{N,Delta},
// N | a, D0 fundamental (or 1), D0 | Delta up to square factors as in the
// paper: searches splittings D0 = D1 * D2 into fundamental-or-1 discriminants
// and N = N1 * N2 with gcd(D1, N1 * (a/N)) = gcd(D2, N2 * c) = 1; returns
// (D1 / N1*(a/N)) * (D2 / N2*c), or 0 when no splitting exists or
// gcd(a, b, c, D0) > 1.  The value is independent of the splitting chosen.
class GenusCharacter {
  public:
    GenusCharacter(i64 D0, i64 N) : D0_(D0), N_(N) {
        if (!is_fundamental_discriminant(D0))
            throw std::domain_error("genus_char: D0 not fundamental");
        if (N < 1 || !is_squarefree(N))
            throw std::domain_error("genus_char: N must be positive squarefree");
        for (i64 d : divisors(D0 == 1 ? 1 : D0)) {
            for (i64 D1 : {d, -d}) {
                if (D0_ % D1 != 0) continue;
                i64 D2 = D0_ / D1;
                if (!is_fundamental_discriminant(D1) || !is_fundamental_discriminant(D2))
                    continue;
                splittings_.push_back({D1, D2});
            }
        }
        N_splits_ = divisors(N);
    }

    i64 D0() const { return D0_; }
    i64 N() const { return N_; }

    // check_all: evaluate every admissible splitting and verify agreement.
    int operator()(const QuadForm& Q, bool check_all = false) const {
        if (Q.a % N_ != 0) throw std::domain_error("genus_char: N does not divide a");
        i64 g = std::gcd(std::gcd(std::abs(Q.a), std::abs(Q.b)), std::abs(Q.c));
        if (std::gcd(g, std::abs(D0_)) > 1) return 0;
        i64 a0 = Q.a / N_;
        int found = 2;  // sentinel: none yet
        for (auto [D1, D2] : splittings_) {
            for (i64 N1 : N_splits_) {
                i64 N2 = N_ / N1;
                i64 lhs = N1 * a0;
                i64 rhs = N2 * Q.c;
                if (std::gcd(std::abs(D1), std::abs(lhs)) != 1) continue;
                if (std::gcd(std::abs(D2), std::abs(rhs)) != 1) continue;
                int v = kronecker(D1, lhs) * kronecker(D2, rhs);
                if (!check_all) return v;
                if (found == 2)
                    found = v;
                else if (found != v)
                    throw std::logic_error("genus_char: splitting values disagree");
            }
        }
        return found == 2 ? 0 : found;
    }

  private:
    i64 D0_, N_;
    std::vector<std::pair<i64, i64>> splittings_;
    std::vector<i64> N_splits_;
};

// chi depends only on (a, b mod 2a); cache wrapper used by hot loops.
class CachedGenusCharacter {
  public:
    CachedGenusCharacter(i64 D0, i64 N) : chi_(D0, N) {}

    int eval(i64 a, i64 b, i64 c) {
        i64 twoa = 2 * std::abs(a);
        i64 bm = b % twoa;
        if (bm < 0) bm += twoa;
        auto key = std::make_pair(a, bm);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        int v = chi_(QuadForm{a, b, c});
        cache_.emplace(key, v);
        return v;
    }

    const GenusCharacter& base() const { return chi_; }

  private:
    GenusCharacter chi_;
    std::map<std::pair<i64, i64>, int> cache_;
};

}  // namespace lhmf
