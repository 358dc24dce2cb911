#pragma once
// Multiplicative number theory on 64-bit integers: Kronecker symbol,
// factorization (trial division + deterministic Miller-Rabin), divisors,
// Moebius, fundamental discriminants, and square roots modulo 4a.
//
// Everything here is exact integer arithmetic; __int128 is used for
// intermediates that can exceed 64 bits.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>
#include <algorithm>

namespace lhmf {

using i64 = long long;
using u64 = unsigned long long;
using i128 = __int128;
using u128 = unsigned __int128;

// ---------------------------------------------------------------- kronecker

// Extended Kronecker symbol (a/n), defined for all integer pairs.
inline int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (((a & 1) == 0) && ((n & 1) == 0)) return 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // pull out factors of 2 from n: (a/2) = (2/a) = (-1)^((a^2-1)/8)
    int v = 0;
    while ((n & 1) == 0) { n >>= 1; ++v; }
    if (v & 1) {
        i64 am = ((a % 8) + 8) % 8;
        if (am == 3 || am == 5) result = -result;
    }
    a %= n; if (a < 0) a += n;
    // now n odd positive, 0 <= a < n: Jacobi with reciprocity
    while (a != 0) {
        v = 0;
        while ((a & 1) == 0) { a >>= 1; ++v; }
        if (v & 1) {
            i64 nm = n % 8;
            if (nm == 3 || nm == 5) result = -result;
        }
        if ((a % 4 == 3) && (n % 4 == 3)) result = -result;
        i64 t = n % a; n = a; a = t;
    }
    return (n == 1) ? result : 0;
}

// ------------------------------------------------------------- primality

inline u64 mulmod_u64(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

inline u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for all n < 3.3e24 (well past our range).
inline bool is_prime(i64 sn) {
    if (sn < 2) return false;
    u64 n = (u64)sn;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// --------------------------------------------------------- factorization

struct PrimePower {
    i64 p;
    int e;
};
using Factorization = std::vector<PrimePower>;  // primes strictly increasing

// Complete factorization of |n| by trial division, with a Miller-Rabin
// check to stop early once the cofactor is prime. n != 0 required.
inline Factorization factorize(i64 n) {
    if (n == 0) throw std::domain_error("factorize: n = 0");
    n = std::abs(n);
    Factorization f;
    auto push = [&](i64 p) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) f.push_back({p, e});
    };
    push(2);
    push(3);
    for (i64 p = 5; p * p <= n; p += 6) {
        if (n > 1 && is_prime(n)) break;
        push(p);
        push(p + 2);
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

inline std::vector<i64> divisors(i64 n) {
    if (n == 0) throw std::domain_error("divisors: n = 0");
    std::vector<i64> ds{1};
    for (auto [p, e] : factorize(n)) {
        size_t sz = ds.size();
        i64 pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline bool is_squarefree(i64 n) {
    if (n == 0) return false;
    for (auto [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

inline int mobius(i64 n) {
    if (n <= 0) throw std::domain_error("mobius: n <= 0");
    int m = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        m = -m;
    }
    return m;
}

// d is a fundamental discriminant (d=1 counts as the trivial one).
inline bool is_fundamental_discriminant(i64 d) {
    if (d == 1) return true;
    if (d == 0) return false;
    i64 m = ((d % 4) + 4) % 4;
    if (m == 1) return is_squarefree(d);
    if (m == 0) {
        i64 q = d / 4;
        i64 qm = ((q % 4) + 4) % 4;
        if (qm == 2 || qm == 3) return is_squarefree(q);
    }
    return false;
}

// ------------------------------------------------- square roots mod m

// Tonelli-Shanks: x with x^2 = a (mod p), p odd prime, (a/p) = 1.
inline i64 sqrt_mod_prime(i64 a, i64 p) {
    a %= p; if (a < 0) a += p;
    if (a == 0) return 0;
    if (p % 4 == 3) return (i64)powmod_u64((u64)a, (p + 1) / 4, (u64)p);
    // find quadratic non-residue
    i64 z = 2;
    while (kronecker(z, p) != -1) ++z;
    i64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    u64 m = s, c = powmod_u64((u64)z, (u64)q, (u64)p);
    u64 t = powmod_u64((u64)a, (u64)q, (u64)p);
    u64 r = powmod_u64((u64)a, (u64)((q + 1) / 2), (u64)p);
    while (t != 1) {
        u64 t2 = t;
        u64 i = 0;
        while (t2 != 1) { t2 = mulmod_u64(t2, t2, (u64)p); ++i; }
        u64 b = c;
        for (u64 j = 0; j < m - i - 1; ++j) b = mulmod_u64(b, b, (u64)p);
        r = mulmod_u64(r, b, (u64)p);
        c = mulmod_u64(b, b, (u64)p);
        t = mulmod_u64(t, c, (u64)p);
        m = i;
    }
    return (i64)r;
}

namespace detail {

// All solutions of x^2 = a (mod p^e), p odd prime. Returns sorted residues.
inline std::vector<i64> sqrt_mod_odd_pp(i64 a, i64 p, int e, i64 pe) {
    a %= pe; if (a < 0) a += pe;
    if (a == 0) {
        // x must be divisible by p^ceil(e/2)
        i64 step = 1;
        for (int i = 0; i < (e + 1) / 2; ++i) step *= p;
        std::vector<i64> out;
        for (i64 x = 0; x < pe; x += step) out.push_back(x);
        return out;
    }
    // strip p^2 factors: a = p^(2t) * u with p | u allowed only if t maximal
    i64 u = a;
    int v = 0;
    while (u % p == 0) { u /= p; ++v; }
    if (v & 1) return {};
    if (v > 0) {
        // x = p^(v/2) * y, y^2 = u (mod p^(e-v)); lift all y then expand
        int e2 = e - v;
        i64 pe2 = pe;
        for (int i = 0; i < v; ++i) pe2 /= p;
        std::vector<i64> ys = sqrt_mod_odd_pp(u, p, e2, pe2);
        i64 ph = 1;
        for (int i = 0; i < v / 2; ++i) ph *= p;
        // solutions mod p^(e - v/2) are ph*y + j*p^(e2 + v/2); expand to mod p^e
        std::vector<i64> out;
        i64 mod_half = pe / ph;  // p^(e - v/2)
        for (i64 y : ys) {
            i64 base = ph * (y % mod_half);
            i64 stride = pe2 * ph;  // p^(e2 + v/2)
            for (i64 x = base % stride; x < pe; x += stride) out.push_back(x);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    if (kronecker(u % p, p) != 1) return {};
    // Hensel lift from mod p
    i64 x = sqrt_mod_prime(u, p);
    i64 pk = p;
    while (pk < pe) {
        i64 pk2 = pk * p;
        // x' = x + t*pk with (x^2 - u)/pk = -2xt (mod p)
        i64 rem = (i64)((((i128)x * x - u) / pk) % p);
        if (rem < 0) rem += p;
        i64 inv = (i64)powmod_u64((u64)((2 * x) % p), (u64)(p - 2), (u64)p);
        i64 t = (i64)(((i128)(p - rem) * inv) % p);
        x = (i64)(((i128)x + (i128)t * pk) % pk2);
        pk = pk2;
    }
    x %= pe; if (x < 0) x += pe;
    i64 y = pe - x;
    if (x == y) return {x};
    return x < y ? std::vector<i64>{x, y} : std::vector<i64>{y, x};
}

// All solutions of x^2 = a (mod 2^e).
inline std::vector<i64> sqrt_mod_2e(i64 a, int e) {
    i64 m = 1ll << e;
    a %= m; if (a < 0) a += m;
    std::vector<i64> out;
    if (e <= 5) {  // brute force tiny moduli
        for (i64 x = 0; x < m; ++x)
            if (((i128)x * x - a) % m == 0) out.push_back(x);
        return out;
    }
    // lift solutions mod 2^(e-1) to mod 2^e
    std::vector<i64> prev = sqrt_mod_2e(a, e - 1);
    i64 half = m >> 1;
    for (i64 x : prev) {
        for (i64 cand : {x, x + half}) {
            if ((((i128)cand * cand - a) % m + m) % m == 0) out.push_back(cand % m);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

// All x in [0, m) with x^2 = a (mod m), m >= 1, from m's factorization via CRT.
inline std::vector<i64> sqrt_mod(i64 a, i64 m, const Factorization& fm) {
    std::vector<i64> sols{0};
    i64 mod = 1;
    for (auto [p, e] : fm) {
        i64 pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        std::vector<i64> part = (p == 2) ? detail::sqrt_mod_2e(a, e)
                                         : detail::sqrt_mod_odd_pp(a, p, e, pe);
        if (part.empty()) return {};
        std::vector<i64> next;
        next.reserve(sols.size() * part.size());
        // CRT: x = s (mod mod), x = r (mod pe)
        i64 inv = (i64)powmod_u64((u64)(mod % pe),
                                  (u64)(pe / p * (p - 1) - 1), (u64)pe);  // mod^(phi-1)
        for (i64 s : sols)
            for (i64 r : part) {
                i64 t = (i64)((((i128)(r - s % pe + pe) * inv) % pe));
                next.push_back(s + mod * t);
            }
        sols = std::move(next);
        mod *= pe;
    }
    std::sort(sols.begin(), sols.end());
    sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
    return sols;
}

inline std::vector<i64> sqrt_mod(i64 a, i64 m) { return sqrt_mod(a, m, factorize(m)); }

// Smallest-prime-factor sieve for batch factorization (psi sums).
struct SpfSieve {
    std::vector<int32_t> spf;
    explicit SpfSieve(i64 limit) : spf(limit + 1, 0) {
        for (i64 i = 2; i <= limit; ++i) {
            if (spf[i] == 0)
                for (i64 j = i; j <= limit; j += i)
                    if (spf[j] == 0) spf[j] = (int32_t)i;
        }
    }
    Factorization factor(i64 n) const {
        Factorization f;
        while (n > 1) {
            i64 p = spf[n];
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.push_back({p, e});
        }
        return f;
    }
};

}  // namespace lhmf
