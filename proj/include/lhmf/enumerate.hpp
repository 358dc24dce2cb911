#pragma once
// Enumeration of binary quadratic forms:
//   * simple forms (a < 0 < c) of a discriminant, with a level condition,
//   * the straddling set {Q in Q_{N,Delta} : a < 0 < Q(x,1)} at a rational x,
//     via a brute-force window scan (oracle) and a continued-fraction /
//     Stern-Brocot transport of simple forms (fast path).
//
// The fast path descends the Stern-Brocot tree toward frac(x) from the pair
// (0/1, 1/0), one unimodular pair matrix per mediant step, stopping once each
// endpoint either equals frac(x) or has denominator > B = q*(isqrt(Delta)+1).
// Simple forms (and their [c,b,a] swaps) transported through the adjugates of
// all visited pair matrices, translated by the integer part and filtered on
// (a < 0, N | a, Q(x,1) >= 1), give exactly the straddling set; this is
// validated against the oracle (see tests and the acceptance suite).
//
// For speed, consecutive mediant steps in one direction (a "run") are handled
// in closed form: within a run the transported coefficients and the value
// q^2 Q(x,1) are quadratics in the step index j, so the admissible j are found
// by integer root isolation plus residue classes mod N instead of a per-step
// transport of every source form.

#include <algorithm>
#include <cmath>
#include <vector>

#include "lhmf/qform.hpp"
#include "lhmf/rational.hpp"

namespace lhmf {

inline i64 isqrt64(i64 n) {
    i64 r = (i64)std::sqrt((double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square64(i64 n) {
    if (n < 0) return false;
    i64 r = isqrt64(n);
    return r * r == n;
}

inline void validate_disc(i64 Delta) {
    if (Delta <= 0 || (Delta % 4 != 0 && Delta % 4 != 1) || is_square64(Delta))
        throw std::domain_error("discriminant must be positive, 0/1 mod 4, non-square");
}

// All [a,b,c] with b^2 - 4ac = Delta, a < 0 < c, N | a; sorted, duplicate-free.
inline std::vector<QuadForm> enumerate_simple_forms(i64 Delta, i64 N = 1) {
    validate_disc(Delta);
    std::vector<QuadForm> out;
    for (i64 b = (Delta % 2 == 0) ? 0 : 1; b * b < Delta; b += 2) {
        i64 n = (Delta - b * b) / 4;  // = |a| * c
        auto add = [&](i64 aa, i64 c) {
            if (aa % N) return;
            out.push_back({-aa, b, c});
            if (b) out.push_back({-aa, -b, c});
        };
        for (i64 d = 1; d * d <= n; ++d) {
            if (n % d) continue;
            add(d, n / d);
            if (d != n / d) add(n / d, d);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Brute-force window scan: for each a < 0, N | a, |a| <= Delta q^2 / 4, the
// integers b with |2ax + b| < sqrt(Delta) and 4a | b^2 - Delta give the
// candidate forms; keep those with q^2 Q(x,1) >= 1.
inline std::vector<QuadForm> enumerate_straddling_oracle(i64 Delta, i64 N, Rat64 x) {
    validate_disc(Delta);
    i64 p = x.num, q = x.den;
    i64 amax = Delta * q * q / 4;
    std::vector<QuadForm> out;
    for (i64 apos = N; apos <= amax; apos += N) {
        i64 a = -apos;
        // window: (b q + 2 a p)^2 < Delta q^2
        double center = -2.0 * a * p / q;
        double half = std::sqrt((double)Delta);
        i64 blo = (i64)std::floor(center - half) - 2;
        i64 bhi = (i64)std::ceil(center + half) + 2;
        for (i64 b = blo; b <= bhi; ++b) {
            i128 w = (i128)(b * q + 2 * a * p);
            if (w * w >= (i128)Delta * q * q) continue;
            i64 num = b * b - Delta;
            if (num % (4 * a)) continue;
            i64 c = num / (4 * a);
            i128 v = (i128)a * p * p + (i128)b * p * q + (i128)c * q * q;
            if (v >= 1) out.push_back({a, b, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// One monotone stretch of the Stern-Brocot descent: starting from the pair
// (l0, r0), step j in [1, len] replaces the same side by the mediant, so the
// moving endpoint at step j is (l0 + j*r0) resp. (r0 + j*l0).
struct SBRun {
    bool replace_left;
    i64 lp, lq, rp, rq;  // state before the first step of the run
    i64 len;
};

struct SBPath {
    i64 shift;              // integer part n of x; descent targets frac(x) = pf/q
    i64 pf, q;
    std::vector<SBRun> runs;  // first run also contributes its j = 0 state
};

inline SBPath sb_descend(Rat64 x, i64 Delta) {
    SBPath path;
    path.shift = x.floor();
    path.pf = x.num - path.shift * x.den;
    path.q = x.den;
    const i64 pf = path.pf, q = path.q;
    const i64 B = q * (isqrt64(Delta) + 1);
    i64 lp = 0, lq = 1, rp = 1, rq = 0;
    int prev_side = -1;  // 0 = left, 1 = right
    while (true) {
        bool l_done = (lp == pf && lq == q) || lq > B;
        bool r_done = (rp == pf && rq == q) || (rq > B);
        if (l_done && r_done) break;
        i64 mp = lp + rp, mq = lq + rq;
        bool l_is_x = (lp == pf && lq == q);
        bool r_is_x = (rp == pf && rq == q);
        bool m_le = (i128)mp * q <= (i128)pf * mq;
        bool replace_left = m_le ? !l_is_x : r_is_x;
        int side = replace_left ? 0 : 1;
        if (side == prev_side) {
            path.runs.back().len++;
        } else {
            path.runs.push_back({replace_left, lp, lq, rp, rq, 1});
            prev_side = side;
        }
        if (replace_left) {
            lp = mp; lq = mq;
        } else {
            rp = mp; rq = mq;
        }
    }
    if (path.runs.empty())  // x already terminal (e.g. integer with Delta tiny)
        path.runs.push_back({true, lp, lq, rp, rq, 0});
    return path;
}

// Candidate emitted by the per-run scan.
struct RunScan {
    // A(j) = a2 j^2 + a1 j + a0 (transported leading coefficient)
    // v(j) = b2 j^2 + b1 j + b0 (q^2 * value at x of the transported form)
    i128 a2, a1, a0, b2, b1, b0;
};

inline i128 quad_at(i128 c2, i128 c1, i128 c0, i64 j) { return (c2 * j + c1) * j + c0; }

// Largest integer interval [jlo, jhi] within [lo, hi] around seed where
// f(j) = c2 j^2 + c1 j + c0 satisfies sgn-condition "f < bound" (want_less)
// or "f >= bound" (!want_less). Assumes the satisfied set restricted to
// [lo, hi] is a (possibly empty) contiguous interval containing seed if seed
// satisfies. Returns false if seed does not satisfy.
inline bool grow_interval(i128 c2, i128 c1, i128 c0, i128 bound, bool want_less,
                          i64 lo, i64 hi, i64 seed, i64& jlo, i64& jhi) {
    auto ok = [&](i64 j) {
        i128 f = detail::quad_at(c2, c1, c0, j);
        return want_less ? (f < bound) : (f >= bound);
    };
    if (seed < lo || seed > hi || !ok(seed)) return false;
    // binary search boundary on each side
    i64 a = lo, b = seed;
    while (a < b) {  // find smallest ok >= a
        i64 m = a + (b - a) / 2;
        if (ok(m)) b = m; else a = m + 1;
    }
    jlo = a;
    a = seed; b = hi;
    while (a < b) {
        i64 m = a + (b - a + 1) / 2;
        if (ok(m)) a = m; else b = m - 1;
    }
    jhi = a;
    return true;
}

}  // namespace detail

// Fast straddling enumeration. `simple` must be enumerate_simple_forms(Delta, 1)
// (NO level condition; the level filter applies post-transport).
inline std::vector<QuadForm> enumerate_straddling_fast(i64 Delta, i64 N, Rat64 x,
                                                       const std::vector<QuadForm>& simple) {
    validate_disc(Delta);
    detail::SBPath path = detail::sb_descend(x, Delta);
    const i64 pf = path.pf, q = path.q, n = path.shift;
    const i64 p = x.num;  // full numerator: v is evaluated via the frac frame below

    // Sources: simple forms and their (c, b, a) swaps.
    std::vector<QuadForm> sources;
    sources.reserve(2 * simple.size());
    for (const QuadForm& S : simple) {
        sources.push_back(S);
        sources.push_back({S.c, S.b, S.a});
    }

    std::vector<QuadForm> out;
    auto emit = [&](const QuadForm& S, i64 al, i64 be, i64 ga, i64 de, i128 A, i128 v) {
        // full transported middle/last coefficients, then translate by T^-n
        i128 Bc = 2 * (i128)S.a * al * be + (i128)S.b * ((i128)al * de + (i128)be * ga) +
                  2 * (i128)S.c * ga * de;
        i128 C = S.eval(be, de);
        i128 Bt = Bc - 2 * A * n;
        i128 Ct = (A * n - Bc) * n + C;
        out.push_back({(i64)A, (i64)Bt, (i64)Ct});
        (void)v;
    };

    bool first_run = true;
    for (const detail::SBRun& run : path.runs) {
        const i64 j0 = first_run ? 0 : 1;
        first_run = false;
        const i64 j1 = run.len;
        if (j1 < j0) continue;
        // adj(M_j) = [[rq_j, -rp_j], [-lq_j, lp_j]] with the run side moving:
        //   left run:  l_j = l0 + j r,   r fixed
        //   right run: r_j = r0 + j l,   l fixed
        // A(j) = S.eval(col1) with col1 = (rq_j, -lq_j);
        // v(j) = S.eval(adj(M_j) * (pf, q)^T).
        i64 u0, du, w0, dw;       // col1 = (u0 + j du, w0 + j dw)
        i64 s0, ds, t0, dt;       // adj * (pf,q) = (s0 + j ds, t0 + j dt)
        if (run.replace_left) {
            u0 = run.rq; du = 0;
            w0 = -run.lq; dw = -run.rq;
            s0 = run.rq * pf - run.rp * q; ds = 0;
            t0 = -run.lq * pf + run.lp * q; dt = run.rp * q - run.rq * pf;
        } else {
            u0 = run.rq; du = run.lq;
            w0 = -run.lq; dw = 0;
            s0 = run.rq * pf - run.rp * q; ds = run.lq * pf - run.lp * q;
            t0 = -run.lq * pf + run.lp * q; dt = 0;
        }
        for (const QuadForm& S : sources) {
            // A(j), v(j) as integer quadratics in j
            i128 a2 = (i128)S.a * du * du + (i128)S.b * du * dw + (i128)S.c * dw * dw;
            i128 a1 = 2 * (i128)S.a * u0 * du + (i128)S.b * ((i128)u0 * dw + (i128)w0 * du) +
                      2 * (i128)S.c * w0 * dw;
            i128 a0 = S.eval(u0, w0);
            i128 b2 = (i128)S.a * ds * ds + (i128)S.b * ds * dt + (i128)S.c * dt * dt;
            i128 b1 = 2 * (i128)S.a * s0 * ds + (i128)S.b * ((i128)s0 * dt + (i128)t0 * ds) +
                      2 * (i128)S.c * t0 * dt;
            i128 b0 = S.eval(s0, t0);

            // The two conditions A(j) < 0 and v(j) >= 1 have opposite-curvature
            // quadratics (a2 and b2 share the sign of the source coefficient on
            // the moving slot, up to degeneration), so at least one of the
            // satisfied sets is a bounded interval; isolate a bounded one, then
            // test the remaining conditions pointwise with a mod-N filter.
            i64 jlo, jhi;
            bool found = false;
            if (a2 > 0 || (a2 == 0 && b2 >= 0)) {
                // {A < 0} is an interval (possibly via linear/constant A)
                i64 seed;
                if (a2 > 0) {
                    double vert = -(double)a1 / (2.0 * (double)a2);
                    seed = (i64)std::llround(std::clamp(vert, (double)j0, (double)j1));
                } else if (a1 != 0) {
                    seed = (a1 < 0) ? j1 : j0;
                } else {
                    seed = j0;
                }
                // seed may be off by one from rounding: try neighbors
                for (i64 s = seed - 1; s <= seed + 1 && !found; ++s)
                    found = detail::grow_interval(a2, a1, a0, 0, true, j0, j1, s, jlo, jhi);
                if (!found && a2 > 0) continue;
                if (!found) {  // linear/constant: no satisfied point in range
                    continue;
                }
            } else {
                // {v >= 1} is an interval (b2 < 0, or b2 == 0 degenerations)
                i64 seed;
                if (b2 < 0) {
                    double vert = -(double)b1 / (2.0 * (double)b2);
                    seed = (i64)std::llround(std::clamp(vert, (double)j0, (double)j1));
                } else if (b1 != 0) {
                    seed = (b1 > 0) ? j1 : j0;
                } else {
                    seed = j0;
                }
                for (i64 s = seed - 1; s <= seed + 1 && !found; ++s)
                    found = detail::grow_interval(b2, b1, b0, 1, false, j0, j1, s, jlo, jhi);
                if (!found) continue;
            }

            // For long candidate intervals, only the residues j mod N with
            // A(j) = 0 (mod N) can contribute; precompute them once.
            u64 res_mask = ~0ull;  // bit r set <=> residue r admissible
            if (N > 1 && jhi - jlo >= 4 * N) {
                res_mask = 0;
                i64 a2m = (i64)(((a2 % N) + N) % N), a1m = (i64)(((a1 % N) + N) % N),
                    a0m = (i64)(((a0 % N) + N) % N);
                for (i64 r = 0; r < N; ++r)
                    if (((a2m * r + a1m) * r + a0m) % N == 0) res_mask |= 1ull << r;
                if (res_mask == 0) continue;
            }
            for (i64 j = jlo; j <= jhi; ++j) {
                if (N > 1 && !(res_mask & (1ull << (((j % N) + N) % N)))) continue;
                i128 A = detail::quad_at(a2, a1, a0, j);
                if (A >= 0 || A % N != 0) continue;
                i128 v = detail::quad_at(b2, b1, b0, j);
                if (v < 1) continue;
                i64 al = run.rq + (run.replace_left ? 0 : j * run.lq);
                i64 ga = -(run.lq + (run.replace_left ? j * run.rq : 0));
                i64 be = -(run.rp + (run.replace_left ? 0 : j * run.lp));
                i64 de = run.lp + (run.replace_left ? j * run.rp : 0);
                emit(S, al, be, ga, de, A, v);
            }
        }
    }
    (void)p;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<QuadForm> enumerate_straddling_fast(i64 Delta, i64 N, Rat64 x) {
    return enumerate_straddling_fast(Delta, N, x, enumerate_simple_forms(Delta, 1));
}

namespace detail {

// Reference variant: transports every source through every visited pair
// matrix individually (no run compression). Used in differential tests.
inline std::vector<QuadForm> enumerate_straddling_pairs(i64 Delta, i64 N, Rat64 x,
                                                        const std::vector<QuadForm>& simple) {
    validate_disc(Delta);
    SBPath path = sb_descend(x, Delta);
    const i64 pf = path.pf, q = path.q, n = path.shift;
    std::vector<QuadForm> sources;
    for (const QuadForm& S : simple) {
        sources.push_back(S);
        sources.push_back({S.c, S.b, S.a});
    }
    std::vector<QuadForm> out;
    bool first_run = true;
    for (const SBRun& run : path.runs) {
        i64 j0 = first_run ? 0 : 1;
        first_run = false;
        for (i64 j = j0; j <= run.len; ++j) {
            i64 lp = run.lp + (run.replace_left ? j * run.rp : 0);
            i64 lq = run.lq + (run.replace_left ? j * run.rq : 0);
            i64 rp = run.rp + (run.replace_left ? 0 : j * run.lp);
            i64 rq = run.rq + (run.replace_left ? 0 : j * run.lq);
            i64 al = rq, be = -rp, ga = -lq, de = lp;
            for (const QuadForm& S : sources) {
                i128 A = S.eval(al, ga);
                if (A >= 0 || A % N != 0) continue;
                i128 Bc = 2 * (i128)S.a * al * be +
                          (i128)S.b * ((i128)al * de + (i128)be * ga) + 2 * (i128)S.c * ga * de;
                i128 C = S.eval(be, de);
                i128 Bt = Bc - 2 * A * n;
                i128 Ct = (A * n - Bc) * n + C;
                i128 v = A * pf * pf + (Bc)*pf * q + C * q * q;
                if (v < 1) continue;
                out.push_back({(i64)A, (i64)Bt, (i64)Ct});
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

}  // namespace lhmf
