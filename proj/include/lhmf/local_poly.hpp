#pragma once
// Exact rational evaluation of the twisted local polynomial data:
//   * script-P(x)  = sum over the straddling set of chi_{D0}(Q) Q(x,1)^(k-1),
//   * the simple-form (even-period) polynomial,
//   * the constant c_infty by truncated series, with a heuristic tail bound,
//   * P(x) = c_infty + (-1)^(k-1) C(2k-2,k-1) pi 2^(2-2k) script-P(x),
//   * the gamma constant, and exact constancy detection over sample rationals.

#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>

#include "lhmf/enumerate.hpp"
#include "lhmf/qform.hpp"
#include "lhmf/rational.hpp"

namespace lhmf {

struct LocalPolyParams {
    int k = 2;       // weight parameter, k >= 2
    i64 N = 1;       // positive square-free level
    i64 D = 0;       // twisting discriminant
    i64 D0 = 1;      // genus-character discriminant
    bool research_mode = false;  // bypass the Theorem-1.2 hypothesis checks

    i64 Delta() const { return D * D0; }

    // Always-required structural checks (square Delta etc.), then the
    // Theorem-1.2 hypotheses unless research_mode is set.
    void validate() const {
        if (k < 2) throw std::domain_error("params: k must be >= 2");
        if (N < 1 || !is_squarefree(N))
            throw std::domain_error("params: N must be positive square-free");
        validate_disc(Delta());
        if (research_mode) return;
        int sgn = (k % 2 == 0) ? 1 : -1;
        if ((D > 0 ? 1 : -1) != sgn || (D0 > 0 ? 1 : -1) != sgn)
            throw std::domain_error("params: sgn(D) = sgn(D0) = (-1)^k required");
        if (!is_fundamental_discriminant(D) || !is_fundamental_discriminant(D0))
            throw std::domain_error("params: D and D0 must be fundamental (or 1)");
        auto square_mod_4N = [&](i64 v) {
            for (i64 s = 0; s <= 2 * N; ++s)
                if (((s * s - v) % (4 * N) + 4 * N) % (4 * N) == 0) return true;
            return false;
        };
        if (!square_mod_4N(D) || !square_mod_4N(D0))
            throw std::domain_error("params: D and D0 must be squares mod 4N");
        for (auto [p, e] : factorize(N))
            if (kronecker(D, p) != kronecker(D0, p))
                throw std::domain_error("params: (D/l) = (D0/l) required for all primes l | N");
    }
};

// Truncated c_infty with its heuristic tail bound. `bare` drops the
// (D D0)^(k-1/2) / (2k-1) prefactor (the normalization the paper's series
// vs. closed-form comparison is quoted in).
struct CInftyResult {
    double value = 0;      // full normalization
    double bare = 0;       // pi 2^(2-2k) * sum only
    double tail_bound = 0; // heuristic, in the bare normalization
    i64 a_max = 0;
};

// Shared evaluation context: genus character cache plus the simple forms of
// Delta (the fast enumerator's transport sources).
class LocalPoly {
  public:
    explicit LocalPoly(const LocalPolyParams& params) : p_(params), chi_(params.D0, params.N) {
        p_.validate();
        simple_ = enumerate_simple_forms(p_.Delta(), 1);
    }

    const LocalPolyParams& params() const { return p_; }

    // Sum of chi(Q) Q(x,1)^(k-1) over the given forms, exact. The common
    // denominator q^(2k-2) is applied once at the end.
    BigRat weighted_sum(const std::vector<QuadForm>& forms, Rat64 x) {
        BigInt num(0);
        const i64 p = x.num, q = x.den;
        for (const QuadForm& Q : forms) {
            int c = chi_.eval(Q.a, Q.b, Q.c);
            if (!c) continue;
            i128 v = (i128)Q.a * p * p + (i128)Q.b * p * q + (i128)Q.c * q * q;
            BigInt term(1);
            BigInt base = big_from_i128(v);
            for (int i = 0; i + 1 < p_.k; ++i) term *= base;
            num += c > 0 ? term : -term;
        }
        BigInt den(1);
        BigInt qq((long)q);
        for (int i = 0; i + 1 < p_.k; ++i) den *= qq * qq;
        BigRat r(num, den);
        r.canonicalize();
        return r;
    }

    BigRat script_P(Rat64 x) {
        return weighted_sum(enumerate_straddling_fast(p_.Delta(), p_.N, x, simple_), x);
    }

    BigRat script_P_oracle(Rat64 x) {
        return weighted_sum(enumerate_straddling_oracle(p_.Delta(), p_.N, x), x);
    }

    // Sum over simple forms with the level condition N | a.
    BigRat simple_form_polynomial(Rat64 x) {
        std::vector<QuadForm> lvl;
        for (const QuadForm& Q : simple_)
            if (Q.a % p_.N == 0) lvl.push_back(Q);
        return weighted_sum(lvl, x);
    }

    // psi(a) = sum over b mod 2a with b^2 = Delta (mod 4a) of chi([a,b,(b^2-Delta)/4a]).
    i64 psi(i64 a, const Factorization& f4a) {
        i64 Delta = p_.Delta();
        i64 s = 0;
        for (i64 b : sqrt_mod(Delta, 4 * a, f4a)) {
            if (b >= 2 * a) continue;
            i64 c = (i64)(((i128)b * b - Delta) / (4 * a));
            s += chi_.eval(a, b, c);
        }
        return s;
    }

    CInftyResult c_infty_series(i64 a_max = 1000000) {
        const int k = p_.k;
        const i64 N = p_.N;
        SpfSieve sieve(4 * a_max + 4);
        double sum = 0, comp = 0;  // Kahan
        double tail_window = 0;
        i64 tail_terms = 0;
        for (i64 a = N; a <= a_max; a += N) {
            i64 ps = psi(a, sieve.factor(4 * a));
            if (ps) {
                double t = (double)ps * std::pow((double)a, -k);
                double y = t - comp;
                double s2 = sum + y;
                comp = (s2 - sum) - y;
                sum = s2;
            }
            if (a > a_max - a_max / 10) {
                tail_window += std::abs((double)ps);
                ++tail_terms;
            }
        }
        CInftyResult r;
        r.a_max = a_max;
        const double pi = std::numbers::pi;
        double bare_prefactor = pi * std::pow(2.0, 2 - 2 * k);
        r.bare = bare_prefactor * sum;
        double full_prefactor =
            std::pow((double)p_.Delta(), k - 0.5) / (double)(2 * k - 1);
        r.value = full_prefactor * r.bare;
        // heuristic: tail ~ avg|psi| * sum_{a > a_max, N|a} a^-k, doubled for slack
        double avg = tail_terms ? tail_window / (double)tail_terms : 1.0;
        r.tail_bound = 2.0 * bare_prefactor * avg * std::pow((double)a_max, 1 - k) /
                       ((double)(k - 1) * (double)N);
        return r;
    }

    // P(x) as a float, combining the exact script-P with the truncated c_infty.
    double eval_P(Rat64 x, i64 a_max = 1000000) {
        CInftyResult c = c_infty_series(a_max);
        return c.value + script_prefactor() * script_P(x).get_d();
    }

    // (-1)^(k-1) C(2k-2, k-1) pi 2^(2-2k)
    double script_prefactor() const {
        const int k = p_.k;
        double binom = 1;
        for (int i = 1; i <= k - 1; ++i) binom = binom * (k - 1 + i) / i;
        double v = binom * std::numbers::pi * std::pow(2.0, 2 - 2 * k);
        return (k % 2 == 1) ? v : -v;  // (-1)^(k-1)
    }

    // gamma = (-1)^k 2^(2k-2) / (pi C(2k-2,k-1)) * c_infty
    double gamma_constant(double c_infty) const {
        const int k = p_.k;
        double binom = 1;
        for (int i = 1; i <= k - 1; ++i) binom = binom * (k - 1 + i) / i;
        double v = std::pow(2.0, 2 * k - 2) / (std::numbers::pi * binom) * c_infty;
        return (k % 2 == 0) ? v : -v;
    }

    // First `count` unit fractions 1/p with p prime and coprime to N*Delta.
    std::vector<Rat64> default_samples(int count) const {
        std::vector<Rat64> out;
        i64 p = 2;
        while ((int)out.size() < count) {
            if (is_prime(p) && std::gcd(p, p_.N * p_.Delta()) == 1)
                out.push_back(Rat64(1, p));
            ++p;
        }
        return out;
    }

    const std::vector<QuadForm>& simple_forms() const { return simple_; }
    CachedGenusCharacter& chi() { return chi_; }

  private:
    LocalPolyParams p_;
    CachedGenusCharacter chi_;
    std::vector<QuadForm> simple_;
};

// Exact constancy over samples of an arbitrary exact function.
inline bool is_constant_exact(const std::function<BigRat(Rat64)>& h,
                              const std::vector<Rat64>& samples,
                              std::vector<BigRat>* table = nullptr) {
    bool constant = true;
    std::optional<BigRat> first;
    for (const Rat64& x : samples) {
        BigRat v = h(x);
        if (table) table->push_back(v);
        if (!first)
            first = v;
        else if (v != *first)
            constant = false;
    }
    return constant;
}

}  // namespace lhmf
