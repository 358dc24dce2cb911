#pragma once
// Weight-(2-2k) Hecke operators on translation-invariant functions Q -> Q,
// rational polynomials in the T_p, shipped presets for levels 7/15/22, and
// the exact-rational vanishing detector.
//
// Functions are memoized on their Rat64 argument reduced mod 1 (legitimate by
// translation invariance); the level-22 preset fans out to several thousand
// leaf evaluations per sample, and distinct factor orderings share leaves.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lhmf/local_poly.hpp"
#include "lhmf/rational.hpp"

namespace lhmf {

using RatFunction = std::function<BigRat(Rat64)>;

// Memoize on x mod 1 (callers guarantee translation invariance).
inline RatFunction memoize_mod1(RatFunction f) {
    auto cache = std::make_shared<std::map<Rat64, BigRat>>();
    return [f = std::move(f), cache](Rat64 x) -> BigRat {
        Rat64 key = x.frac();
        auto it = cache->find(key);
        if (it != cache->end()) return it->second;
        BigRat v = f(key);
        cache->emplace(key, v);
        return v;
    };
}

// (T_p h)(x) = p^(1-2k) h(px) + p^(-1) sum_{b mod p} h((x+b)/p), exact.
inline RatFunction apply_Tp(RatFunction h, i64 p, int k, i64 N = 0) {
    if (!is_prime(p)) throw std::domain_error("apply_Tp: p must be prime");
    if (N && N % p == 0) throw std::domain_error("apply_Tp: p | N not allowed");
    auto g = [h = std::move(h), p, k](Rat64 x) -> BigRat {
        BigRat s = h(x * p) / rat_pow(BigRat((long)p), 2 * k - 1);
        BigRat t(0);
        for (i64 b = 0; b < p; ++b) t += h(Rat64(x.num + b * x.den, p * x.den));
        return s + t / BigRat((long)p);
    };
    return memoize_mod1(std::move(g));
}

// One commuting factor: a rational polynomial sum_j c_j T_p^j in a single T_p.
// The linear factor (T_p - lambda) of Theorem 1.2 is coeffs = {-lambda, 1},
// with lambda the already-normalized shift p^(1-2k) a_p.
struct HeckeFactor {
    i64 p = 2;
    std::vector<BigRat> coeffs;  // c_0 ... c_d, c_d the leading coefficient

    static HeckeFactor linear(i64 p, const BigRat& lambda) {
        return {p, {-lambda, BigRat(1)}};
    }
};

struct HeckePolynomial {
    std::vector<HeckeFactor> factors;
    int k = 2;  // weight 2 - 2k

    void validate(i64 N) const {
        for (const HeckeFactor& f : factors) {
            if (!is_prime(f.p)) throw std::domain_error("hecke: p must be prime");
            if (N % f.p == 0) throw std::domain_error("hecke: p | N not allowed");
            if (f.coeffs.size() < 2) throw std::domain_error("hecke: factor of degree 0");
        }
    }
};

// Apply the full polynomial (product of factors) to h.
inline RatFunction apply_polynomial(RatFunction h, const HeckePolynomial& poly, i64 N = 0) {
    poly.validate(N ? N : 1);
    RatFunction cur = memoize_mod1(std::move(h));
    for (const HeckeFactor& f : poly.factors) {
        auto powers = std::make_shared<std::vector<RatFunction>>();
        powers->push_back(cur);
        for (size_t j = 1; j < f.coeffs.size(); ++j)
            powers->push_back(apply_Tp(powers->back(), f.p, poly.k, N));
        auto coeffs = f.coeffs;
        cur = memoize_mod1([powers, coeffs](Rat64 x) -> BigRat {
            BigRat s(0);
            for (size_t j = 0; j < coeffs.size(); ++j)
                if (coeffs[j] != 0) s += coeffs[j] * (*powers)[j](x);
            return s;
        });
    }
    return cur;
}

// Named presets from the paper's computations (k = 2).
inline HeckePolynomial hecke_preset(const std::string& name) {
    HeckePolynomial poly;
    poly.k = 2;
    if (name == "level7-trivial") return poly;
    if (name == "level15-paper") {
        poly.factors.push_back(HeckeFactor::linear(11, make_rat(32, 11 * 11 * 11)));
        poly.factors.push_back(HeckeFactor::linear(7, make_rat(-24, 7 * 7 * 7)));
        return poly;
    }
    if (name == "level22-paper") {
        // (T_13 - lambda)(T_13 - lambda') with lambda lambda' irrational is the
        // rational quadratic T_13^2 - (80/13^3) T_13 + 400/13^6
        i64 c13 = 13 * 13 * 13;
        poly.factors.push_back(
            {13, {make_rat(400, c13 * c13), make_rat(-80, c13), BigRat(1)}});
        poly.factors.push_back(HeckeFactor::linear(3, make_rat(-7, 27)));
        poly.factors.push_back(HeckeFactor::linear(5, make_rat(-3, 125)));
        return poly;
    }
    throw std::domain_error("unknown Hecke preset: " + name);
}

// Factor transported to the constants: applying (sum_j c_j T_p^j) to the
// constant 1 multiplies it by sum_j c_j (p^(1-2k) + 1)^j.
inline BigRat constant_multiplier(const HeckePolynomial& poly) {
    BigRat m(1);
    for (const HeckeFactor& f : poly.factors) {
        BigRat u = BigRat(1) / rat_pow(BigRat((long)f.p), 2 * poly.k - 1) + 1;
        BigRat s(0), up(1);
        for (size_t j = 0; j < f.coeffs.size(); ++j) {
            s += f.coeffs[j] * up;
            up *= u;
        }
        m *= s;
    }
    return m;
}

struct VanishingReport {
    bool vanishing = false;
    std::vector<Rat64> samples;
    std::vector<BigRat> values;
    BigRat common_value;  // meaningful when vanishing
};

// Theorem-1.2 detector: exact equality of the transformed script-P at the
// samples. No tolerances exist on this path.
inline VanishingReport detect_vanishing(LocalPoly& lp, const HeckePolynomial& poly,
                                        std::vector<Rat64> samples = {}) {
    const auto& P = lp.params();
    poly.validate(P.N);
    if (samples.empty()) samples = lp.default_samples(2 * P.k - 1);
    if ((int)samples.size() < 2 * P.k - 1)
        throw std::domain_error("detect_vanishing: need at least 2k-1 samples");
    RatFunction h = apply_polynomial([&lp](Rat64 x) { return lp.script_P(x); }, poly, P.N);
    VanishingReport rep;
    rep.samples = samples;
    rep.vanishing = is_constant_exact(h, samples, &rep.values);
    if (rep.vanishing && !rep.values.empty()) rep.common_value = rep.values.front();
    return rep;
}

}  // namespace lhmf
