#pragma once
// Twisted central L-values L(f (x) chi_D, k) for user-supplied newform data,
// by the incomplete-Gamma smoothed approximate functional equation.
//
// Eigenform coefficients are data (bundled fixtures), not computed here. The
// functional-equation sign of the twist is +1 under the admissibility
// condition (D/l) = w_l for all primes l | N; inadmissible twists are refused.

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lhmf/ntheory.hpp"

namespace lhmf {

struct NewformData {
    std::string label;
    i64 level = 1;
    int weight = 4;  // = 2k
    std::map<i64, int> atkin_lehner;  // prime l | level -> w_l in {+1, -1}
    std::map<i64, i64> ap;            // prime p -> a_p
    i64 p_max = 0;

    void validate() const {
        if (level < 1 || !is_squarefree(level))
            throw std::runtime_error("newform: level must be positive square-free");
        if (weight < 2 || weight % 2) throw std::runtime_error("newform: even weight >= 2 required");
        for (auto [l, w] : atkin_lehner) {
            if (level % l) throw std::runtime_error("newform: Atkin-Lehner prime not dividing level");
            if (w != 1 && w != -1) throw std::runtime_error("newform: Atkin-Lehner sign must be +-1");
        }
        for (auto [p, e] : factorize(level))
            if (!atkin_lehner.count(p))
                throw std::runtime_error("newform: missing Atkin-Lehner sign at " + std::to_string(p));
        // Deligne bound |a_p| <= 2 p^((w-1)/2), with 5% slack for data sanity
        for (auto [p, a] : ap) {
            if (!is_prime(p)) throw std::runtime_error("newform: non-prime index in ap");
            double bound = 2.1 * std::pow((double)p, (weight - 1) / 2.0);
            if (std::abs((double)a) > bound)
                throw std::runtime_error("newform: Deligne bound violated at p=" + std::to_string(p));
        }
    }
};

inline NewformData ingest_coefficients(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture: " + path);
    nlohmann::json j;
    in >> j;
    NewformData d;
    d.label = j.at("label").get<std::string>();
    d.level = j.at("level").get<i64>();
    d.weight = j.at("weight").get<int>();
    for (auto& [key, val] : j.at("atkin_lehner").items())
        d.atkin_lehner[std::stoll(key)] = val.get<int>();
    for (auto& pa : j.at("ap")) {
        i64 p = pa.at(0).get<i64>();
        d.ap[p] = pa.at(1).get<i64>();
        d.p_max = std::max(d.p_max, p);
    }
    d.validate();
    return d;
}

inline void export_coefficients(const NewformData& d, const std::string& path) {
    nlohmann::json j;
    j["label"] = d.label;
    j["level"] = d.level;
    j["weight"] = d.weight;
    nlohmann::json al = nlohmann::json::object();
    for (auto [l, w] : d.atkin_lehner) al[std::to_string(l)] = w;
    j["atkin_lehner"] = al;
    nlohmann::json ap = nlohmann::json::array();
    for (auto [p, a] : d.ap) ap.push_back({p, a});
    j["ap"] = ap;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write fixture: " + path);
    out << j.dump() << "\n";
}

// a(1..X) by the Hecke recursion at prime powers, multiplicative extension.
// a(p^(r+1)) = a_p a(p^r) - p^(w-1) a(p^(r-1)) for p not dividing N; a(p^r) = a_p^r else.
inline std::vector<double> expand_coeffs(const NewformData& d, i64 X) {
    std::vector<double> a(X + 1, 0.0);
    a[1] = 1.0;
    std::vector<char> is_pp(X + 1, 0);
    for (i64 p = 2; p <= X; ++p) {
        if (!is_prime(p)) continue;
        auto it = d.ap.find(p);
        if (it == d.ap.end())
            throw std::runtime_error("expand_coeffs: missing a_p for p=" + std::to_string(p));
        double ap = (double)it->second;
        double pw = std::pow((double)p, d.weight - 1);
        bool bad = d.level % p == 0;
        // prime powers
        double prev2 = 1.0, prev1 = ap;
        for (i64 q = p; q <= X; q *= p) {
            a[q] = prev1;
            is_pp[q] = 1;
            double next = bad ? prev1 * ap : ap * prev1 - pw * prev2;
            prev2 = prev1;
            prev1 = next;
            if (q > X / p) break;
        }
    }
    // multiplicative fill: n = q * m with q the largest power of spf(n)
    SpfSieve sieve(X);
    for (i64 n = 2; n <= X; ++n) {
        if (is_pp[n]) continue;
        i64 p = sieve.spf[n];
        i64 q = 1, m = n;
        while (m % p == 0) { m /= p; q *= p; }
        a[n] = a[q] * a[m];
    }
    return a;
}

// Upper incomplete Gamma(s, x), s > 0, x >= 0.
inline double upper_incomplete_gamma(double s, double x) {
    if (x < 0) throw std::domain_error("upper_incomplete_gamma: x >= 0");
    if (x == 0) return std::tgamma(s);
    if (x < s + 1) {
        // Gamma(s) - lower: series for the lower incomplete gamma
        double sum = 1.0 / s, term = sum;
        for (int n = 1; n < 500; ++n) {
            term *= x / (s + n);
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return std::tgamma(s) - std::exp(-x + s * std::log(x)) * sum;
    }
    // Lentz continued fraction for the upper tail
    double b = x + 1 - s, c = 1e300, dd = 1 / b, h = dd;
    for (int i = 1; i < 500; ++i) {
        double an = -i * (i - s);
        b += 2;
        dd = an * dd + b;
        if (std::abs(dd) < 1e-300) dd = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        dd = 1 / dd;
        double del = dd * c;
        h *= del;
        if (std::abs(del - 1) < 1e-16) break;
    }
    return std::exp(-x + s * std::log(x)) * h;
}

struct LValueResult {
    double value = 0;
    double error_estimate = 0;
    i64 terms_used = 0;
    bool admissible = false;
};

// Completed Lambda(s) of the twist by the free-split-point unfolding; the
// split parameter t (> 0) does not change the value when the sign/coefficient
// data are correct, which is the functional-equation self-test.
inline double lambda_completed(const NewformData& d, const std::vector<double>& a, i64 D,
                               double s, double t = 1.0) {
    const int w = d.weight;
    const double sqc = std::abs((double)D) * std::sqrt((double)d.level);
    const double twopi = 2 * std::numbers::pi;
    double sum = 0, comp = 0;
    i64 X = (i64)a.size() - 1;
    for (i64 n = 1; n <= X; ++n) {
        int chi = kronecker(D, n);
        if (!chi || a[n] == 0) continue;
        double c1 = twopi * n / sqc;
        double term = std::pow(sqc / (twopi * n), s) * upper_incomplete_gamma(s, c1 * t) +
                      std::pow(sqc / (twopi * n), w - s) * upper_incomplete_gamma(w - s, c1 / t);
        term *= chi * a[n];
        double y = term - comp;
        double s2 = sum + y;
        comp = (s2 - sum) - y;
        sum = s2;
        if (c1 * std::min(t, 1.0 / t) > 45.0) break;  // both cutoffs below 1e-16
    }
    return sum;
}

// L(f (x) chi_D, k) at the central point k = w/2, sign +1 under admissibility:
// L(k) = (1 + eps) sum a(n) chi_D(n) n^-k Gamma(k, 2 pi n / (|D| sqrt N)) / Gamma(k).
inline LValueResult twisted_L(const NewformData& d, const std::vector<double>& a, i64 D) {
    if (!is_fundamental_discriminant(D) || D == 1)
        throw std::domain_error("twisted_L: D must be a fundamental discriminant != 1");
    if (std::gcd(std::abs(D), d.level) != 1)
        throw std::domain_error("twisted_L: gcd(D, N) = 1 required");
    for (auto [l, wl] : d.atkin_lehner)
        if (kronecker(D, l) != wl)
            throw std::domain_error("twisted_L: inadmissible twist, (D/" + std::to_string(l) +
                                    ") != w_l (functional-equation sign would not be +1)");
    const int k = d.weight / 2;
    const double sqc = std::abs((double)D) * std::sqrt((double)d.level);
    const double twopi = 2 * std::numbers::pi;
    const double gk = std::tgamma((double)k);
    LValueResult r;
    r.admissible = true;
    double sum = 0, comp = 0;
    i64 X = (i64)a.size() - 1;
    i64 needed = (i64)std::ceil(45.0 * sqc / twopi);
    if (X < needed)
        throw std::runtime_error("twisted_L: coefficient table too shallow, need n <= " +
                                 std::to_string(needed));
    for (i64 n = 1; n <= X; ++n) {
        int chi = kronecker(D, n);
        if (!chi || a[n] == 0) continue;
        double c1 = twopi * n / sqc;
        if (c1 > 45.0) break;
        double term = chi * a[n] * std::pow((double)n, -k) * upper_incomplete_gamma(k, c1) / gk;
        double y = term - comp;
        double s2 = sum + y;
        comp = (s2 - sum) - y;
        sum = s2;
        ++r.terms_used;
    }
    r.value = 2.0 * sum;  // (1 + eps), eps = +1
    // error: truncation is < 1e-14 by the cutoff; report the rounding scale of
    // the largest partial terms plus the hard tail bound
    r.error_estimate = 1e-12 * (1.0 + std::abs(r.value)) + 1e-14;
    return r;
}

}  // namespace lhmf
