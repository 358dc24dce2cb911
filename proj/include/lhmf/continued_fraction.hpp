#pragma once
// Finite continued fractions of rationals in the canonical form with last
// partial quotient >= 2 (when there is more than one), plus convergents.

#include <vector>

#include "lhmf/rational.hpp"

namespace lhmf {

struct ContinuedFraction {
    std::vector<i64> a;  // partial quotients [a0; a1, ..., am], a_i >= 1 for i >= 1
    std::vector<i64> p;  // convergent numerators p_0..p_m
    std::vector<i64> q;  // convergent denominators q_0..q_m
};

inline ContinuedFraction continued_fraction(Rat64 x) {
    ContinuedFraction cf;
    i64 p = x.num, q = x.den;
    while (true) {
        i64 a = p >= 0 ? p / q : -((-p + q - 1) / q);  // floor division
        cf.a.push_back(a);
        i64 r = p - a * q;
        p = q;
        q = r;
        if (q == 0) break;
    }
    // canonical form: [..., a, 1] -> [..., a+1]
    if (cf.a.size() > 1 && cf.a.back() == 1) {
        cf.a.pop_back();
        cf.a.back() += 1;
    }
    i64 pm1 = 1, pm2 = 0, qm1 = 0, qm2 = 1;
    for (i64 ai : cf.a) {
        i64 pn = ai * pm1 + pm2;
        i64 qn = ai * qm1 + qm2;
        pm2 = pm1; qm2 = qm1;
        pm1 = pn; qm1 = qn;
        cf.p.push_back(pn);
        cf.q.push_back(qn);
    }
    return cf;
}

}  // namespace lhmf
