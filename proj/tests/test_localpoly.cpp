#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lhmf/local_poly.hpp"

using namespace lhmf;

TEST_CASE("parameter validation") {
    LocalPolyParams good{2, 7, 37, 29};
    CHECK_NOTHROW(good.validate());
    CHECK_THROWS_AS((LocalPolyParams{1, 7, 37, 29}.validate()), std::domain_error);
    CHECK_THROWS_AS((LocalPolyParams{2, 4, 37, 29}.validate()), std::domain_error);   // N not squarefree
    CHECK_THROWS_AS((LocalPolyParams{2, 7, -37, 29}.validate()), std::domain_error);  // sign pattern
    CHECK_THROWS_AS((LocalPolyParams{2, 7, 45, 29}.validate()), std::domain_error);   // D not fundamental
    CHECK_THROWS_AS((LocalPolyParams{2, 7, 29, 29}.validate()), std::domain_error);   // square Delta
    // (D/7) != (D0/7): 29 is a QR mod 7, 12 is not (12 = 5 mod 7)
    CHECK_THROWS_AS((LocalPolyParams{2, 7, 12, 29}.validate()), std::domain_error);
    LocalPolyParams bypass{2, 7, 45, 29};
    bypass.research_mode = true;
    CHECK_NOTHROW(bypass.validate());
}

TEST_CASE("script-P pinned values") {
    LocalPoly p37({2, 7, 37, 29});
    CHECK(p37.script_P(Rat64(1, 2)) == BigRat(144));
    LocalPoly p92({2, 7, 92, 29});
    CHECK(p92.script_P(Rat64(1, 3)) == BigRat(576));
    LocalPoly p57({2, 7, 57, 29});
    CHECK(p57.script_P(Rat64(1, 2)) == BigRat(420));
    LocalPoly p5({2, 1, 5, 1});
    CHECK(p5.script_P(Rat64(0, 1)) == BigRat(2));
}

TEST_CASE("fast path equals oracle on script-P") {
    for (auto [N, D, D0] : {std::tuple<i64, i64, i64>{7, 37, 29}, {7, 57, 29}, {1, 5, 1}}) {
        LocalPoly lp({2, N, D, D0});
        for (Rat64 x : {Rat64(1, 2), Rat64(2, 5), Rat64(-3, 7), Rat64(5, 12)})
            CHECK(lp.script_P(x) == lp.script_P_oracle(x));
    }
}

TEST_CASE("translation invariance, exact, random points") {
    std::mt19937_64 rng(42);
    LocalPoly lp({2, 7, 57, 29});
    for (int i = 0; i < 25; ++i) {
        i64 q = (i64)(rng() % 10) + 1;
        i64 p = (i64)(rng() % (6 * q + 1)) - 3 * q;
        Rat64 x(p, q);
        CHECK(lp.script_P(x) == lp.script_P(x + 1));
        CHECK(lp.script_P(x) == lp.script_P(x + (-3)));
    }
}

// slash action in weight 2-2k: (h | W_N)(x) = N^(k-1) x^(2k-2) h(-1/(Nx))
static BigRat slash_WN(LocalPoly& lp, const std::function<BigRat(Rat64)>& h, Rat64 x) {
    const auto& P = lp.params();
    Rat64 inv(-x.den, P.N * x.num);
    BigRat xpow = rat_pow(x.to_big(), 2 * P.k - 2);
    BigRat Npow = rat_pow(BigRat((long)P.N), P.k - 1);
    return Npow * xpow * h(inv);
}

TEST_CASE("Lemma 3.2(i): simple polynomial = (id - W_N) of script-P") {
    LocalPoly lp({2, 7, 37, 29});
    auto h = [&](Rat64 x) { return lp.script_P(x); };
    for (Rat64 x : {Rat64(1, 2), Rat64(1, 3), Rat64(2, 5)}) {
        BigRat lhs = lp.simple_form_polynomial(x);
        BigRat rhs = lp.script_P(x) - slash_WN(lp, h, x);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Lemma 3.2(ii): simple polynomial is anti-invariant under W_N") {
    for (auto [N, D, D0] : {std::tuple<i64, i64, i64>{7, 37, 29}, {7, 92, 29}}) {
        LocalPoly lp({2, N, D, D0});
        auto h = [&](Rat64 x) { return lp.simple_form_polynomial(x); };
        for (Rat64 x : {Rat64(1, 2), Rat64(1, 3), Rat64(2, 5), Rat64(-3, 4), Rat64(7, 5)})
            CHECK(slash_WN(lp, h, x) == -h(x));
    }
}

TEST_CASE("constancy detection: Table 1 vanishing vs non-vanishing columns") {
    std::vector<Rat64> xs{Rat64(1, 2), Rat64(1, 9),  Rat64(1, 3),
                          Rat64(1, 10), Rat64(1, 5), Rat64(1, 12)};
    LocalPoly p92({2, 7, 92, 29});
    std::vector<BigRat> table;
    CHECK(is_constant_exact([&](Rat64 x) { return p92.script_P(x); }, xs, &table));
    for (const BigRat& v : table) CHECK(v == BigRat(576));
    LocalPoly p37({2, 7, 37, 29});
    CHECK(is_constant_exact([&](Rat64 x) { return p37.script_P(x); }, xs));
    LocalPoly p57({2, 7, 57, 29});
    CHECK(!is_constant_exact([&](Rat64 x) { return p57.script_P(x); }, xs));
    LocalPoly p44({2, 7, 44, 29});
    CHECK(!is_constant_exact([&](Rat64 x) { return p44.script_P(x); }, xs));
}

TEST_CASE("default sample set") {
    LocalPoly lp({2, 7, 37, 29});
    auto s = lp.default_samples(3);
    REQUIRE(s.size() == 3);
    // denominators prime and coprime to 7 * 1073 = 7 * 29 * 37
    CHECK(s[0] == Rat64(1, 2));
    CHECK(s[1] == Rat64(1, 3));
    CHECK(s[2] == Rat64(1, 5));
}

TEST_CASE("c_infty series and gamma bridge at reduced a_max") {
    LocalPoly lp({2, 7, 92, 29});
    CInftyResult c = lp.c_infty_series(120000);
    double gamma = lp.gamma_constant(c.value);
    // gamma(7, 29, 92) = 576 exactly (Theorem 1.3 constant); truncation at
    // 1.2e5 leaves an error well below 1e-2 in gamma
    CHECK(std::abs(gamma - 576.0) < 1e-2);
    CHECK(c.tail_bound > 0);
    CHECK(c.tail_bound < 1e-3);
    // eval_P constancy across the vanishing column: differences are exactly
    // the scaled exact script-P differences, which vanish
    double P1 = lp.eval_P(Rat64(1, 2), 50000);
    double P2 = lp.eval_P(Rat64(1, 3), 50000);
    CHECK(P1 == P2);
}
