#include <catch2/catch_amalgamated.hpp>

#include "lhmf/hecke.hpp"

using namespace lhmf;

TEST_CASE("T_p on constants and translation invariance") {
    RatFunction one = [](Rat64) { return BigRat(5); };
    auto T3 = apply_Tp(one, 3, 2);
    // weight 2-2k, k=2: constant c goes to c (p^-3 + 1)
    CHECK(T3(Rat64(1, 2)) == BigRat(5) * make_rat(28, 27));
    LocalPoly lp({2, 7, 57, 29});
    auto h = memoize_mod1([&](Rat64 x) { return lp.script_P(x); });
    auto T2 = apply_Tp(h, 2, 2);
    for (Rat64 x : {Rat64(1, 3), Rat64(2, 5), Rat64(-1, 4)})
        CHECK(T2(x) == T2(x + 1));
    CHECK_THROWS_AS(apply_Tp(one, 7, 2, 7), std::domain_error);   // p | N
    CHECK_THROWS_AS(apply_Tp(one, 6, 2), std::domain_error);      // p not prime
}

TEST_CASE("Hecke operators commute on script-P") {
    LocalPoly lp({2, 15, 76, 61});
    RatFunction h = [&](Rat64 x) { return lp.script_P(x); };
    HeckePolynomial ab{{HeckeFactor::linear(7, BigRat(0)), HeckeFactor::linear(11, BigRat(0))}, 2};
    HeckePolynomial ba{{HeckeFactor::linear(11, BigRat(0)), HeckeFactor::linear(7, BigRat(0))}, 2};
    CHECK(apply_polynomial(h, ab, 15)(Rat64(1, 2)) == apply_polynomial(h, ba, 15)(Rat64(1, 2)));
}

TEST_CASE("constant multiplier through the presets") {
    CHECK(constant_multiplier(hecke_preset("level7-trivial")) == BigRat(1));
    CHECK(constant_multiplier(hecke_preset("level15-paper")) ==
          make_rat(1300, 1331) * make_rat(368, 343));
    // level 22: quadratic factor at u = 13^-3 + 1 is u^2 - (80/13^3) u + 400/13^6
    BigRat u = make_rat(1, 13 * 13 * 13) + 1;
    BigRat f13 = u * u - make_rat(80, 13 * 13 * 13) * u + make_rat(400, 4826809LL * 1000) * make_rat(1000, 1);
    f13 = u * u - make_rat(80, 2197) * u + BigRat(400) / rat_pow(BigRat(13), 6);
    CHECK(constant_multiplier(hecke_preset("level22-paper")) ==
          f13 * make_rat(35, 27) * make_rat(129, 125));
    CHECK_THROWS_AS(hecke_preset("nope"), std::domain_error);
}

TEST_CASE("empty polynomial is the identity") {
    LocalPoly lp({2, 7, 57, 29});
    RatFunction h = [&](Rat64 x) { return lp.script_P(x); };
    auto id = apply_polynomial(h, hecke_preset("level7-trivial"), 7);
    CHECK(id(Rat64(1, 2)) == BigRat(420));
}

TEST_CASE("level-15 preset pinned values") {
    LocalPoly lp181({2, 15, 181, 61});
    RatFunction h181 = [&](Rat64 x) { return lp181.script_P(x); };
    auto H181 = apply_polynomial(h181, hecke_preset("level15-paper"), 15);
    CHECK(H181(Rat64(1, 2)) == make_rat(100684800, 41503));
    LocalPoly lp76({2, 15, 76, 61});
    RatFunction h76 = [&](Rat64 x) { return lp76.script_P(x); };
    auto H76 = apply_polynomial(h76, hecke_preset("level15-paper"), 15);
    CHECK(H76(Rat64(1, 5)) == make_rat(1024LL * 3 * 25 * 19 * 23, 343 * 121));
}

TEST_CASE("detect_vanishing on Table-1 and Table-2 columns") {
    LocalPoly p92({2, 7, 92, 29});
    std::vector<Rat64> xs{Rat64(1, 2), Rat64(1, 9),  Rat64(1, 3),
                          Rat64(1, 10), Rat64(1, 5), Rat64(1, 12)};
    auto rep = detect_vanishing(p92, hecke_preset("level7-trivial"), xs);
    CHECK(rep.vanishing);
    CHECK(rep.common_value == BigRat(576));
    LocalPoly p57({2, 7, 57, 29});
    auto rep57 = detect_vanishing(p57, hecke_preset("level7-trivial"), xs);
    CHECK(!rep57.vanishing);
    LocalPoly p229({2, 15, 229, 61});
    auto rep229 = detect_vanishing(p229, hecke_preset("level15-paper"));
    CHECK(rep229.vanishing);
    CHECK(rep229.common_value == make_rat(1024LL * 243 * 25 * 23, 343 * 121));
    // too few samples
    CHECK_THROWS_AS(detect_vanishing(p92, hecke_preset("level7-trivial"), {Rat64(1, 2)}),
                    std::domain_error);
}

TEST_CASE("factor order never changes values") {
    LocalPoly lp({2, 15, 124, 61});
    RatFunction h = [&](Rat64 x) { return lp.script_P(x); };
    HeckePolynomial fwd = hecke_preset("level15-paper");
    HeckePolynomial rev = fwd;
    std::swap(rev.factors[0], rev.factors[1]);
    for (Rat64 x : {Rat64(1, 2), Rat64(1, 3)})
        CHECK(apply_polynomial(h, fwd, 15)(x) == apply_polynomial(h, rev, 15)(x));
}
