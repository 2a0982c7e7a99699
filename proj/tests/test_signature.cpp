#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qshuffle/signature.hpp"

using namespace qshuffle;

static ParamPoint<Rat> sample_point(int K, std::uint64_t seed = 3) {
    Rng rng(seed);
    ParamPoint<Rat> p;
    p.q = random_scalar(rng, 50);
    p.d = random_scalar(rng, 50);
    Rat prod(1);
    for (int i = 1; i < K; ++i) {
        p.s.push_back(random_scalar(rng, 50));
        prod = prod * p.s.back();
    }
    p.s.push_back(prod.inv());
    return p;
}

TEST_CASE("color bookkeeping") {
    AlgebraSignature sig(2, 1);
    CHECK(sig.K() == 3);
    CHECK(sig.color(0) == 3);
    CHECK(sig.color(4) == 1);
    CHECK(sig.color(-1) == 2);
    CHECK(sig.fermionic(2));
    CHECK(sig.fermionic(3));
    CHECK(!sig.fermionic(1));
    CHECK(sig.before_equator(1));
    CHECK(!sig.after_equator(3));
    AlgebraSignature so(3, 0);
    CHECK(!so.fermionic(3));
    CHECK_THROWS(AlgebraSignature(2, 2));
}

TEST_CASE("parameter point invariants") {
    Rng rng(5);
    AlgebraSignature sig(2, 1);
    auto p = sample_generic_point(sig, rng, 100);
    CHECK(p.q1() * p.q2() * p.q3() == Rat(1));
    Rat prod(1);
    for (int i = 1; i <= 3; ++i) prod = prod * p.s_at(i);
    CHECK(prod == Rat(1));
    CHECK(p.s_cum(1) == Rat(1));
    CHECK(p.s_cum(2) == p.s_at(1));
    CHECK(p.s_cum(4) == p.s_cum(1));  // cyclic via prod(s) = 1
    // determinism
    Rng rng2(5);
    auto p2 = sample_generic_point(sig, rng2, 100);
    CHECK(p.q == p2.q);
    CHECK(p.s == p2.s);
}

TEST_CASE("structure function table, super case") {
    AlgebraSignature sig(2, 1);
    auto p = sample_point(3);
    Rat x = Rat(7, 2), y = Rat(5, 3);
    CHECK(omega(sig, p, 1, 1, x, y) == (x - p.q2() * y) / (x - y));
    CHECK(omega(sig, p, 2, 2, x, y) == Rat(1));  // fermionic diagonal
    CHECK(omega(sig, p, 3, 3, x, y) == Rat(1));
    CHECK(omega(sig, p, 1, 2, x, y) == (x - p.q1() * y) / (x - y));
    CHECK(omega(sig, p, 2, 3, x, y) == (x - y / p.q1()) / (x - y));
    CHECK(omega(sig, p, 3, 1, x, y) == (x - p.q1() * y) / (x - y));  // (K,1) = omega_{i-1,i} at i=1
    CHECK(omega(sig, p, 1, 3, x, y) == p.d * (x - p.q3() * y) / (x - y));
    CHECK(omega(sig, p, 2, 1, x, y) == p.d * (x - p.q3() * y) / (x - y));
    CHECK(omega(sig, p, 3, 2, x, y) == (x - y / p.q3()) / ((x - y) * p.d));
    // after-equator diagonal, bigger signature
    AlgebraSignature s32(3, 2);
    Rng rng9(9);
    auto p5 = sample_generic_point(s32, rng9, 50);
    CHECK(omega(s32, p5, 4, 4, x, y) == (x - y / p5.q2()) / (x - y));
    CHECK(omega(s32, p5, 1, 4, x, y) == Rat(1));  // non-adjacent
    CHECK(omega(s32, p5, 4, 1, x, y) == Rat(1));
}

TEST_CASE("structure function degenerations") {
    auto p = sample_point(2);
    Rat x = Rat(9, 4), y = Rat(2, 7);
    AlgebraSignature m1(1, 0);
    Rat w = omega(m1, p, 1, 1, x, y);
    Rat expect = (x - p.q1() * y) * (x - p.q2() * y) * (x - p.q3() * y) /
                 ((x - y) * (x - y) * (x - y));
    CHECK(w == expect);
    CHECK(omega(m1, p, 1, 1, p.q1() * y, y).is_zero());

    AlgebraSignature m2(2, 0);
    CHECK(omega(m2, p, 1, 1, x, y) == (x - p.q2() * y) / (x - y));
    CHECK(omega(m2, p, 1, 2, x, y) ==
          (x - p.q1() * y) * (x - p.q3() * y) / ((x - y) * (x - y)));
    CHECK(omega(m2, p, 2, 1, x, y) == omega(m2, p, 1, 2, x, y));

    AlgebraSignature m3(3, 0);
    CHECK(omega(m3, p, 2, 3, x, y) == (x - p.q1() * y) / (x - y));
    CHECK(omega(m3, p, 3, 2, x, y) == p.d * (x - p.q3() * y) / (x - y));
    CHECK(omega(m3, p, 3, 1, x, y) == (x - p.q1() * y) / (x - y));
    CHECK(omega(m3, p, 1, 3, x, y) == p.d * (x - p.q3() * y) / (x - y));
}

TEST_CASE("non-adjacent colors give 1") {
    AlgebraSignature sig(3, 1);
    auto p = sample_point(4);
    Rat x = Rat(3), y = Rat(5);
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            int diff = ((i - j) % 4 + 4) % 4;
            if (diff != 0 && diff != 1 && diff != 3) {
                CHECK(omega(sig, p, i, j, x, y) == Rat(1));
            }
        }
    }
}

TEST_CASE("limit ratios of the table entries") {
    // lim_{xi->inf} w(xi x, y) / lim_{xi->0} w(xi x, y) over the RatFn field,
    // for every adjacent pair; the ratio is the q-power the subalgebra proof uses
    AlgebraSignature sig(2, 1);
    auto pr = sample_point(3);
    auto p = lift_to_ratfn(pr);
    QX x = QX::xi() * QX(Rat(7, 3));
    QX y = QX(Rat(4, 9));
    auto ratio = [&](int i, int j) {
        QX w = omega(sig, p, i, j, x, y);
        auto a = limit_at_infinity(w);
        auto b = limit_at_zero(w);
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        return *a / *b;
    };
    CHECK(ratio(1, 1) == pr.q2().inv());          // before equator
    CHECK(ratio(3, 1) == pr.q1().inv());          // omega_{i-1,i}, i=1 <= m
    CHECK(ratio(2, 3) == pr.q1());                // omega_{i-1,i}, i=m+n
    CHECK(ratio(1, 3) == pr.q3().inv());          // omega_{i,i-1}, i=1
    CHECK(ratio(3, 2) == pr.q3());                // omega_{i,i-1}, i=m+n
    // second-argument scaling is the reciprocal
    QX x2 = QX(Rat(7, 3));
    QX y2 = QX::xi() * QX(Rat(4, 9));
    QX w = omega(sig, p, 1, 1, x2, y2);
    CHECK(*limit_at_infinity(w) / *limit_at_zero(w) == pr.q2());
}
