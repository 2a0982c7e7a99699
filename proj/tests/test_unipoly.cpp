#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qshuffle/rng.hpp"
#include "qshuffle/unipoly.hpp"

using namespace qshuffle;

static QX rand_ratfn(Rng& rng) {
    auto rand_poly = [&](int deg) {
        std::vector<Rat> c;
        for (int i = 0; i <= deg; ++i) c.push_back(random_scalar(rng, 20));
        return QP(std::move(c));
    };
    QP num = rand_poly(static_cast<int>(rng.uniform(0, 3)));
    QP den = rand_poly(static_cast<int>(rng.uniform(0, 3)));
    if (den.is_zero()) den = QP::one();
    return QX(num, den);
}

TEST_CASE("polynomial canonical form and arithmetic") {
    QP p(std::vector<Rat>{Rat(1), Rat(2), Rat(0)});
    CHECK(p.degree() == 1);
    CHECK(QP().degree() == -1);
    QP q(std::vector<Rat>{Rat(-1), Rat(1)});  // xi - 1
    CHECK((q * q).coeff(1) == Rat(-2));
    auto [quo, rem] = divrem(q * q + QP::one(), q);
    CHECK(quo == q);
    CHECK(rem == QP::one());
    CHECK(gcd(q * q, q * QP(std::vector<Rat>{Rat(3), Rat(3)})) == q);
}

TEST_CASE("limit at zero") {
    // constant 5 -> 5
    CHECK(*limit_at_zero(QX(Rat(5))) == Rat(5));
    // (xi^2 + xi)/(3 xi) -> 1/3
    QX f(QP(std::vector<Rat>{Rat(0), Rat(1), Rat(1)}), QP(std::vector<Rat>{Rat(0), Rat(3)}));
    CHECK(*limit_at_zero(f) == Rat(1, 3));
    // 1/xi -> no limit
    QX g(QP::one(), QP::monomial(Rat(1), 1));
    CHECK(!limit_at_zero(g).has_value());
}

TEST_CASE("limit at infinity") {
    // (xi^2+1)/(3xi^2 - xi) -> 1/3
    QX f(QP(std::vector<Rat>{Rat(1), Rat(0), Rat(1)}), QP(std::vector<Rat>{Rat(0), Rat(-1), Rat(3)}));
    CHECK(*limit_at_infinity(f) == Rat(1, 3));
    CHECK(*limit_at_infinity(QX(Rat(7))) == Rat(7));
    CHECK(!limit_at_infinity(QX::xi()).has_value());
}

TEST_CASE("cancellation: (f*g)/g == f in canonical form") {
    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        QX f = rand_ratfn(rng);
        QX g = rand_ratfn(rng);
        if (g.is_zero()) continue;
        CHECK((f * g) / g == f);
    }
}

TEST_CASE("limits are multiplicative when both exist") {
    Rng rng(13);
    for (int t = 0; t < 30; ++t) {
        QX f = rand_ratfn(rng);
        QX g = rand_ratfn(rng);
        auto lf = limit_at_zero(f), lg = limit_at_zero(g);
        if (lf && lg) {
            auto lfg = limit_at_zero(f * g);
            REQUIRE(lfg.has_value());
            CHECK(*lfg == *lf * *lg);
        }
    }
}

TEST_CASE("limit at infinity of f(1/xi) equals limit at zero of f") {
    Rng rng(17);
    for (int t = 0; t < 30; ++t) {
        QX f = rand_ratfn(rng);
        // substitution xi -> 1/xi by coefficient reversal with degree padding
        int n = std::max(f.num().degree(), f.den().degree());
        auto pad_rev = [&](const QP& p) {
            std::vector<Rat> c;
            for (int i = n; i >= 0; --i) c.push_back(p.coeff(i));
            return QP(std::move(c));
        };
        QX finv(pad_rev(f.num()), pad_rev(f.den()));
        auto a = limit_at_infinity(finv);
        auto b = limit_at_zero(f);
        if (a || b) {
            REQUIRE(a.has_value());
            REQUIRE(b.has_value());
            CHECK(*a == *b);
        }
    }
}
