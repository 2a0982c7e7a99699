#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qshuffle/tiny.hpp"

using namespace qshuffle;

TEST_CASE("materialized generator matches the worked closed form") {
    AlgebraSignature sig(2, 1);
    TinyContext ctx = make_tiny_context(sig, DegreeVector::uniform(3, 1));
    auto var = [&](int i) { return SparseLaurent::variable(ctx.cat, i); };
    auto x = var(0), y = var(1), z = var(2), q = var(3);
    SymbolicRational got = materialize_tiny(builtin_G(sig, 0, 1));
    // q^{-1} (1 - q^2)^2 x y z / ((x-y)(y-z)(z-x))
    SparseLaurent qinv = SparseLaurent::variable(ctx.cat, 3, -1);
    SparseLaurent num = qinv * (SparseLaurent::one() - q * q) *
                        (SparseLaurent::one() - q * q) * x * y * z;
    SymbolicRational want(num, (x - y) * (y - z) * (z - x));
    CHECK(got == want);
}

TEST_CASE("materialized monomial generator") {
    AlgebraSignature sig(2, 1);
    auto e = gen(sig, 1, 2);
    SymbolicRational v = materialize_tiny(e);
    TinyContext ctx = make_tiny_context(sig, e->degree);
    auto x = SparseLaurent::variable(ctx.cat, 0);
    CHECK(v == SymbolicRational(x * x));
}

TEST_CASE("materialized two-color product has the combined structure factors") {
    // x_1^0 * x_2^0 for three bosonic colors: single-orientation shuffle sum
    AlgebraSignature sig(3, 0);
    auto e = prod(gen(sig, 1, 0), gen(sig, 2, 0));
    TinyContext ctx = make_tiny_context(sig, e->degree);
    auto x1 = SparseLaurent::variable(ctx.cat, 0);
    auto x2 = SparseLaurent::variable(ctx.cat, 1);
    auto q = SparseLaurent::variable(ctx.cat, 3);
    auto d = SparseLaurent::variable(ctx.cat, 4);
    SymbolicRational got = materialize_tiny(e);
    // omega_{1,2}(x1, x2) = (x1 - q1 x2)/(x1 - x2), q1 = d/q
    SparseLaurent q1;
    {
        SparseLaurent::Exps v(ctx.cat->size(), 0);
        v[3] = -1;
        v[4] = 1;
        q1 = SparseLaurent::monomial(ctx.cat, v, Rat(1));
    }
    SymbolicRational want(x1 - q1 * x2, x1 - x2);
    CHECK(got == want);
}

TEST_CASE("size cap is enforced") {
    AlgebraSignature sig(2, 1);
    CHECK_THROWS_AS(materialize_tiny(builtin_G(sig, 0, 3)), SizeExceeded);
}

TEST_CASE("solver dimension matches the free-algebra count and spans the family") {
    AlgebraSignature sig(2, 1);
    auto res = membership_solve_tiny(sig, 1);
    CHECK(res.dimension == 3);
    CHECK(static_cast<std::uint64_t>(res.dimension) == dim_R(3, 1));

    TinyContext ctx = make_tiny_context(sig, DegreeVector::uniform(3, 1));
    auto var = [&](int i) { return SparseLaurent::variable(ctx.cat, i); };
    auto x = var(0), y = var(1), z = var(2), d = var(4), s1 = var(5), s2 = var(6);
    CHECK(tiny_space_contains(res, x * y * z, 3));
    CHECK(tiny_space_contains(res, s1 * s2 * d * d * x * x * y + s2 * d * d * y * y * z + z * z * x, 3));
    CHECK(tiny_space_contains(res, s1 * s2 * d * d * y * y * x + s1 * x * x * z + z * z * y, 3));
    CHECK(!tiny_space_contains(res, x * x * y, 3));
    CHECK(!tiny_space_contains(res, x * x * z, 3));
    // the three G numerators all lie in the space
    for (int r = 0; r <= 2; ++r)
        CHECK(tiny_space_contains(res, tiny_numerator(builtin_G(sig, r, 1)), 3));
}
