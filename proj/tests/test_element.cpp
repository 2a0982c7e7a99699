#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qshuffle/checks.hpp"
#include "qshuffle/element.hpp"

using namespace qshuffle;

namespace {

ParamPoint<Rat> point_for(const AlgebraSignature& sig, std::uint64_t seed) {
    Rng rng(seed);
    return sample_generic_point(sig, rng, 60);
}

VarTable<Rat> rand_vars(const DegreeVector& d, std::uint64_t seed, long bound = 400) {
    Rng rng(seed);
    return VarTable<Rat>::random(d, rng, bound);
}

}  // namespace

TEST_CASE("unit is the identity for the product") {
    AlgebraSignature sig(2, 1);
    auto p = point_for(sig, 3);
    auto G = builtin_G(sig, 1, 1);
    auto one_g = prod(unit(sig), G);
    auto g_one = prod(G, unit(sig));
    for (std::uint64_t s = 0; s < 5; ++s) {
        auto x = rand_vars(G->degree, 100 + s);
        Rat v = evaluate<Rat>(*G, p, x);
        CHECK(evaluate<Rat>(*one_g, p, x) == v);
        CHECK(evaluate<Rat>(*g_one, p, x) == v);
    }
}

TEST_CASE("two bosonic generators of one color multiply to 1 + q2") {
    AlgebraSignature sig(3, 0);
    auto p = point_for(sig, 5);
    auto e = prod(gen(sig, 1, 0), gen(sig, 1, 0));
    auto x = rand_vars(e->degree, 7);
    CHECK(evaluate<Rat>(*e, p, x) == Rat(1) + p.q2());
}

TEST_CASE("a fermionic generator squares to zero") {
    AlgebraSignature sig(2, 1);
    auto p = point_for(sig, 5);
    for (int color : {2, 3}) {
        auto e = prod(gen(sig, color, 0), gen(sig, color, 0));
        for (std::uint64_t s = 0; s < 3; ++s) {
            auto x = rand_vars(e->degree, 11 + s);
            CHECK(evaluate<Rat>(*e, p, x).is_zero());
        }
    }
}

TEST_CASE("generator with negative exponent") {
    AlgebraSignature sig(2, 1);
    auto p = point_for(sig, 5);
    auto e = gen(sig, 1, -1);
    VarTable<Rat> x;
    x.v = {{Rat(2, 3)}, {}, {}};
    CHECK(evaluate<Rat>(*e, p, x) == Rat(3, 2));
}

TEST_CASE("associativity at random points") {
    for (auto [m, n] : {std::pair{2, 1}, std::pair{3, 0}, std::pair{1, 2}}) {
        AlgebraSignature sig(m, n);
        auto p = point_for(sig, 17);
        auto F = gen(sig, 1, 0);
        auto G = gen(sig, 2, 1);
        auto H = gen(sig, sig.K(), -1);
        auto lhs = prod(prod(F, G), H);
        auto rhs = prod(F, prod(G, H));
        for (std::uint64_t s = 0; s < 5; ++s) {
            auto x = rand_vars(lhs->degree, 31 + s);
            CHECK(evaluate<Rat>(*lhs, p, x) == evaluate<Rat>(*rhs, p, x));
        }
    }
}

TEST_CASE("identical bosonic factors commute") {
    AlgebraSignature sig(3, 1);
    auto p = point_for(sig, 19);
    auto F = gen(sig, 1, 2);
    auto ab = prod(F, F);
    auto cm = commutator(F, F);
    for (std::uint64_t s = 0; s < 3; ++s) {
        auto x = rand_vars(ab->degree, 41 + s);
        CHECK(evaluate<Rat>(*cm, p, x).is_zero());
    }
}

TEST_CASE("sum and scalar multiples") {
    AlgebraSignature sig(2, 1);
    auto p = point_for(sig, 23);
    auto F = gen(sig, 1, 1);
    auto e = sum({smul(Rat(2, 3), F), smul(Rat(1, 3), F)});
    auto x = rand_vars(F->degree, 43);
    CHECK(evaluate<Rat>(*e, p, x) == evaluate<Rat>(*F, p, x));
    CHECK_THROWS_AS(sum({gen(sig, 1, 0), gen(sig, 2, 0)}), DegreeMismatch);
}

TEST_CASE("explicit numerator over the canonical denominator") {
    AlgebraSignature sig(2, 1);
    auto p = point_for(sig, 29);
    DegreeVector deg = DegreeVector::uniform(3, 1);
    auto cat = explicit_catalog(sig, deg);
    // numerator x1_1 * x2_1 * x3_1, i.e. the xyz family member
    auto num = SparseLaurent::variable(cat, 0) * SparseLaurent::variable(cat, 1) *
               SparseLaurent::variable(cat, 2);
    auto e = explicit_elem(sig, deg, num);
    VarTable<Rat> x;
    x.v = {{Rat(2)}, {Rat(3)}, {Rat(5)}};
    // (x-y)(y-z)(z-x) = (-1)(-2)(3) = 6
    CHECK(evaluate<Rat>(*e, p, x) == Rat(2 * 3 * 5, 6));
}

TEST_CASE("cyclic relabeling is an isomorphism onto the swapped algebra") {
    AlgebraSignature sig(2, 1), tgt(1, 2);
    auto p = point_for(sig, 31);
    ParamPoint<Rat> pinv;
    pinv.q = p.q.inv();
    pinv.d = p.d.inv();
    for (int i = 1; i <= 3; ++i) pinv.s.push_back(p.s_at(i).inv());

    const int m = sig.m, K = sig.K();
    std::vector<long> exps{0, 1, -1};
    std::vector<ElemPtr> src, dst;
    for (int c = 1; c <= K; ++c) {
        src.push_back(gen(sig, c, exps[c - 1]));
        dst.push_back(gen(tgt, tgt.color(c - m), exps[c - 1]));
    }
    auto F = prod_chain(src);
    auto Phi = prod_chain(dst);
    for (std::uint64_t s = 0; s < 5; ++s) {
        auto w = rand_vars(Phi->degree, 53 + s);
        VarTable<Rat> x;
        x.v.resize(K);
        for (int i = 1; i <= K; ++i) x.v[i - 1] = w.v[tgt.color(i - m) - 1];
        CHECK(evaluate<Rat>(*F, p, x) == evaluate<Rat>(*Phi, pinv, w));
    }
}

TEST_CASE("products of wheel-passing elements pass the wheel check") {
    AlgebraSignature sig(2, 1);
    auto p = point_for(sig, 37);
    auto F = prod_chain({gen(sig, 3, 0), gen(sig, 1, 0), gen(sig, 2, 0)});
    auto FF = prod(F, F);
    Rng rng(61);
    auto res = check_wheel(subject_of(FF, p), rng, 2, 300, 20);
    CHECK(res.passed);
    CHECK(res.cases > 0);
}

TEST_CASE("explicit constant numerator fails the wheel conditions") {
    AlgebraSignature sig(2, 1);
    auto p = point_for(sig, 41);
    DegreeVector deg = DegreeVector::uniform(3, 2);
    auto e = explicit_elem(sig, deg, SparseLaurent::one());
    Rng rng(67);
    auto res = check_wheel(subject_of(e, p), rng, 2, 300, 20);
    CHECK(!res.passed);
}

TEST_CASE("degree-zero element passes the wheel check vacuously") {
    AlgebraSignature sig(2, 1);
    auto p = point_for(sig, 43);
    Rng rng(71);
    auto res = check_wheel(subject_of(unit(sig), p), rng, 2, 300, 20);
    CHECK(res.passed);
    CHECK(res.cases == 0);
}

TEST_CASE("symmetry check distinguishes symmetric from skew numerators") {
    AlgebraSignature sig(2, 1);
    auto p = point_for(sig, 47);
    // numerator x2_1 + x2_2 is symmetric in the fermionic pair: must fail
    DegreeVector deg(std::vector<int>{0, 2, 0});
    auto cat = explicit_catalog(sig, deg);
    auto num = SparseLaurent::variable(cat, 0) + SparseLaurent::variable(cat, 1);
    auto bad = explicit_elem(sig, deg, num);
    Rng rng(73);
    CHECK(!check_symmetry(subject_of(bad, p), rng, 2, 300, 20).passed);
    // the skew numerator x2_1 - x2_2 passes
    auto good = explicit_elem(sig, deg, SparseLaurent::variable(cat, 0) -
                                            SparseLaurent::variable(cat, 1));
    CHECK(check_symmetry(subject_of(good, p), rng, 2, 300, 20).passed);
}

TEST_CASE("pole shape: generators and their products pass") {
    AlgebraSignature sig(2, 1);
    auto p = point_for(sig, 53);
    Rng rng(79);
    CHECK(check_pole_shape(subject_of(gen(sig, 1, -2), p), rng, 2, 200, 20).passed);
    auto F = prod_chain({gen(sig, 3, 0), gen(sig, 1, 1), gen(sig, 2, 0)});
    CHECK(check_pole_shape(subject_of(F, p), rng, 2, 200, 20).passed);
}
