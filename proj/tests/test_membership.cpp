#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qshuffle/membership.hpp"

using namespace qshuffle;

namespace {

ParamPoint<Rat> point_for(const AlgebraSignature& sig, std::uint64_t seed) {
    Rng rng(seed);
    return sample_generic_point(sig, rng, 40);
}

}  // namespace

TEST_CASE("scaled evaluation basics") {
    AlgebraSignature sig(2, 1);
    auto p = point_for(sig, 3);
    auto G = builtin_G(sig, 1, 1);
    auto s = subject_of(G, p);
    Rng rng(5);
    VarTable<Rat> base = VarTable<Rat>::random(G->degree, rng, 200);
    // zero scaling: a constant function equal to the plain value
    ScalingVector k0{{0, 0, 0}};
    QX f = s.at_xi(scaled_assignment(base, k0));
    CHECK(f == QX(s.at(base)));
    // full scaling: target forced to 1
    ScalingVector kf{{1, 1, 1}};
    CHECK(membership_target(sig, p, kf, 1) == Rat(1));
    // the worked case k = (1,0,0): both limits exist with ratio s_1
    ScalingVector k1{{1, 0, 0}};
    CHECK(membership_target(sig, p, k1, 1) == p.s_at(1));
    QX g = s.at_xi(scaled_assignment(base, k1));
    auto l0 = limit_at_zero(g);
    auto li = limit_at_infinity(g);
    REQUIRE(l0.has_value());
    REQUIRE(li.has_value());
    CHECK(*li == p.s_at(1) * *l0);
}

TEST_CASE("targets multiply to 1 on complementary scalings") {
    AlgebraSignature sig(2, 1);
    auto p = point_for(sig, 7);
    const int N = 2;
    for (const auto& k : all_scaling_vectors(DegreeVector::uniform(3, N))) {
        ScalingVector kc{{N - k.k[0], N - k.k[1], N - k.k[2]}};
        CHECK(membership_target(sig, p, k, N) * membership_target(sig, p, kc, N) == Rat(1));
    }
}

TEST_CASE("generators pass membership; ratios are base-point independent") {
    AlgebraSignature sig(2, 1);
    auto p = point_for(sig, 11);
    Rng rng(13);
    for (int r = 0; r <= 2; ++r) {
        auto v = membership_check(subject_of(builtin_G(sig, r, 1), p), rng, 2, 200, 20);
        CHECK(v.passed);
        auto vs = membership_check(subject_of(builtin_G(sig, r, 1, true), p), rng, 2, 200, 20);
        CHECK(vs.passed);
    }
}

TEST_CASE("the degree-zero unit passes vacuously") {
    AlgebraSignature sig(2, 1);
    auto p = point_for(sig, 17);
    Rng rng(19);
    CHECK(membership_check(subject_of(unit(sig), p), rng, 1, 200, 20).passed);
}

TEST_CASE("an explicit non-member numerator fails some scaling vector") {
    AlgebraSignature sig(2, 1);
    auto p = point_for(sig, 23);
    DegreeVector deg = DegreeVector::uniform(3, 1);
    auto cat = explicit_catalog(sig, deg);
    // numerator x^2 y: passes the degree checks but not the ratio conditions
    auto num = SparseLaurent::variable(cat, 0, 2) * SparseLaurent::variable(cat, 1);
    Rng rng(29);
    auto v = membership_check(subject_of(explicit_elem(sig, deg, num), p), rng, 1, 200, 20);
    CHECK(!v.passed);
    REQUIRE(!v.failures.empty());
}

TEST_CASE("membership is closed under the shuffle product") {
    AlgebraSignature sig(2, 1);
    auto p = point_for(sig, 31);
    Rng rng(37);
    auto F = builtin_G(sig, 1, 1);
    auto G = builtin_G(sig, 2, 1);
    auto v = membership_check(subject_of(prod(F, G), p), rng, 1, 150, 20);
    CHECK(v.passed);
}

TEST_CASE("non-uniform degrees fail the ratio conditions") {
    AlgebraSignature sig(2, 1);
    auto p = point_for(sig, 41);
    Rng rng(43);
    // a single generator: k = (1,0,0) wants ratio s_1 but the value is constant
    auto bad = gen(sig, 1, 0);
    CHECK(!nonsquare_degree_probe(subject_of(bad, p), rng, 1, 200, 20).passed);
    // degree (1,1,0) product
    auto bad2 = prod(gen(sig, 1, 0), gen(sig, 2, 0));
    CHECK(!nonsquare_degree_probe(subject_of(bad2, p), rng, 1, 200, 20).passed);
    // uniform-degree control passes
    CHECK(membership_check(subject_of(builtin_G(sig, 0, 1), p), rng, 1, 200, 20).passed);
}
