#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qshuffle/serialize.hpp"

using namespace qshuffle;

namespace {

/// round-trip an element and require identical evaluations at random points
void roundtrip_check(const ElemPtr& e, std::uint64_t seed) {
    json j = element_to_json(e->sig, *e);
    ElemPtr back = element_from_json(j);
    CHECK(back->degree == e->degree);
    Rng rng(seed);
    auto p = sample_generic_point(e->sig, rng, 40);
    for (int t = 0; t < 5; ++t) {
        VarTable<Rat> x = VarTable<Rat>::random(e->degree, rng, 300);
        CHECK(evaluate<Rat>(*e, p, x) == evaluate<Rat>(*back, p, x));
    }
    // serialization is stable
    CHECK(element_to_json(back->sig, *back) == j);
}

}  // namespace

TEST_CASE("element trees round-trip through JSON") {
    AlgebraSignature sig(2, 1);
    roundtrip_check(gen(sig, 1, -2), 3);
    roundtrip_check(builtin_G(sig, 2, 1), 5);
    roundtrip_check(builtin_G(sig, 1, 1, true), 7);
    roundtrip_check(prod(gen(sig, 3, 0), gen(sig, 1, 1)), 11);
    roundtrip_check(sum({smul(Rat(2, 3), builtin_G(sig, 0, 1)), builtin_G(sig, 0, 1)}), 13);
    roundtrip_check(builtin_t(sig, 2, 1), 17);
    roundtrip_check(builtin_J(sig, 3, 2, 1), 19);
    roundtrip_check(builtin_P(sig, 1), 23);
    roundtrip_check(builtin_I(sig, 1, 2, 2, true), 29);
    AlgebraSignature one(1, 0);
    roundtrip_check(builtin_eps(one, 2, 2), 31);
}

TEST_CASE("explicit numerators round-trip") {
    AlgebraSignature sig(2, 1);
    DegreeVector deg = DegreeVector::uniform(3, 1);
    auto cat = explicit_catalog(sig, deg);
    auto num = Rat(3, 7) * (SparseLaurent::variable(cat, 0) * SparseLaurent::variable(cat, 1) *
                            SparseLaurent::variable(cat, 2)) +
               SparseLaurent::variable(cat, 5) * SparseLaurent::variable(cat, 0, 2) *
                   SparseLaurent::variable(cat, 2);
    roundtrip_check(explicit_elem(sig, deg, num), 37);
}

TEST_CASE("points round-trip") {
    AlgebraSignature sig(2, 1);
    Rng rng(41);
    auto p = sample_generic_point(sig, rng, 50);
    p.kappa = Rat(4, 5);
    VarTable<Rat> x = VarTable<Rat>::random(DegreeVector::uniform(3, 2), rng, 100);
    json j = point_to_json(p, x);
    auto [p2, x2] = point_from_json(j);
    CHECK(p2.q == p.q);
    CHECK(p2.d == p.d);
    CHECK(p2.s == p.s);
    REQUIRE(p2.kappa.has_value());
    CHECK(*p2.kappa == *p.kappa);
    CHECK(x2.v == x.v);
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS(element_from_json(json::parse(R"({"m":2,"n":1,"element":{"op":"what"}})")));
    CHECK_THROWS(element_from_json(json::parse(R"({"m":2,"n":2,"element":{"op":"gen"}})")));
}
