#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algspec/io.hpp"
#include "algspec/roots.hpp"
#include "support/random_values.hpp"

using namespace algspec;

namespace {
const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor F5 = FieldDescriptor::prime_field(5);
const FieldDescriptor Qt = FieldDescriptor::rational_functions(Q, "t");
}  // namespace

TEST_CASE("descriptor invariants") {
    CHECK_THROWS_AS(FieldDescriptor::prime_field(6), Error);
    CHECK_THROWS_AS(FieldDescriptor::prime_field(1), Error);
    CHECK_THROWS_AS(FieldDescriptor::prime_field(65537), Error);
    CHECK_THROWS_AS(FieldDescriptor::rational_functions(Qt, "s"), Error);
    CHECK(FieldDescriptor::prime_field(2).characteristic() == 2);
    CHECK(Qt.characteristic() == 0);
    CHECK(Qt.name() == "Q(t)");
}

TEST_CASE("field arithmetic examples") {
    CHECK(FieldElem::rational(1, 2) + FieldElem::rational(1, 3) == FieldElem::rational(5, 6));
    CHECK(FieldElem::from_int(F5, 3).inv() == FieldElem::from_int(F5, 2));

    FieldElem t_over = parse_scalar(Qt, "t/(t+1)");
    FieldElem over_t = parse_scalar(Qt, "(t+1)/t");
    CHECK((t_over * over_t).is_one());

    CHECK_THROWS_AS(FieldElem::from_int(Q, 1) / FieldElem::zero(Q), Error);
    CHECK_THROWS_AS(FieldElem::from_int(Q, 1) + FieldElem::from_int(F5, 1), Error);
}

TEST_CASE("normalization invariants") {
    CHECK(FieldElem::rational(2, -4) == FieldElem::rational(-1, 2));
    CHECK(FieldElem::from_int(F5, 7) == FieldElem::from_int(F5, 2));
    // monic denominator, coprime parts
    FieldElem f = parse_scalar(Qt, "(2*t + 2)/(2*t^2 + 2*t)");
    const RatFun& r = f.as_rational_function();
    CHECK(r.den.is_monic());
    CHECK(format_scalar(f) == "(1)/(t)");
}

TEST_CASE("mul(a, inv(a)) = 1 exactly") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 50; ++i) {
        FieldElem a = testgen::random_scalar(rng, Q, 20);
        if (!a.is_zero()) CHECK((a * a.inv()).is_one());
        FieldElem b = testgen::random_scalar(rng, F5);
        if (!b.is_zero()) CHECK((b * b.inv()).is_one());
        FieldElem c = testgen::random_ratfun(rng, Qt, 3);
        if (!c.is_zero()) CHECK((c * c.inv()).is_one());
    }
}

TEST_CASE("rf_sqrt examples") {
    FieldElem f = parse_scalar(Qt, "(t^2 + 2*t + 1)/t^2");
    auto g = rf_sqrt(f);
    REQUIRE(g.has_value());
    CHECK(*g * *g == f);
    CHECK(format_scalar(*g) == "(t + 1)/(t)");

    CHECK_FALSE(rf_sqrt(parse_scalar(Qt, "t")).has_value());
    CHECK(rf_sqrt(FieldElem::one(Qt)) == FieldElem::one(Qt));
    CHECK(rf_sqrt(FieldElem::zero(Qt)) == FieldElem::zero(Qt));

    // leading ratio must be a rational square (deviation from the complex case)
    CHECK_FALSE(rf_sqrt(parse_scalar(Qt, "2")).has_value());
    CHECK(rf_sqrt(parse_scalar(Qt, "4/9")).has_value());
    CHECK_FALSE(rf_sqrt(parse_scalar(Qt, "-1")).has_value());
    CHECK_FALSE(rf_sqrt(parse_scalar(Qt, "(2*t^2 + 4*t + 2)/(t^2)")).has_value());
}

TEST_CASE("rf_sqrt round trip on random squares") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        FieldElem g = testgen::random_ratfun(rng, Qt, 3);
        FieldElem f = g * g;
        auto h = rf_sqrt(f);
        REQUIRE(h.has_value());
        CHECK(*h * *h == f);
    }
}

TEST_CASE("rf_sqrt rejects odd orders") {
    std::mt19937_64 rng(8);
    FieldElem t = parse_scalar(Qt, "t");
    for (int i = 0; i < 20; ++i) {
        FieldElem g = testgen::random_ratfun(rng, Qt, 2);
        if (g.is_zero()) continue;
        CHECK_FALSE(rf_sqrt(t * (g * g)).has_value());
    }
}

TEST_CASE("rational_roots examples") {
    RootsResult r = rational_roots(Poly::from_ints(Q, {2, -3, 1}));  // z^2 - 3z + 2
    CHECK(r.roots == std::vector<FieldElem>{FieldElem::from_int(Q, 1), FieldElem::from_int(Q, 2)});
    CHECK(r.complete);

    r = rational_roots(Poly::from_ints(Q, {1, 0, 1}));  // z^2 + 1
    CHECK(r.roots.empty());
    CHECK_FALSE(r.complete);
    CHECK(r.residual == Poly::from_ints(Q, {1, 0, 1}));

    r = rational_roots(Poly::from_ints(Q, {0, 0, -1, 1}));  // z^3 - z^2
    CHECK(r.roots == std::vector<FieldElem>{FieldElem::from_int(Q, 0), FieldElem::from_int(Q, 1)});
    CHECK(r.complete);

    CHECK_THROWS_AS(rational_roots(Poly::zero(Q)), Error);
}

TEST_CASE("rational_roots with fractional coefficients") {
    // (z - 1/2)(z - 3) scaled: roots found despite rational coefficients
    Poly p = parse_poly(Q, "z", "z^2 - 7/2*z + 3/2");
    RootsResult r = rational_roots(p);
    CHECK(r.complete);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == FieldElem::rational(1, 2));
    CHECK(r.roots[1] == FieldElem::from_int(Q, 3));
}

TEST_CASE("prime_field_roots examples") {
    const FieldDescriptor F3 = FieldDescriptor::prime_field(3);
    const FieldDescriptor F2 = FieldDescriptor::prime_field(2);

    RootsResult r = prime_field_roots(Poly::from_ints(F5, {-1, 0, 1}));  // z^2 - 1
    CHECK(r.roots ==
          std::vector<FieldElem>{FieldElem::from_int(F5, 1), FieldElem::from_int(F5, 4)});
    CHECK(r.complete);

    r = prime_field_roots(Poly::from_ints(F3, {1, 0, 1}));  // z^2 + 1
    CHECK(r.roots.empty());
    CHECK_FALSE(r.complete);

    r = prime_field_roots(Poly::from_ints(F2, {0, 1}));  // z
    CHECK(r.roots == std::vector<FieldElem>{FieldElem::zero(F2)});
    CHECK(r.complete);
}

TEST_CASE("returned roots are exact zeros, no duplicates") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 40; ++i) {
        Poly p = testgen::random_poly(rng, Q, 5, /*nonzero=*/true);
        RootsResult r = rational_roots(p);
        for (std::size_t a = 0; a < r.roots.size(); ++a) {
            CHECK(poly_eval(p, r.roots[a]).is_zero());
            for (std::size_t b = a + 1; b < r.roots.size(); ++b)
                CHECK(r.roots[a] != r.roots[b]);
        }
        Poly q = testgen::random_poly(rng, F5, 5, /*nonzero=*/true);
        RootsResult rq = prime_field_roots(q);
        for (const FieldElem& root : rq.roots) CHECK(poly_eval(q, root).is_zero());
    }
}
