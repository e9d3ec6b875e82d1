#include <doctest.h>

#include "poisson2/parse.hpp"
#include "poisson2/qpoly.hpp"
#include "test_support.hpp"

using namespace poisson2;
using ptest::random_poly;
using ptest::random_weights;

TEST_CASE("derive: power rule, constants") {
    Poly f = parse_poly("x^2 + y^2");
    CHECK(derive(f, Axis::X) == parse_poly("2*x"));
    CHECK(derive(parse_poly("x^2*y + y^4"), Axis::Y) == parse_poly("x^2 + 4*y^3"));
    CHECK(derive(parse_poly("5"), Axis::X).is_zero());
}

TEST_CASE("apply_field: Euler identity and directional derivatives") {
    Weights w(3, 2);
    Poly f = parse_poly("x^2*y + y^4");  // quasihomogeneous of degree 8
    Poly Wf = apply_field(Rational(w.w1) * Poly::x(), Rational(w.w2) * Poly::y(), f);
    CHECK(Wf == Rational(8) * f);

    CHECK(apply_field(Poly(1), Poly(), parse_poly("x^2+y^2")) == parse_poly("2*x"));
    CHECK(apply_field(Poly::x(), Poly::y(), parse_poly("x*y")) == parse_poly("2*x*y"));
}

TEST_CASE("graded_components: partition by quasidegree") {
    Weights w11(1, 1);
    auto comps = graded_components(parse_poly("x^2 + y^3"), w11);
    REQUIRE(comps.size() == 2);
    CHECK(comps.at(2) == parse_poly("x^2"));
    CHECK(comps.at(3) == parse_poly("y^3"));

    auto one = graded_components(parse_poly("x^2*y + y^4"), Weights(3, 2));
    REQUIRE(one.size() == 1);
    CHECK(one.at(8) == parse_poly("x^2*y + y^4"));

    CHECK(graded_components(Poly(), w11).empty());
}

TEST_CASE("graded_components is a partition (randomized)") {
    std::mt19937 rng(101);
    for (int t = 0; t < 50; ++t) {
        Weights w = random_weights(rng);
        Poly g = random_poly(rng);
        Poly sum;
        for (const auto& [k, comp] : graded_components(g, w)) {
            sum += comp;
            CHECK(is_quasihomogeneous(comp, w) == k);
        }
        CHECK(sum == g);
    }
}

TEST_CASE("is_quasihomogeneous") {
    CHECK(is_quasihomogeneous(parse_poly("x^2+y^2"), Weights(1, 1)) == 2);
    CHECK(is_quasihomogeneous(parse_poly("x^3+y^4"), Weights(4, 3)) == 12);
    CHECK(!is_quasihomogeneous(parse_poly("x^2+y^3"), Weights(1, 1)).has_value());
    CHECK_THROWS_AS((void)is_quasihomogeneous(Poly(), Weights(1, 1)), DomainError);
}

TEST_CASE("monomials_of_degree: canonical enumeration") {
    auto scalars = monomials_of_degree(Weights(1, 1), 0);
    REQUIRE(scalars.size() == 1);
    CHECK(scalars[0] == Monomial{0, 0});

    auto xs = monomials_of_degree(Weights(3, 2), 3);
    REQUIRE(xs.size() == 1);
    CHECK(xs[0] == Monomial{1, 0});

    CHECK(monomials_of_degree(Weights(4, 3), 5).empty());
    CHECK(monomials_of_degree(Weights(1, 1), -2).empty());

    // Ascending x-exponent within a degree.
    auto deg4 = monomials_of_degree(Weights(1, 1), 4);
    REQUIRE(deg4.size() == 5);
    for (std::size_t t = 0; t + 1 < deg4.size(); ++t) CHECK(deg4[t].i < deg4[t + 1].i);
}

TEST_CASE("unit_divide: cancellation, series, truncation") {
    Weights w11(1, 1);
    Poly f = parse_poly("x^2 + y^2");
    Poly u = parse_poly("1 + x");
    CHECK(unit_divide(f * u, u, w11, 40) == f);

    CHECK(unit_divide(Poly(1), parse_poly("1+y"), w11, 3) == parse_poly("1 - y + y^2 - y^3"));

    Weights w32(3, 2);
    Poly g = parse_poly("x^2*y + y^4");
    Poly q = unit_divide(g, parse_poly("1+x"), w32, 14);
    CHECK(q == truncate(g * parse_poly("1 - x + x^2"), w32, 14));
    // Multiply back: the residual must sit beyond the truncation order.
    Poly res = q * parse_poly("1+x") - g;
    auto ord = poly_order(res, w32);
    CHECK((!ord || *ord > 14));

    CHECK_THROWS_AS((void)unit_divide(Poly(1), Poly::x(), w11, 3), DomainError);
}

TEST_CASE("unit_divide round-trip (randomized)") {
    std::mt19937 rng(202);
    for (int t = 0; t < 50; ++t) {
        Weights w = random_weights(rng);
        Poly g = random_poly(rng);
        Poly u = random_poly(rng, 3, 3);
        Poly unit = Poly(ptest::random_nonzero_rational(rng)) + u - Poly(u.constant_term());
        int N = 12;
        CHECK(unit_divide(g * unit, unit, w, N) == truncate(g, w, N));
    }
}

TEST_CASE("exp_unit: series values and log consistency") {
    Weights w11(1, 1);
    CHECK(exp_unit(Poly(), w11, 5) == Poly(1));
    CHECK(exp_unit(Poly::x(), w11, 3) == parse_poly("1 + x + 1/2*x^2 + 1/6*x^3"));

    Poly xy = parse_poly("x + y");
    CHECK(exp_unit(xy, w11, 2) ==
          truncate(parse_poly("1 + x + y") + Rational(1, 2) * (xy * xy), w11, 2));

    CHECK_THROWS_AS((void)exp_unit(Poly(1), w11, 3), DomainError);

    std::mt19937 rng(303);
    for (int t = 0; t < 30; ++t) {
        Weights w = random_weights(rng);
        Poly nu = random_poly(rng, 3, 3);
        nu -= Poly(nu.constant_term());
        int N = 8;
        CHECK(unit_divide(Poly(1), exp_unit(nu, w, N), w, N) == exp_unit(-nu, w, N));
    }
}

TEST_CASE("print/parse round trip (randomized)") {
    std::mt19937 rng(404);
    for (int t = 0; t < 80; ++t) {
        Weights w = random_weights(rng);
        Poly g = random_poly(rng, 5, 5, -9, 9);
        CHECK(parse_poly(to_string(g, w)) == g);
    }
    CHECK(parse_poly(to_string(Poly(), Weights(1, 1))).is_zero());
}

TEST_CASE("substitute truncates by quasidegree") {
    Weights w11(1, 1);
    Poly g = parse_poly("x^2 + y");
    CHECK(substitute(g, parse_poly("x + y^2"), Poly::y(), w11, 2) == parse_poly("x^2 + y"));
    CHECK(substitute(g, parse_poly("x + y^2"), Poly::y(), w11, 10) ==
          parse_poly("x^2 + 2*x*y^2 + y^4 + y"));
}
