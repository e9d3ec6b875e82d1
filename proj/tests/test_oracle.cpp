#include <doctest.h>

#include "poisson2/oracle.hpp"
#include "poisson2/parse.hpp"

using namespace poisson2;

namespace {

PoissonGerm morse() { return {parse_poly("x^2+y^2"), Poly(), Weights(1, 1)}; }

}  // namespace

TEST_CASE("graded rows of the Morse complex") {
    Poly f = parse_poly("x^2+y^2");
    Weights w(1, 1);

    GradedDimsRow k0 = graded_cochain_dims(f, w, 0);
    CHECK(k0.dimX == 4);
    CHECK(k0.rank_d2 == 2);
    CHECK(k0.rank_d1 == 0);  // only constants feed degree 0, and they die
    CHECK(k0.h1 == 2);

    GradedDimsRow km2 = graded_cochain_dims(f, w, -2);
    CHECK(km2.dimV == 1);
    CHECK(km2.dimX == 0);
    CHECK(km2.h2 == 1);
}

TEST_CASE("graded row of the regular germ") {
    GradedDimsRow r = graded_cochain_dims(Poly::x(), Weights(1, 1), -1);
    CHECK(r.h1 == 1);  // the class of d/dy
}

TEST_CASE("oracle totals for the worked examples") {
    OracleReport reg = oracle_report(PoissonGerm(Poly::x(), Poly(), Weights(1, 1)), 6);
    CHECK(reg.totals == std::array<std::size_t, 3>{1, 1, 0});
    CHECK(reg.stabilized);

    OracleReport m = oracle_report(morse(), 8);
    CHECK(m.totals == std::array<std::size_t, 3>{1, 2, 2});
    CHECK(m.stabilized);

    OracleReport e8 =
        oracle_report(PoissonGerm(parse_poly("x^3+y^5"), Poly(), Weights(5, 3)), 30);
    CHECK(e8.totals == std::array<std::size_t, 3>{1, 1, 8});
}

TEST_CASE("per-row bookkeeping is rank-null consistent") {
    for (const GradedDimsRow& row : oracle_report(morse(), 8).rows) {
        CHECK(row.h0 + row.rank_d1 == row.dimF);
        CHECK(row.h1 + row.rank_d1 + row.rank_d2 == row.dimX);
        CHECK(row.h2 + row.rank_d2 == row.dimV);
    }
}

TEST_CASE("concentration: graded classes only at the resonant degrees") {
    std::vector<PoissonGerm> germs = {
        morse(),
        {parse_poly("x^2+y^3"), Poly(), Weights(3, 2)},
        {parse_poly("x^2*y+y^4"), Poly(), Weights(3, 2)},
    };
    for (const PoissonGerm& germ : germs) {
        OracleReport rep = oracle_report(germ, default_cutoff(germ));
        for (const GradedDimsRow& row : rep.rows) {
            if (row.k != germ.s()) CHECK(row.h1 == 0);
            if (row.k > germ.s()) CHECK(row.h2 == 0);
        }
        CHECK(rep.stabilized);
    }
}

TEST_CASE("totals are stable once the cutoff clears 2d") {
    PoissonGerm a2(parse_poly("x^2+y^3"), Poly(), Weights(3, 2));
    auto t1 = oracle_report(a2, 2 * a2.d()).totals;
    auto t2 = oracle_report(a2, 2 * a2.d() + a2.weights().max()).totals;
    CHECK(t1 == t2);

    PoissonGerm d5h(parse_poly("x^2*y+y^4"), Poly::x(), Weights(3, 2));
    auto p1 = oracle_report(d5h, 2 * d5h.d());
    auto p2 = oracle_report(d5h, 2 * d5h.d() + d5h.weights().max());
    CHECK(p1.totals == p2.totals);
    CHECK(p1.stabilized);
}

TEST_CASE("perturbed and unperturbed totals agree (Theorem-level isomorphisms)") {
    PoissonGerm d5h(parse_poly("x^2*y+y^4"), Poly::x(), Weights(3, 2));
    auto pi = oracle_report(d5h, 2 * d5h.d()).totals;
    auto pi0 = oracle_report(d5h.unperturbed(), 2 * d5h.d()).totals;
    CHECK(pi == pi0);
}

TEST_CASE("crosscheck agreement on theorem cases") {
    CrosscheckResult m = crosscheck(morse(), 8);
    CHECK(m.all_agree());
    CHECK(m.theorem.h0_dim == 1);
    CHECK(m.theorem.h1_dim == 2);
    CHECK(m.theorem.h2_dim == 2);
    CHECK(!m.mismatch_degree.has_value());

    PoissonGerm a2(parse_poly("x^2+y^3"), Poly(), Weights(3, 2));
    CrosscheckResult a = crosscheck(a2, default_cutoff(a2));
    CHECK(a.all_agree());
    CHECK(a.oracle.totals == std::array<std::size_t, 3>{1, 1, 2});

    PoissonGerm d5h(parse_poly("x^2*y+y^4"), Poly::x(), Weights(3, 2));
    CrosscheckResult d = crosscheck(d5h, default_cutoff(d5h));
    CHECK(d.all_agree());
    CHECK(d.theorem.h1_dim == 2);
    CHECK(d.theorem.h2_dim == 1 + d.theorem.c);
}
