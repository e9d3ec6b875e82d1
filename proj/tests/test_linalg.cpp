#include <doctest.h>

#include <random>

#include "poisson2/linalg.hpp"

using namespace poisson2;
using linalg::QMatrix;

namespace {

std::vector<Rational> matvec(const QMatrix& A, const std::vector<Rational>& x) {
    std::vector<Rational> out(A.size(), Rational(0));
    for (std::size_t r = 0; r < A.size(); ++r)
        for (std::size_t c = 0; c < x.size(); ++c) out[r] += A[r][c] * x[c];
    return out;
}

}  // namespace

TEST_CASE("rank on known matrices") {
    CHECK(linalg::rank({}) == 0);
    CHECK(linalg::rank({{Rational(0), Rational(0)}}) == 0);
    CHECK(linalg::rank({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}) == 2);
    CHECK(linalg::rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
    CHECK(linalg::rank({{Rational(1, 2), Rational(1, 3)},
                        {Rational(3, 2), Rational(1)},
                        {Rational(2), Rational(4, 3)}}) == 1);
}

TEST_CASE("solve: consistency and inconsistency") {
    QMatrix A{{Rational(2), Rational(1)}, {Rational(0), Rational(3)}};
    auto x = linalg::solve(A, {Rational(5), Rational(6)});
    REQUIRE(x.has_value());
    CHECK(matvec(A, *x) == std::vector<Rational>{Rational(5), Rational(6)});

    QMatrix B{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK(!linalg::solve(B, {Rational(1), Rational(3)}).has_value());
    auto y = linalg::solve(B, {Rational(1), Rational(2)});
    REQUIRE(y.has_value());
    CHECK(matvec(B, *y) == std::vector<Rational>{Rational(1), Rational(2)});
}

TEST_CASE("solve reproduces the right-hand side (randomized)") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int t = 0; t < 60; ++t) {
        std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        QMatrix A(rows, std::vector<Rational>(cols));
        for (auto& row : A)
            for (auto& v : row) v = Rational(coef(rng));
        std::vector<Rational> x0(cols);
        for (auto& v : x0) v = Rational(coef(rng), 1 + static_cast<long>(rng() % 3));
        auto rhs = matvec(A, x0);
        auto x = linalg::solve(A, rhs);
        REQUIRE(x.has_value());
        CHECK(matvec(A, *x) == rhs);

        // Rank agrees with the number of pivots a plain elimination finds.
        std::size_t rk = linalg::rank(A);
        CHECK(rk <= std::min(rows, cols));
    }
}
