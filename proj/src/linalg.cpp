#include "poisson2/linalg.hpp"

#include <gmpxx.h>

namespace poisson2::linalg {

std::size_t rank(const QMatrix& mat) {
    if (mat.empty()) return 0;
    std::size_t rows = mat.size(), cols = mat[0].size();

    // Clear denominators row by row; row scaling does not change the rank.
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < cols; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), mat[r][c].denominator().get_mpz_t());
        for (std::size_t c = 0; c < cols; ++c)
            a[r][c] = mat[r][c].numerator() * (l / mat[r][c].denominator());
    }

    // Fraction-free (Bareiss) elimination.
    mpz_class prev = 1;
    std::size_t rnk = 0;
    for (std::size_t c = 0; c < cols && rnk < rows; ++c) {
        std::size_t piv = rnk;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rnk) std::swap(a[piv], a[rnk]);
        for (std::size_t r = rnk + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                mpz_class t = a[rnk][c] * a[r][k] - a[r][c] * a[rnk][k];
                mpz_divexact(a[r][k].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = a[rnk][c];
        ++rnk;
    }
    return rnk;
}

std::optional<std::vector<Rational>> solve(QMatrix A, std::vector<Rational> rhs) {
    std::size_t rows = A.size();
    std::size_t cols = rows == 0 ? 0 : A[0].size();

    std::vector<std::size_t> pivot_col;  // pivot column of each eliminated row
    std::size_t rnk = 0;
    for (std::size_t c = 0; c < cols && rnk < rows; ++c) {
        std::size_t piv = rnk;
        while (piv < rows && A[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(A[piv], A[rnk]);
        std::swap(rhs[piv], rhs[rnk]);
        Rational inv = A[rnk][c].reciprocal();
        for (std::size_t k = c; k < cols; ++k) A[rnk][k] *= inv;
        rhs[rnk] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rnk || A[r][c].is_zero()) continue;
            Rational f = A[r][c];
            for (std::size_t k = c; k < cols; ++k) A[r][k] -= f * A[rnk][k];
            rhs[r] -= f * rhs[rnk];
        }
        pivot_col.push_back(c);
        ++rnk;
    }

    for (std::size_t r = rnk; r < rows; ++r)
        if (!rhs[r].is_zero()) return std::nullopt;

    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t r = 0; r < rnk; ++r) x[pivot_col[r]] = rhs[r];
    return x;
}

}  // namespace poisson2::linalg
