#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "poisson2/rational.hpp"

namespace poisson2::linalg {

/// Row-major rectangular matrix of exact rationals.
using QMatrix = std::vector<std::vector<Rational>>;

/// Exact rank. Rows are scaled to integers, then eliminated fraction-free
/// (Bareiss); columns are pivoted left to right so the result is
/// deterministic.
std::size_t rank(const QMatrix& mat);

/// One exact solution of A x = rhs with free variables set to zero, or
/// nullopt when the system is inconsistent. Columns are pivoted in the given
/// order.
std::optional<std::vector<Rational>> solve(QMatrix A, std::vector<Rational> rhs);

}  // namespace poisson2::linalg
