#pragma once

#include <variant>
#include <vector>

#include "poisson2/calculus.hpp"
#include "poisson2/milnor.hpp"

namespace poisson2 {

enum class Provenance { Theorem, Oracle };

/// Assembled cohomology of a germ: dimensions (1, r+1, r+c), explicit
/// representatives, and where the numbers came from.
struct CohomologyReport {
    std::size_t h0_dim = 0, h1_dim = 0, h2_dim = 0;
    std::vector<VectorField> h1_basis;
    std::vector<Bivector> h2_basis;
    std::size_t r = 0, c = 0;
    Provenance provenance = Provenance::Theorem;
};

/// H^0 is spanned by the constants. Requires finite codimension.
std::size_t h0_dim(const PoissonGerm& germ);

/// Representatives (1+h) H_f and (1+h) e_i W, i = 1..r.
std::vector<VectorField> h1_basis(const PoissonGerm& germ);

/// Representatives e_i f (i = 1..r) then u_j (j = 1..c), as bivectors. The
/// same list serves the perturbed and unperturbed germ.
std::vector<Bivector> h2_basis(const PoissonGerm& germ);

/// All of the above in one report.
CohomologyReport theorem_report(const PoissonGerm& germ);

/// Result of reducing a cocycle against the basis: coordinates, a primitive
/// witness (a function for H^1, a vector field for H^2), and the quasidegree
/// order beyond which the residual
///   input - sum coords_i basis_i - delta(witness)
/// lives.
struct CocycleReduction {
    std::vector<Rational> coords;
    std::variant<Poly, VectorField> witness;
    int residual_order = 0;
};

/// Reduces a 1-cocycle X (delta2(X) = 0 through bivector degree N + s) to
/// coordinates (alpha, lambda_1..lambda_r) on the H^1 basis plus delta1 of
/// the witness, degree by degree through vector-field degree N.
CocycleReduction reduce_cocycle_h1(const PoissonGerm& germ, const VectorField& X, int N);

/// Reduces any bivector to coordinates (lambda_1..lambda_r, mu_1..mu_c) on
/// {e_i f, u_j} plus delta2 of a vector-field witness, through bivector
/// degree N. Exact (zero residual) for the unperturbed germ.
CocycleReduction reduce_cocycle_h2(const PoissonGerm& germ, const Bivector& P, int N);

/// Default working order 2d.
int default_reduction_order(const PoissonGerm& germ);

}  // namespace poisson2
