#pragma once

#include <optional>
#include <vector>

#include "poisson2/qpoly.hpp"

namespace poisson2 {

/// Monomial basis of the Milnor algebra Q_f = F / I_f and its codimension.
/// `c` is nullopt when the codimension is infinite. For finite codimension
/// every basis monomial has quasidegree <= bound = 2d - 2w1 - 2w2; degrees
/// 0..checked_through were examined directly, everything above follows by
/// ideal propagation (any higher monomial is x*m or y*m with m already
/// certified inside I_f).
struct MilnorData {
    std::optional<std::size_t> c;
    std::vector<Monomial> basis;
    int bound = 0;
    int checked_through = 0;

    bool finite() const { return c.has_value(); }
};

/// Exact certificate g - normal_form = p * df/dx + q * df/dy.
struct IdealWitness {
    Poly p, q;
};

struct IdealReduction {
    Poly normal_form;
    IdealWitness witness;
};

/// Spanning set of the quasidegree-k graded piece of the Jacobian ideal:
/// {m f_x : deg m = k - deg f_x} followed by {m f_y : deg m = k - deg f_y}.
std::vector<Poly> graded_ideal_piece(const Poly& f, Weights w, int k);

/// Complement monomials of the ideal at one degree, chosen greedily in
/// canonical order.
std::vector<Monomial> complement_at_degree(const Poly& f, Weights w, int k);

/// Degree-by-degree monomial basis of Q_f with finiteness decision.
MilnorData milnor_data(const Poly& f, Weights w);

/// Unique representative of g in span(basis of Q_f) plus an exact membership
/// witness for the ideal part. Requires finite codimension.
IdealReduction reduce_mod_ideal(const Poly& g, const Poly& f, Weights w);

/// Monomial basis e_1..e_r of the quasihomogeneous polynomials of degree
/// d - w1 - w2 (empty when that is negative or not a quasidegree).
std::vector<Monomial> resonant_monomials(Weights w, int d);

/// Coefficients expressing `target` in the span of `gens`, all
/// quasihomogeneous of the same degree k, over the monomial space of that
/// degree. Nullopt when target is outside the span.
std::optional<std::vector<Rational>> express_in_span(const Poly& target,
                                                     const std::vector<Poly>& gens,
                                                     Weights w, int k);

}  // namespace poisson2
