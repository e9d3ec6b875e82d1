#pragma once

#include <array>
#include <optional>

#include "poisson2/qpoly.hpp"

namespace poisson2 {

/// Vector field a d/dx + b d/dy. A monomial m in `a` contributes quasidegree
/// deg(m) - w1, in `b` deg(m) - w2; the field is quasihomogeneous of degree k
/// when every contribution equals k.
struct VectorField {
    Poly a, b;
    Weights w;

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    VectorField& operator+=(const VectorField& o) { a += o.a; b += o.b; return *this; }
    VectorField& operator-=(const VectorField& o) { a -= o.a; b -= o.b; return *this; }
    friend VectorField operator+(VectorField l, const VectorField& r) { return l += r; }
    friend VectorField operator-(VectorField l, const VectorField& r) { return l -= r; }
    friend VectorField operator*(const Poly& p, const VectorField& X) {
        return {p * X.a, p * X.b, X.w};
    }
    friend VectorField operator*(const Rational& c, const VectorField& X) {
        return {c * X.a, c * X.b, X.w};
    }
    bool operator==(const VectorField&) const = default;
};

/// Bivector g d/dx ^ d/dy; a monomial m contributes quasidegree
/// deg(m) - w1 - w2.
struct Bivector {
    Poly g;
    Weights w;

    bool is_zero() const { return g.is_zero(); }
    friend Bivector operator*(const Poly& p, const Bivector& P) { return {p * P.g, P.w}; }
    bool operator==(const Bivector&) const = default;
};

/// The Euler field W = w1 x d/dx + w2 y d/dy.
VectorField euler_field(Weights w);

/// Minimal quasidegree among the graded pieces of X; nullopt for zero.
std::optional<int> vf_order(const VectorField& X);

/// The quasidegree-m graded piece of X.
VectorField vf_graded_component(const VectorField& X, int m);

/// Germ Pi = f (1 + h) d/dx ^ d/dy with f quasihomogeneous of degree d > 0
/// and h either zero or quasihomogeneous of degree s = d - w1 - w2 >= 0
/// (h = 0 encodes the unperturbed germ Pi_0; 1 + h(0,0) must not vanish).
class PoissonGerm {
public:
    PoissonGerm(Poly f, Poly h, Weights w);

    const Poly& f() const { return f_; }
    const Poly& h() const { return h_; }
    Weights weights() const { return w_; }
    int d() const { return d_; }
    int s() const { return d_ - w_.w1 - w_.w2; }
    bool is_unperturbed() const { return h_.is_zero(); }

    Poly multiplier() const { return Poly(1) + h_; }
    Poly coefficient() const { return f_ * multiplier(); }
    PoissonGerm unperturbed() const { return PoissonGerm(f_, Poly(), w_); }

private:
    Poly f_, h_;
    Weights w_;
    int d_;
};

/// H_g = (dg/dy) d/dx - (dg/dx) d/dy.
VectorField hamiltonian_field(const Poly& g, Weights w);

/// da/dx + db/dy.
Poly divergence(const VectorField& X);

/// Commutator [X, Y] componentwise.
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

/// A primitive g with H_g = X for divergence-free X, built by path
/// integration from the origin. Throws DomainError when div X != 0.
Poly hamiltonian_potential(const VectorField& X);

/// delta_1(g) = [g, Pi] = F H_g with F = f (1 + h).
VectorField delta1(const PoissonGerm& germ, const Poly& g);

/// delta_2(X) = [X, Pi] = (X.F - (div X) F) d/dx ^ d/dy.
Bivector delta2(const PoissonGerm& germ, const VectorField& X);

/// Jet of a local diffeomorphism fixing the origin. Components are kept
/// through quasidegree order + max(w1, w2); accuracy contracts are stated up
/// to quasidegree `order` and are exact for maps whose linear part respects
/// the weight filtration (always the case for w1 = w2 and for the Euler
/// flows used by the normalizer).
class JetDiffeo {
public:
    JetDiffeo(Poly phi1, Poly phi2, Weights w, int order);

    static JetDiffeo identity(Weights w, int order);

    const Poly& phi1() const { return phi1_; }
    const Poly& phi2() const { return phi2_; }
    Weights weights() const { return w_; }
    int order() const { return order_; }

    /// Row-major 2x2 linear part (coefficients of x, y in phi1, phi2).
    std::array<Rational, 4> linear_part() const;

private:
    Poly phi1_, phi2_;
    Weights w_;
    int order_;
};

/// det of the Jacobian matrix, as a polynomial.
Poly jet_jacobian(const JetDiffeo& phi);

/// phi o psi: phi's components evaluated at psi's, at the smaller order.
JetDiffeo compose_diffeo(const JetDiffeo& phi, const JetDiffeo& psi);

/// Formal inverse: compose_diffeo(phi, invert_diffeo(phi)) is the identity
/// through the jet order.
JetDiffeo invert_diffeo(const JetDiffeo& phi);

/// Coefficient transport g_out with g_out o phi = (Jac phi) g_in, resolved as
/// ((Jac phi) g_in) o phi^{-1} and truncated beyond bivector quasidegree
/// `order`.
Bivector pushforward(const JetDiffeo& phi, const Bivector& P);

/// Same, with a precomputed inverse (used by flows, whose inverse is exact).
Bivector pushforward(const JetDiffeo& phi, const JetDiffeo& phi_inv, const Bivector& P);

/// Time-1 flow of alpha * W as a jet diffeomorphism; requires alpha(0,0) = 0
/// so the exponential of the derivation terminates degreewise.
JetDiffeo euler_flow(const Poly& alpha, Weights w, int order);

}  // namespace poisson2
