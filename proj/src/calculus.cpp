#include "poisson2/calculus.hpp"

#include <algorithm>

#include "poisson2/errors.hpp"

namespace poisson2 {

VectorField euler_field(Weights w) {
    return {Rational(w.w1) * Poly::x(), Rational(w.w2) * Poly::y(), w};
}

std::optional<int> vf_order(const VectorField& X) {
    std::optional<int> o;
    if (auto oa = poly_order(X.a, X.w)) o = *oa - X.w.w1;
    if (auto ob = poly_order(X.b, X.w)) {
        int v = *ob - X.w.w2;
        if (!o || v < *o) o = v;
    }
    return o;
}

VectorField vf_graded_component(const VectorField& X, int m) {
    return {graded_component(X.a, X.w, m + X.w.w1),
            graded_component(X.b, X.w, m + X.w.w2), X.w};
}

PoissonGerm::PoissonGerm(Poly f, Poly h, Weights w)
    : f_(std::move(f)), h_(std::move(h)), w_(w) {
    if (f_.is_zero()) throw DomainError("Poisson germ: f must be nonzero");
    if (!f_.constant_term().is_zero())
        throw DomainError("Poisson germ: f must vanish at the origin");
    auto deg = is_quasihomogeneous(f_, w_);
    if (!deg) throw DomainError("Poisson germ: f must be quasihomogeneous");
    d_ = *deg;
    if (d_ <= 0) throw DomainError("Poisson germ: f must have positive quasidegree");
    if (!h_.is_zero()) {
        auto hdeg = is_quasihomogeneous(h_, w_);
        if (!hdeg || *hdeg != s())
            throw DomainError("Poisson germ: h must be quasihomogeneous of degree d - w1 - w2");
        if ((Rational(1) + h_.constant_term()).is_zero())
            throw DomainError("Poisson germ: 1 + h vanishes at the origin");
    }
}

VectorField hamiltonian_field(const Poly& g, Weights w) {
    return {derive(g, Axis::Y), -derive(g, Axis::X), w};
}

Poly divergence(const VectorField& X) {
    return derive(X.a, Axis::X) + derive(X.b, Axis::Y);
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
    return {apply_field(X.a, X.b, Y.a) - apply_field(Y.a, Y.b, X.a),
            apply_field(X.a, X.b, Y.b) - apply_field(Y.a, Y.b, X.b), X.w};
}

Poly hamiltonian_potential(const VectorField& X) {
    if (!divergence(X).is_zero())
        throw DomainError("hamiltonian_potential: field is not divergence-free");
    // g(x, y) = int_0^y a(x, t) dt - int_0^x b(t, 0) dt, so that g_y = a and,
    // by div X = 0, g_x = -b.
    Poly g;
    for (const auto& [m, c] : X.a.terms())
        g.add_term({m.i, m.j + 1}, c / Rational(m.j + 1));
    for (const auto& [m, c] : X.b.terms())
        if (m.j == 0) g.add_term({m.i + 1, 0}, -(c / Rational(m.i + 1)));
    return g;
}

VectorField delta1(const PoissonGerm& germ, const Poly& g) {
    return germ.coefficient() * hamiltonian_field(g, germ.weights());
}

Bivector delta2(const PoissonGerm& germ, const VectorField& X) {
    if (!(X.w == germ.weights()))
        throw DomainError("delta2: vector field and germ weights differ");
    Poly F = germ.coefficient();
    return {apply_field(X.a, X.b, F) - divergence(X) * F, germ.weights()};
}

JetDiffeo::JetDiffeo(Poly phi1, Poly phi2, Weights w, int order)
    : phi1_(std::move(phi1)), phi2_(std::move(phi2)), w_(w), order_(order) {
    if (!phi1_.constant_term().is_zero() || !phi2_.constant_term().is_zero())
        throw DomainError("jet diffeomorphism must fix the origin");
    auto lp = linear_part();
    if ((lp[0] * lp[3] - lp[1] * lp[2]).is_zero())
        throw DomainError("jet diffeomorphism has a singular linear part");
    int cap = order_ + w_.max();
    phi1_ = truncate(phi1_, w_, cap);
    phi2_ = truncate(phi2_, w_, cap);
}

JetDiffeo JetDiffeo::identity(Weights w, int order) {
    return JetDiffeo(Poly::x(), Poly::y(), w, order);
}

std::array<Rational, 4> JetDiffeo::linear_part() const {
    return {phi1_.coeff({1, 0}), phi1_.coeff({0, 1}),
            phi2_.coeff({1, 0}), phi2_.coeff({0, 1})};
}

Poly jet_jacobian(const JetDiffeo& phi) {
    return derive(phi.phi1(), Axis::X) * derive(phi.phi2(), Axis::Y) -
           derive(phi.phi1(), Axis::Y) * derive(phi.phi2(), Axis::X);
}

JetDiffeo compose_diffeo(const JetDiffeo& phi, const JetDiffeo& psi) {
    if (!(phi.weights() == psi.weights()))
        throw DomainError("compose_diffeo: weights differ");
    Weights w = phi.weights();
    int order = std::min(phi.order(), psi.order());
    int cap = order + w.max();
    return JetDiffeo(substitute(phi.phi1(), psi.phi1(), psi.phi2(), w, cap),
                     substitute(phi.phi2(), psi.phi1(), psi.phi2(), w, cap), w, order);
}

JetDiffeo invert_diffeo(const JetDiffeo& phi) {
    Weights w = phi.weights();
    int cap = phi.order() + w.max();
    auto lp = phi.linear_part();
    Rational det = lp[0] * lp[3] - lp[1] * lp[2];
    // Inverse linear part.
    Rational b11 = lp[3] / det, b12 = -lp[1] / det;
    Rational b21 = -lp[2] / det, b22 = lp[0] / det;

    Poly lin1 = b11 * Poly::x() + b12 * Poly::y();
    Poly lin2 = b21 * Poly::x() + b22 * Poly::y();
    Poly p1 = phi.phi1() - (lp[0] * Poly::x() + lp[1] * Poly::y());
    Poly p2 = phi.phi2() - (lp[2] * Poly::x() + lp[3] * Poly::y());

    // psi <- L^{-1}(id - P(psi)); each pass gains one order of accuracy.
    Poly psi1 = lin1, psi2 = lin2;
    for (int it = 0; it <= cap; ++it) {
        Poly u = Poly::x() - substitute(p1, psi1, psi2, w, cap);
        Poly v = Poly::y() - substitute(p2, psi1, psi2, w, cap);
        Poly n1 = b11 * u + b12 * v;
        Poly n2 = b21 * u + b22 * v;
        if (n1 == psi1 && n2 == psi2) break;
        psi1 = n1;
        psi2 = n2;
    }
    return JetDiffeo(psi1, psi2, w, phi.order());
}

Bivector pushforward(const JetDiffeo& phi, const Bivector& P) {
    return pushforward(phi, invert_diffeo(phi), P);
}

Bivector pushforward(const JetDiffeo& phi, const JetDiffeo& phi_inv, const Bivector& P) {
    if (!(phi.weights() == P.w))
        throw DomainError("pushforward: weights differ");
    Weights w = P.w;
    int cap = phi.order() + w.sum();
    Poly src = truncate(jet_jacobian(phi) * P.g, w, cap);
    return {substitute(src, phi_inv.phi1(), phi_inv.phi2(), w, cap), w};
}

JetDiffeo euler_flow(const Poly& alpha, Weights w, int order) {
    if (!alpha.constant_term().is_zero())
        throw DomainError("euler_flow: alpha must vanish at the origin");
    int cap = order + w.max();
    Poly wa = Rational(w.w1) * Poly::x();
    Poly wb = Rational(w.w2) * Poly::y();
    Poly a = truncate(alpha, w, cap);

    auto exp_of_derivation = [&](Poly coord) {
        Poly acc = coord, term = coord;
        for (long k = 1; !term.is_zero(); ++k) {
            term = truncate(a * apply_field(wa, wb, term), w, cap);
            term = Rational(1, k) * term;
            acc += term;
        }
        return acc;
    };
    return JetDiffeo(exp_of_derivation(Poly::x()), exp_of_derivation(Poly::y()), w, order);
}

}  // namespace poisson2
