#include "poisson2/normal_forms.hpp"

#include <utility>

#include "poisson2/errors.hpp"
#include "poisson2/milnor.hpp"

namespace poisson2 {

namespace {

Poly modulus_term(const Rational& lambda, Monomial m) {
    return Poly::mono(m, lambda);
}

CatalogEntry make_entry(Poly f, Poly h, Weights w, std::string note = {}) {
    return {PoissonGerm(std::move(f), std::move(h), w), std::move(note)};
}

}  // namespace

CatalogEntry catalog(const AdeLabel& label, DEvenForm d_even) {
    const Rational& l = label.lambda;
    Poly x = Poly::x(), y = Poly::y();

    switch (label.family) {
        case AdeFamily::A: {
            if (label.k < 1) throw DomainError("A_k requires k >= 1");
            if (label.k % 2 == 0) {
                // A_{2p}: x^2 + y^{2p+1}; the +/- is absorbed over R and the
                // resonant space is empty, so no modulus slot exists.
                int p = label.k / 2;
                return make_entry(x * x + pow(y, 2 * p + 1), Poly(), Weights(2 * p + 1, 2));
            }
            int p = (label.k + 1) / 2;
            Poly f = x * x + Rational(label.sign) * pow(y, 2 * p);
            return make_entry(f, modulus_term(l, {0, p - 1}), Weights(p, 1));
        }
        case AdeFamily::D: {
            if (label.k < 4) throw DomainError("D_k requires k >= 4");
            if (label.k % 2 == 1) {
                int p = (label.k - 1) / 2;
                Poly f = x * x * y + pow(y, 2 * p);
                return make_entry(
                    f, modulus_term(l, {1, 0}), Weights(2 * p - 1, 2),
                    "dim H^2 = 1 + c = " + std::to_string(2 * p + 2) + ": y^" +
                        std::to_string(2 * p) + " = y*f_y/" + std::to_string(2 * p) +
                        " - x*f_x/" + std::to_string(4 * p) +
                        " lies in the Jacobian ideal, so {1,x,y,...,y^" +
                        std::to_string(2 * p) +
                        "} is dependent in Q_f and the count 2p+3 overshoots by one");
            }
            int p = label.k / 2;
            if (d_even == DEvenForm::AsPrinted) {
                Poly f = x * x + Rational(label.sign) * pow(y, 2 * p);
                return make_entry(f, modulus_term(l, {0, p - 1}), Weights(p, 1),
                                  "table row as printed coincides with the odd-A polynomial; "
                                  "pass the corrected form for a D-type singularity");
            }
            Poly f = x * x * y + Rational(label.sign) * pow(y, 2 * p - 1);
            return make_entry(f, modulus_term(l, {0, p - 1}), Weights(p - 1, 1));
        }
        case AdeFamily::E: {
            if (label.k == 6) return make_entry(x * x * x + pow(y, 4), Poly(), Weights(4, 3));
            if (label.k == 7)
                return make_entry(x * x * x + x * pow(y, 3), modulus_term(l, {0, 2}),
                                  Weights(3, 2));
            if (label.k == 8) return make_entry(x * x * x + pow(y, 5), Poly(), Weights(5, 3));
            throw DomainError("E_k requires k in {6, 7, 8}");
        }
    }
    throw DomainError("invalid catalog label");
}

Poly solve_W(const Poly& T, Weights w) {
    if (!T.constant_term().is_zero())
        throw DomainError("solve_W: right-hand side has a constant term");
    Poly nu;
    for (const auto& [deg, comp] : graded_components(T, w))
        nu += Rational(deg).reciprocal() * comp;
    return nu;
}

Poly solve_homological(const Poly& T, int lambda0, Weights w) {
    Poly gamma;
    for (const auto& [deg, comp] : graded_components(T, w)) {
        if (deg == lambda0) throw ResonanceError(lambda0);
        gamma += Rational(deg - lambda0).reciprocal() * comp;
    }
    return gamma;
}

int default_normalize_order(const Poly& f, Weights w) {
    auto d = is_quasihomogeneous(f, w);
    if (!d) throw DomainError("normalize: f must be quasihomogeneous");
    return 2 * *d + w.max();
}

namespace {

/// Exact division of the coefficient by quasihomogeneous f, graded piece by
/// graded piece: G = f * M with M = sum_m G^{(d+m)} / f.
Poly divide_by_quasihomogeneous(const Poly& G, const Poly& f, Weights w, int d) {
    Poly M;
    for (const auto& [deg, comp] : graded_components(G, w)) {
        int m = deg - d;
        if (m < 0) throw std::logic_error("pushforward coefficient not divisible by f");
        std::vector<Poly> gens;
        auto monos = monomials_of_degree(w, m);
        for (Monomial mo : monos) gens.push_back(Poly::mono(mo) * f);
        auto sol = express_in_span(comp, gens, w, deg);
        if (!sol) throw std::logic_error("pushforward coefficient not divisible by f");
        for (std::size_t t = 0; t < monos.size(); ++t) M.add_term(monos[t], (*sol)[t]);
    }
    return M;
}

}  // namespace

NormalizationResult normalize(const Poly& f, const Poly& u, Weights w, int N) {
    auto dopt = is_quasihomogeneous(f, w);
    if (!dopt || *dopt <= 0)
        throw DomainError("normalize: f must be quasihomogeneous of positive degree");
    int d = *dopt;
    int s = d - w.w1 - w.w2;
    if (!milnor_data(f, w).finite())
        throw DomainError("normalize: f has infinite codimension");

    Rational c0 = Rational(1) + u.constant_term();
    if (c0.is_zero()) throw DomainError("normalize: multiplier is not a unit");

    // Normalize the multiplier to 1 + v with v(0,0) = 0.
    Poly v = c0.reciprocal() * (u - Poly(u.constant_term()));
    v = truncate(v, w, N);

    int jet_order = N + d;
    JetDiffeo phi = JetDiffeo::identity(w, jet_order);

    int last_killed = 0;
    while (true) {
        std::optional<int> target;
        for (const auto& [deg, comp] : graded_components(v, w)) {
            if (deg == s || deg > N) continue;
            target = deg;
            break;
        }
        if (!target) break;
        if (*target <= last_killed)
            throw std::logic_error("normalize: sweep failed to raise the order");
        last_killed = *target;

        int m = *target;
        Poly alpha = Rational(s - m).reciprocal() * graded_component(v, w, m);
        JetDiffeo step = euler_flow(alpha, w, jet_order);
        JetDiffeo step_inv = euler_flow(-alpha, w, jet_order);

        Bivector moved = pushforward(step, step_inv, {f * (Poly(1) + v), w});
        Poly M = divide_by_quasihomogeneous(truncate(moved.g, w, d + N), f, w, d);
        if (!(M.constant_term() == Rational(1)))
            throw std::logic_error("normalize: flow changed the unit constant");
        v = M - Poly(1);
        phi = compose_diffeo(step, phi);
    }

    NormalizationResult out{graded_component(v, w, s), std::move(phi), c0, N};
    return out;
}

PushforwardCheck check_pushforward(const JetDiffeo& phi, const Poly& F_src,
                                   const Poly& g_dst, int N) {
    Weights w = phi.weights();
    Poly lhs = substitute(g_dst, phi.phi1(), phi.phi2(), w, N);
    Poly rhs = truncate(jet_jacobian(phi) * F_src, w, N);
    Poly res = lhs - rhs;
    PushforwardCheck out;
    out.residual_order = poly_order(res, w);
    out.pass = res.is_zero();
    return out;
}

}  // namespace poisson2
