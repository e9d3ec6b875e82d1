#pragma once

#include <optional>
#include <string>

#include "poisson2/calculus.hpp"

namespace poisson2 {

enum class AdeFamily { A, D, E };

/// Label into the ADE table. `sign` picks the real form where the table
/// carries one (odd-index A, family D); it is ignored where the table has
/// none. `lambda` is the modulus coefficient of the h-term for families that
/// carry one.
struct AdeLabel {
    AdeFamily family = AdeFamily::A;
    int k = 1;
    int sign = +1;
    Rational lambda = Rational(0);
};

/// The even-D table rows print the same polynomial as the odd-A rows. The
/// default reproduces the table as printed; Corrected substitutes the D-type
/// polynomial x^2 y +/- y^{2p-1} from the simple-germ classification.
enum class DEvenForm { AsPrinted, Corrected };

struct CatalogEntry {
    PoissonGerm germ;
    std::string note;  // nonempty where the table entry needs a caveat
};

/// Normal-form germ for a label, weights derived from the quasihomogeneity
/// constraints; a degenerate h-slot (s negative or not a quasidegree) comes
/// back as h = 0.
CatalogEntry catalog(const AdeLabel& label, DEvenForm d_even = DEvenForm::AsPrinted);

/// nu with W.nu = T, namely nu = sum_{i>0} T^{(i)} / i. Requires T(0,0) = 0.
Poly solve_W(const Poly& T, Weights w);

/// gamma with W.gamma - lambda0 gamma = T, namely gamma^{(i)} = T^{(i)} /
/// (i - lambda0). Throws ResonanceError when T^{(lambda0)} != 0.
Poly solve_homological(const Poly& T, int lambda0, Weights w);

/// phi pushing f (1 + u) forward to constant * f (1 + h_out), with h_out
/// zero or quasihomogeneous of degree s. `order` is the quasidegree through
/// which the multiplier was normalized; the pushforward relation holds
/// through order + d.
struct NormalizationResult {
    Poly h_out;
    JetDiffeo phi;
    Rational constant;
    int order;
};

/// Degree-ascending sweep: extract the constant of 1 + u, then kill every
/// multiplier component at quasidegree m != s with the time-1 flow of
/// alpha W, alpha = component / (s - m), recomputing the exact pushforward
/// after each step. Requires f of finite codimension and 1 + u(0,0) != 0.
NormalizationResult normalize(const Poly& f, const Poly& u, Weights w, int N);

/// Default normalization order 2d + max(w1, w2).
int default_normalize_order(const Poly& f, Weights w);

struct PushforwardCheck {
    bool pass = false;
    /// Quasidegree of the lowest surviving residual term, when one exists at
    /// or below the checked order.
    std::optional<int> residual_order;
};

/// Evaluates g_dst o phi - (Jac phi) F_src through quasidegree N; PASS iff
/// nothing survives.
PushforwardCheck check_pushforward(const JetDiffeo& phi, const Poly& F_src,
                                   const Poly& g_dst, int N);

}  // namespace poisson2
