#pragma once

#include <random>
#include <vector>

#include "poisson2/calculus.hpp"
#include "poisson2/qpoly.hpp"

namespace ptest {

using namespace poisson2;

inline Rational random_rational(std::mt19937& rng, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937& rng, int lo = -4, int hi = 4) {
    Rational q;
    do { q = random_rational(rng, lo, hi); } while (q.is_zero());
    return q;
}

inline Poly random_poly(std::mt19937& rng, int max_exp = 4, int terms = 4,
                        int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> e(0, max_exp);
    Poly p;
    for (int t = 0; t < terms; ++t)
        p.add_term({e(rng), e(rng)}, random_rational(rng, lo, hi));
    return p;
}

inline Poly random_nonzero_poly(std::mt19937& rng, int max_exp = 4, int terms = 4) {
    Poly p;
    do { p = random_poly(rng, max_exp, terms); } while (p.is_zero());
    return p;
}

inline Weights random_weights(std::mt19937& rng, int hi = 4) {
    std::uniform_int_distribution<int> d(1, hi);
    return Weights(d(rng), d(rng));
}

/// Random polynomial supported on quasidegrees in [lo_deg, hi_deg].
inline Poly random_poly_in_band(std::mt19937& rng, Weights w, int lo_deg, int hi_deg,
                                int tries = 8) {
    Poly p;
    std::uniform_int_distribution<int> pick(lo_deg, hi_deg);
    for (int t = 0; t < tries; ++t) {
        auto monos = monomials_of_degree(w, pick(rng));
        if (monos.empty()) continue;
        std::uniform_int_distribution<std::size_t> which(0, monos.size() - 1);
        p.add_term(monos[which(rng)], random_rational(rng, -2, 2));
    }
    return p;
}

/// A small pool of quasihomogeneous germs with finite codimension.
inline std::vector<PoissonGerm> sample_germs() {
    Poly x = Poly::x(), y = Poly::y();
    std::vector<PoissonGerm> out;
    out.emplace_back(x, Poly(), Weights(1, 1));                              // regular
    out.emplace_back(x * x + y * y, Poly(), Weights(1, 1));                  // Morse
    out.emplace_back(x * x + y * y * y, Poly(), Weights(3, 2));              // A2
    out.emplace_back(x * x * y + pow(y, 4), Poly(), Weights(3, 2));          // D5 poly
    out.emplace_back(x * x * y + pow(y, 4), x, Weights(3, 2));               // D5 with h
    out.emplace_back(x * x + pow(y, 4), y, Weights(2, 1));                   // A3 with h
    out.emplace_back(x * x * x + pow(y, 4), Poly(), Weights(4, 3));          // E6
    return out;
}

}  // namespace ptest
