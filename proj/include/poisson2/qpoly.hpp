#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "poisson2/rational.hpp"

namespace poisson2 {

/// Positive weights (w1, w2) of the variables x and y. The Euler field
/// W = w1*x d/dx + w2*y d/dy is derived from this pair, never stored.
struct Weights {
    int w1 = 1;
    int w2 = 1;

    Weights() = default;
    Weights(int a, int b) : w1(a), w2(b) {
        if (w1 < 1 || w2 < 1) throw DomainError("weights must be positive integers");
    }

    int max() const { return w1 > w2 ? w1 : w2; }
    int sum() const { return w1 + w2; }

    bool operator==(const Weights&) const = default;
};

/// Exponent pair x^i y^j.
struct Monomial {
    int i = 0;
    int j = 0;

    auto operator<=>(const Monomial&) const = default;
};

inline int qdeg(Monomial m, Weights w) { return m.i * w.w1 + m.j * w.w2; }

enum class Axis { X, Y };

/// Sparse bivariate polynomial over exact rationals. No zero coefficient is
/// ever stored; the zero polynomial is the empty map.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational>;

    Poly() = default;
    Poly(long n) {  // NOLINT: implicit, constants embed
        if (n != 0) terms_.emplace(Monomial{0, 0}, Rational(n));
    }
    Poly(const Rational& c) {  // NOLINT
        if (!c.is_zero()) terms_.emplace(Monomial{0, 0}, c);
    }

    static Poly mono(Monomial m, Rational c = 1) {
        Poly p;
        if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
        return p;
    }
    static Poly x() { return mono({1, 0}); }
    static Poly y() { return mono({0, 1}); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(Monomial m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_term() const { return coeff({0, 0}); }

    /// Adds c*x^m into this polynomial, erasing the entry if it cancels.
    void add_term(Monomial m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term({ma.i + mb.i, ma.j + mb.j}, ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Rational& c, const Poly& p) {
        Poly r;
        if (c.is_zero()) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
        return r;
    }

    bool operator==(const Poly&) const = default;

private:
    TermMap terms_;
};

Poly pow(const Poly& base, int e);

/// Exact partial derivative.
Poly derive(const Poly& g, Axis axis);

/// Directional derivative A*dg/dx + B*dg/dy of g along the field A d/dx + B d/dy.
Poly apply_field(const Poly& A, const Poly& B, const Poly& g);

/// W.g for the Euler field of w; equals (deg g) * g on quasihomogeneous g.
Poly euler_derivative(const Poly& g, Weights w);

/// Splits g into its quasihomogeneous components, keyed by quasidegree.
/// Components sum to g; only degrees actually present appear.
std::map<int, Poly> graded_components(const Poly& g, Weights w);

/// The quasidegree-k component of g (zero polynomial if absent).
Poly graded_component(const Poly& g, Weights w, int k);

/// The common quasidegree of all monomials of g, or nullopt if mixed.
/// The zero polynomial has no degree and is rejected.
std::optional<int> is_quasihomogeneous(const Poly& g, Weights w);

/// All monomials of quasidegree k, x-exponent ascending. Empty when k is
/// negative or not a quasidegree.
std::vector<Monomial> monomials_of_degree(Weights w, int k);

/// All monomials of quasidegree <= k, degree by degree.
std::vector<Monomial> monomials_up_to_degree(Weights w, int k);

/// Drops every term of quasidegree > N.
Poly truncate(const Poly& g, Weights w, int N);

/// Minimal quasidegree among the terms of g; nullopt for the zero polynomial.
std::optional<int> poly_order(const Poly& g, Weights w);

/// Maximal quasidegree among the terms of g; nullopt for the zero polynomial.
std::optional<int> poly_top_degree(const Poly& g, Weights w);

/// Power-series quotient q with q*u = g modulo quasidegree > N.
/// Requires u(0,0) != 0.
Poly unit_divide(const Poly& g, const Poly& u, Weights w, int N);

/// exp(nu) = sum nu^k / k!, truncated beyond quasidegree N.
/// Requires nu(0,0) = 0; the result has constant term 1.
Poly exp_unit(const Poly& nu, Weights w, int N);

/// g(px, py) truncated beyond quasidegree N.
Poly substitute(const Poly& g, const Poly& px, const Poly& py, Weights w, int N);

/// Canonical rendering: terms ascending by (quasidegree, x-exponent), in the
/// grammar accepted by parse_poly.
std::string to_string(const Poly& g, Weights w = Weights{});

std::string to_string(Monomial m);

}  // namespace poisson2
