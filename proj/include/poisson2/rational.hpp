#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "poisson2/errors.hpp"

namespace poisson2 {

/// Exact arbitrary-precision rational. Always stored reduced with a positive
/// denominator; equality is structural. Wraps GMP's mpq_class so that
/// arithmetic yields plain values instead of expression templates.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose, integers embed
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses a base-10 integer literal of arbitrary length.
    static Rational from_integer_literal(const std::string& digits) {
        return Rational(mpq_class(mpz_class(digits, 10)));
    }

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational reciprocal() const {
        if (is_zero()) throw DomainError("reciprocal of zero");
        return Rational(mpq_class(1) / v_);
    }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace poisson2
