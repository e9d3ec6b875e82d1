#include "poisson2/qpoly.hpp"

#include <algorithm>
#include <utility>

namespace poisson2 {

Poly pow(const Poly& base, int e) {
    if (e < 0) throw DomainError("negative polynomial power");
    Poly r = 1;
    for (int k = 0; k < e; ++k) r *= base;
    return r;
}

Poly derive(const Poly& g, Axis axis) {
    Poly r;
    for (const auto& [m, c] : g.terms()) {
        if (axis == Axis::X) {
            if (m.i > 0) r.add_term({m.i - 1, m.j}, Rational(m.i) * c);
        } else {
            if (m.j > 0) r.add_term({m.i, m.j - 1}, Rational(m.j) * c);
        }
    }
    return r;
}

Poly apply_field(const Poly& A, const Poly& B, const Poly& g) {
    return A * derive(g, Axis::X) + B * derive(g, Axis::Y);
}

Poly euler_derivative(const Poly& g, Weights w) {
    Poly r;
    for (const auto& [m, c] : g.terms()) r.add_term(m, Rational(qdeg(m, w)) * c);
    return r;
}

std::map<int, Poly> graded_components(const Poly& g, Weights w) {
    std::map<int, Poly> out;
    for (const auto& [m, c] : g.terms()) out[qdeg(m, w)].add_term(m, c);
    return out;
}

Poly graded_component(const Poly& g, Weights w, int k) {
    Poly out;
    for (const auto& [m, c] : g.terms())
        if (qdeg(m, w) == k) out.add_term(m, c);
    return out;
}

std::optional<int> is_quasihomogeneous(const Poly& g, Weights w) {
    if (g.is_zero()) throw DomainError("the zero polynomial has no quasidegree");
    std::optional<int> d;
    for (const auto& [m, c] : g.terms()) {
        int k = qdeg(m, w);
        if (!d) d = k;
        else if (*d != k) return std::nullopt;
    }
    return d;
}

std::vector<Monomial> monomials_of_degree(Weights w, int k) {
    std::vector<Monomial> out;
    if (k < 0) return out;
    for (int i = 0; i * w.w1 <= k; ++i) {
        int rem = k - i * w.w1;
        if (rem % w.w2 == 0) out.push_back({i, rem / w.w2});
    }
    return out;
}

std::vector<Monomial> monomials_up_to_degree(Weights w, int k) {
    std::vector<Monomial> out;
    for (int d = 0; d <= k; ++d) {
        auto md = monomials_of_degree(w, d);
        out.insert(out.end(), md.begin(), md.end());
    }
    return out;
}

Poly truncate(const Poly& g, Weights w, int N) {
    Poly r;
    for (const auto& [m, c] : g.terms())
        if (qdeg(m, w) <= N) r.add_term(m, c);
    return r;
}

std::optional<int> poly_order(const Poly& g, Weights w) {
    std::optional<int> o;
    for (const auto& [m, c] : g.terms()) {
        int k = qdeg(m, w);
        if (!o || k < *o) o = k;
    }
    return o;
}

std::optional<int> poly_top_degree(const Poly& g, Weights w) {
    std::optional<int> o;
    for (const auto& [m, c] : g.terms()) {
        int k = qdeg(m, w);
        if (!o || k > *o) o = k;
    }
    return o;
}

Poly unit_divide(const Poly& g, const Poly& u, Weights w, int N) {
    Rational u0 = u.constant_term();
    if (u0.is_zero()) throw DomainError("unit_divide: divisor vanishes at the origin");

    // Graded recursion q_k = (g_k - sum_{0<m<=k} u_m q_{k-m}) / u_0.
    auto gc = graded_components(truncate(g, w, N), w);
    auto uc = graded_components(truncate(u, w, N), w);
    std::map<int, Poly> q;
    Poly result;
    for (int k = 0; k <= N; ++k) {
        Poly num;
        if (auto it = gc.find(k); it != gc.end()) num = it->second;
        for (const auto& [m, um] : uc) {
            if (m <= 0 || m > k) continue;
            auto qit = q.find(k - m);
            if (qit != q.end()) num -= graded_component(um * qit->second, w, k);
        }
        if (num.is_zero()) continue;
        Poly qk = u0.reciprocal() * num;
        q.emplace(k, qk);
        result += qk;
    }
    return result;
}

Poly exp_unit(const Poly& nu, Weights w, int N) {
    if (!nu.constant_term().is_zero())
        throw DomainError("exp_unit: argument has a nonzero constant term");
    Poly nu_t = truncate(nu, w, N);
    Poly result = 1;
    Poly term = 1;
    for (long k = 1; !term.is_zero(); ++k) {
        term = truncate(term * nu_t, w, N);
        term = Rational(1, k) * term;
        result += term;
    }
    return result;
}

Poly substitute(const Poly& g, const Poly& px, const Poly& py, Weights w, int N) {
    int max_i = 0, max_j = 0;
    for (const auto& [m, c] : g.terms()) {
        max_i = std::max(max_i, m.i);
        max_j = std::max(max_j, m.j);
    }
    std::vector<Poly> xp(max_i + 1), yp(max_j + 1);
    xp[0] = 1;
    for (int i = 1; i <= max_i; ++i) xp[i] = truncate(xp[i - 1] * px, w, N);
    yp[0] = 1;
    for (int j = 1; j <= max_j; ++j) yp[j] = truncate(yp[j - 1] * py, w, N);

    Poly r;
    for (const auto& [m, c] : g.terms())
        r += truncate(c * (xp[m.i] * yp[m.j]), w, N);
    return r;
}

std::string to_string(Monomial m) {
    std::string s;
    if (m.i > 0) {
        s += "x";
        if (m.i > 1) s += "^" + std::to_string(m.i);
    }
    if (m.j > 0) {
        if (!s.empty()) s += "*";
        s += "y";
        if (m.j > 1) s += "^" + std::to_string(m.j);
    }
    if (s.empty()) s = "1";
    return s;
}

std::string to_string(const Poly& g, Weights w) {
    if (g.is_zero()) return "0";

    std::vector<std::pair<Monomial, Rational>> terms(g.terms().begin(), g.terms().end());
    std::stable_sort(terms.begin(), terms.end(),
                     [w](const auto& a, const auto& b) {
                         int da = qdeg(a.first, w), db = qdeg(b.first, w);
                         if (da != db) return da < db;
                         return a.first.i < b.first.i;
                     });

    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        bool is_const = (m.i == 0 && m.j == 0);
        if (is_const) {
            out += a.str();
        } else if (a == Rational(1)) {
            out += to_string(m);
        } else {
            out += a.str() + "*" + to_string(m);
        }
        first = false;
    }
    return out;
}

}  // namespace poisson2
