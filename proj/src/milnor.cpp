#include "poisson2/milnor.hpp"

#include <algorithm>
#include <map>

#include "poisson2/errors.hpp"
#include "poisson2/linalg.hpp"

namespace poisson2 {

namespace {

std::vector<Rational> coords_in_monomials(const Poly& g, const std::vector<Monomial>& basis) {
    std::map<Monomial, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
    std::vector<Rational> v(basis.size(), Rational(0));
    for (const auto& [m, c] : g.terms()) {
        auto it = index.find(m);
        if (it == index.end())
            throw std::logic_error("coords_in_monomials: term outside the graded space");
        v[it->second] = c;
    }
    return v;
}

int checked_degree(const Poly& f, Weights w) {
    auto deg = is_quasihomogeneous(f, w);
    if (!deg || *deg <= 0)
        throw DomainError("Milnor algebra requires quasihomogeneous f of positive degree");
    return *deg;
}

}  // namespace

std::vector<Poly> graded_ideal_piece(const Poly& f, Weights w, int k) {
    std::vector<Poly> out;
    for (Axis ax : {Axis::X, Axis::Y}) {
        Poly df = derive(f, ax);
        if (df.is_zero()) continue;
        int dd = *is_quasihomogeneous(df, w);
        for (Monomial m : monomials_of_degree(w, k - dd))
            out.push_back(Poly::mono(m) * df);
    }
    return out;
}

std::optional<std::vector<Rational>> express_in_span(const Poly& target,
                                                     const std::vector<Poly>& gens,
                                                     Weights w, int k) {
    auto monos = monomials_of_degree(w, k);
    // Rows are indexed by monomials, columns by generators.
    linalg::QMatrix A(monos.size(), std::vector<Rational>(gens.size(), Rational(0)));
    for (std::size_t c = 0; c < gens.size(); ++c) {
        auto col = coords_in_monomials(gens[c], monos);
        for (std::size_t r = 0; r < monos.size(); ++r) A[r][c] = col[r];
    }
    return linalg::solve(std::move(A), coords_in_monomials(target, monos));
}

std::vector<Monomial> complement_at_degree(const Poly& f, Weights w, int k) {
    auto monos = monomials_of_degree(w, k);
    if (monos.empty()) return {};
    std::map<Monomial, std::size_t> index;
    for (std::size_t t = 0; t < monos.size(); ++t) index.emplace(monos[t], t);

    // Incremental echelon span over the monomial coordinates, rows kept monic.
    std::vector<std::vector<Rational>> echelon;   // reduced rows
    std::vector<std::size_t> pivot_of;            // pivot column per row

    auto reduce_row = [&](std::vector<Rational> row) -> std::optional<std::vector<Rational>> {
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            const auto& e = echelon[r];
            std::size_t p = pivot_of[r];
            if (row[p].is_zero()) continue;
            Rational factor = row[p] / e[p];
            for (std::size_t c2 = 0; c2 < row.size(); ++c2) row[c2] -= factor * e[c2];
        }
        for (const auto& v : row)
            if (!v.is_zero()) return row;
        return std::nullopt;
    };
    auto insert_row = [&](std::vector<Rational> row) {
        std::size_t p = 0;
        while (row[p].is_zero()) ++p;
        Rational inv = row[p].reciprocal();
        for (auto& v : row) v *= inv;
        echelon.push_back(std::move(row));
        pivot_of.push_back(p);
    };

    for (const Poly& gen : graded_ideal_piece(f, w, k))
        if (auto red = reduce_row(coords_in_monomials(gen, monos))) insert_row(std::move(*red));

    std::vector<Monomial> basis;
    for (std::size_t t = 0; t < monos.size(); ++t) {
        std::vector<Rational> unit(monos.size(), Rational(0));
        unit[t] = Rational(1);
        if (auto red = reduce_row(std::move(unit))) {
            basis.push_back(monos[t]);
            insert_row(std::move(*red));
        }
    }
    return basis;
}

MilnorData milnor_data(const Poly& f, Weights w) {
    int d = checked_degree(f, w);
    MilnorData md;
    md.bound = 2 * d - 2 * w.w1 - 2 * w.w2;
    md.checked_through = std::max(md.bound, 0) + w.max();

    bool infinite = false;
    for (int k = 0; k <= md.checked_through; ++k) {
        auto comp = complement_at_degree(f, w, k);
        if (!comp.empty() && k > md.bound) infinite = true;
        md.basis.insert(md.basis.end(), comp.begin(), comp.end());
    }
    if (!infinite) md.c = md.basis.size();
    return md;
}

IdealReduction reduce_mod_ideal(const Poly& g, const Poly& f, Weights w) {
    MilnorData md = milnor_data(f, w);
    if (!md.finite()) throw DomainError("reduce_mod_ideal: f has infinite codimension");

    IdealReduction out;
    for (const auto& [k, gk] : graded_components(g, w)) {
        // Columns: m*f_x products, m*f_y products, then the complement
        // monomials of this degree. The complement construction guarantees a
        // solution exists.
        std::vector<Poly> gens;
        std::vector<std::pair<Axis, Monomial>> tags;
        for (Axis ax : {Axis::X, Axis::Y}) {
            Poly df = derive(f, ax);
            if (df.is_zero()) continue;
            int dd = *is_quasihomogeneous(df, w);
            for (Monomial m : monomials_of_degree(w, k - dd)) {
                gens.push_back(Poly::mono(m) * df);
                tags.emplace_back(ax, m);
            }
        }
        std::vector<Monomial> comp;
        for (Monomial u : md.basis)
            if (qdeg(u, w) == k) comp.push_back(u);
        for (Monomial u : comp) gens.push_back(Poly::mono(u));

        auto sol = express_in_span(gk, gens, w, k);
        if (!sol) throw std::logic_error("reduce_mod_ideal: graded solve failed");
        for (std::size_t t = 0; t < tags.size(); ++t) {
            if ((*sol)[t].is_zero()) continue;
            Poly part = Poly::mono(tags[t].second, (*sol)[t]);
            (tags[t].first == Axis::X ? out.witness.p : out.witness.q) += part;
        }
        for (std::size_t t = 0; t < comp.size(); ++t)
            out.normal_form.add_term(comp[t], (*sol)[tags.size() + t]);
    }
    return out;
}

std::vector<Monomial> resonant_monomials(Weights w, int d) {
    return monomials_of_degree(w, d - w.w1 - w.w2);
}

}  // namespace poisson2
