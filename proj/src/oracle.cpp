#include "poisson2/oracle.hpp"

#include <algorithm>
#include <map>

#include "poisson2/errors.hpp"
#include "poisson2/linalg.hpp"

namespace poisson2 {

namespace {

/// Index of a monomial list; coordinates of polynomials over it, dropping
/// terms outside the window (that is the jet truncation).
struct MonoIndex {
    std::vector<Monomial> list;
    std::map<Monomial, std::size_t> pos;

    explicit MonoIndex(std::vector<Monomial> monos) : list(std::move(monos)) {
        for (std::size_t t = 0; t < list.size(); ++t) pos.emplace(list[t], t);
    }

    std::vector<Rational> coords(const Poly& g) const {
        std::vector<Rational> v(list.size(), Rational(0));
        for (const auto& [m, c] : g.terms()) {
            auto it = pos.find(m);
            if (it != pos.end()) v[it->second] = c;
        }
        return v;
    }
};

std::size_t rank_of_columns(const std::vector<std::vector<Rational>>& cols) {
    // Rank is transpose-invariant, so feed the columns as rows.
    if (cols.empty()) return 0;
    return linalg::rank(cols);
}

/// delta_2 of the unit field carried by `m` in the given slot.
Poly delta2_of_slot(const Poly& F, Monomial m, Axis slot) {
    Poly mp = Poly::mono(m);
    if (slot == Axis::X) return mp * derive(F, Axis::X) - derive(mp, Axis::X) * F;
    return mp * derive(F, Axis::Y) - derive(mp, Axis::Y) * F;
}

struct JetTotals {
    std::size_t h0 = 0, h1 = 0, h2 = 0;
};

JetTotals jet_totals(const PoissonGerm& germ, int cutoff) {
    Weights w = germ.weights();
    int s = germ.s();
    Poly F = germ.coefficient();

    MonoIndex fspace(monomials_up_to_degree(w, cutoff));
    std::vector<std::pair<Monomial, Axis>> xslots;
    for (Monomial m : monomials_up_to_degree(w, cutoff + s + w.w1))
        xslots.emplace_back(m, Axis::X);
    for (Monomial m : monomials_up_to_degree(w, cutoff + s + w.w2))
        xslots.emplace_back(m, Axis::Y);
    MonoIndex vspace(monomials_up_to_degree(w, cutoff + 2 * s + w.w1 + w.w2));

    std::vector<std::vector<Rational>> d1cols;
    d1cols.reserve(fspace.list.size());
    for (Monomial m : fspace.list) {
        Poly mp = Poly::mono(m);
        Poly a = F * derive(mp, Axis::Y);
        Poly b = -(F * derive(mp, Axis::X));
        std::vector<Rational> col(xslots.size(), Rational(0));
        for (std::size_t t = 0; t < xslots.size(); ++t)
            col[t] = (xslots[t].second == Axis::X ? a : b).coeff(xslots[t].first);
        d1cols.push_back(std::move(col));
    }

    std::vector<std::vector<Rational>> d2cols;
    d2cols.reserve(xslots.size());
    for (const auto& [m, slot] : xslots)
        d2cols.push_back(vspace.coords(delta2_of_slot(F, m, slot)));

    std::size_t rank1 = rank_of_columns(d1cols);
    std::size_t rank2 = rank_of_columns(d2cols);

    JetTotals t;
    t.h0 = fspace.list.size() - rank1;
    t.h1 = xslots.size() - rank2 - rank1;
    t.h2 = vspace.list.size() - rank2;
    return t;
}

}  // namespace

GradedDimsRow graded_cochain_dims(const Poly& f, Weights w, int k) {
    auto dopt = is_quasihomogeneous(f, w);
    if (!dopt) throw DomainError("graded_cochain_dims: f must be quasihomogeneous");
    int s = *dopt - w.w1 - w.w2;

    MonoIndex fspace(monomials_of_degree(w, k - s));
    std::vector<std::pair<Monomial, Axis>> xslots;
    for (Monomial m : monomials_of_degree(w, k + w.w1)) xslots.emplace_back(m, Axis::X);
    for (Monomial m : monomials_of_degree(w, k + w.w2)) xslots.emplace_back(m, Axis::Y);
    MonoIndex vspace(monomials_of_degree(w, k + s + w.w1 + w.w2));

    std::vector<std::vector<Rational>> d1cols;
    for (Monomial m : fspace.list) {
        Poly mp = Poly::mono(m);
        Poly a = f * derive(mp, Axis::Y);
        Poly b = -(f * derive(mp, Axis::X));
        std::vector<Rational> col(xslots.size(), Rational(0));
        for (std::size_t t = 0; t < xslots.size(); ++t)
            col[t] = (xslots[t].second == Axis::X ? a : b).coeff(xslots[t].first);
        d1cols.push_back(std::move(col));
    }
    std::vector<std::vector<Rational>> d2cols;
    for (const auto& [m, slot] : xslots)
        d2cols.push_back(vspace.coords(delta2_of_slot(f, m, slot)));

    GradedDimsRow row;
    row.k = k;
    row.dimF = fspace.list.size();
    row.dimX = xslots.size();
    row.dimV = vspace.list.size();
    row.rank_d1 = rank_of_columns(d1cols);
    row.rank_d2 = rank_of_columns(d2cols);
    row.h0 = row.dimF - row.rank_d1;
    row.h1 = row.dimX - row.rank_d2 - row.rank_d1;
    row.h2 = row.dimV - row.rank_d2;
    return row;
}

int default_cutoff(const PoissonGerm& germ) {
    return 2 * germ.d() + germ.weights().max();
}

OracleReport oracle_report(const PoissonGerm& germ, int cutoff) {
    Weights w = germ.weights();
    int s = germ.s();
    OracleReport rep;
    rep.cutoff = cutoff;

    if (germ.is_unperturbed()) {
        int k_lo = std::min({s, -w.max(), -w.sum() - s});
        for (int k = k_lo; k <= cutoff; ++k) {
            GradedDimsRow row = graded_cochain_dims(germ.f(), w, k);
            rep.totals[0] += row.h0;
            rep.totals[1] += row.h1;
            rep.totals[2] += row.h2;
            rep.rows.push_back(row);
        }
        rep.stabilized = cutoff > s;
        for (const GradedDimsRow& row : rep.rows)
            if (row.k > s && (row.h1 != 0 || row.h2 != 0)) rep.stabilized = false;
        return rep;
    }

    JetTotals t = jet_totals(germ, cutoff);
    rep.totals = {t.h0, t.h1, t.h2};
    JetTotals again = jet_totals(germ, cutoff + w.max());
    rep.stabilized = t.h0 == again.h0 && t.h1 == again.h1 && t.h2 == again.h2;
    return rep;
}

CrosscheckResult crosscheck(const PoissonGerm& germ, int cutoff) {
    CrosscheckResult out{theorem_report(germ), oracle_report(germ, cutoff), false, false,
                         false, std::nullopt};
    out.h0_agree = out.theorem.h0_dim == out.oracle.totals[0];
    out.h1_agree = out.theorem.h1_dim == out.oracle.totals[1];
    out.h2_agree = out.theorem.h2_dim == out.oracle.totals[2];

    if (!out.all_agree() && germ.is_unperturbed()) {
        // Locate the first graded degree where brute force disagrees with the
        // theorem-level prediction.
        Weights w = germ.weights();
        int s = germ.s();
        std::map<int, std::size_t> u_by_row;  // X-degree row -> # Milnor classes
        MilnorData md = milnor_data(germ.f(), w);
        for (Monomial u : md.basis) ++u_by_row[qdeg(u, w) - w.sum() - s];
        for (const GradedDimsRow& row : out.oracle.rows) {
            std::size_t h1_pred = row.k == s ? out.theorem.h1_dim : 0;
            std::size_t h2_pred = (row.k == s ? out.theorem.r : 0);
            if (auto it = u_by_row.find(row.k); it != u_by_row.end()) h2_pred += it->second;
            std::size_t h0_pred = row.k == s ? 1 : 0;
            if (row.h0 != h0_pred || row.h1 != h1_pred || row.h2 != h2_pred) {
                out.mismatch_degree = row.k;
                break;
            }
        }
    }
    return out;
}

}  // namespace poisson2
