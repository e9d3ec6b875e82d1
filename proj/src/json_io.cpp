#include "poisson2/json_io.hpp"

namespace poisson2 {

using nlohmann::json;

std::string to_string(const VectorField& X) {
    return "(" + to_string(X.a, X.w) + ") dx + (" + to_string(X.b, X.w) + ") dy";
}

std::string to_string(const Bivector& P) {
    return "(" + to_string(P.g, P.w) + ") dx^dy";
}

namespace {

json germ_header(const PoissonGerm& germ) {
    json j;
    j["weights"] = {germ.weights().w1, germ.weights().w2};
    j["f"] = to_string(germ.f(), germ.weights());
    j["h"] = to_string(germ.h(), germ.weights());
    j["d"] = germ.d();
    j["s"] = germ.s();
    return j;
}

json codim_json(const MilnorData& md) {
    if (md.finite()) return json(*md.c);
    return json("infinite");
}

}  // namespace

json cohomology_json(const PoissonGerm& germ, const CohomologyReport& rep) {
    json j = germ_header(germ);
    j["r"] = rep.r;
    j["c"] = rep.c;
    j["h0"] = rep.h0_dim;
    j["h1"] = rep.h1_dim;
    j["h2"] = rep.h2_dim;
    json h1b = json::array(), h2b = json::array();
    for (const auto& X : rep.h1_basis) h1b.push_back(to_string(X));
    for (const auto& P : rep.h2_basis) h2b.push_back(to_string(P));
    j["h1_basis"] = std::move(h1b);
    j["h2_basis"] = std::move(h2b);
    j["provenance"] = rep.provenance == Provenance::Theorem ? "THEOREM" : "ORACLE";
    return j;
}

json oracle_json(const OracleReport& rep) {
    json rows = json::array();
    for (const GradedDimsRow& r : rep.rows) {
        rows.push_back({{"k", r.k},
                        {"dimF", r.dimF},
                        {"dimX", r.dimX},
                        {"dimV", r.dimV},
                        {"rank_d1", r.rank_d1},
                        {"rank_d2", r.rank_d2},
                        {"h0", r.h0},
                        {"h1", r.h1},
                        {"h2", r.h2}});
    }
    return {{"rows", std::move(rows)},
            {"cutoff", rep.cutoff},
            {"totals", {rep.totals[0], rep.totals[1], rep.totals[2]}},
            {"stabilized", rep.stabilized}};
}

json oracle_run_json(const PoissonGerm& germ, const OracleReport& rep) {
    json j = germ_header(germ);
    MilnorData md = milnor_data(germ.f(), germ.weights());
    j["r"] = resonant_monomials(germ.weights(), germ.d()).size();
    j["c"] = codim_json(md);
    j["h0"] = rep.totals[0];
    j["h1"] = rep.totals[1];
    j["h2"] = rep.totals[2];
    j["h1_basis"] = json::array();
    j["h2_basis"] = json::array();
    j["provenance"] = "ORACLE";
    j["oracle"] = oracle_json(rep);
    return j;
}

json crosscheck_json(const PoissonGerm& germ, const CrosscheckResult& res) {
    json j = cohomology_json(germ, res.theorem);
    j["oracle"] = oracle_json(res.oracle);
    j["agreement"] = {{"h0", res.h0_agree}, {"h1", res.h1_agree}, {"h2", res.h2_agree}};
    if (res.mismatch_degree) j["mismatch_degree"] = *res.mismatch_degree;
    return j;
}

json milnor_json(const PoissonGerm& germ, const MilnorData& md) {
    json j = germ_header(germ);
    j["c"] = codim_json(md);
    j["bound"] = md.bound;
    j["checked_through"] = md.checked_through;
    json basis = json::array();
    for (Monomial u : md.basis) basis.push_back(to_string(u));
    j["basis"] = std::move(basis);
    return j;
}

json normalization_json(const Poly& f, const Poly& u, Weights w,
                        const NormalizationResult& res, const PushforwardCheck& check) {
    json j;
    j["weights"] = {w.w1, w.w2};
    j["f"] = to_string(f, w);
    j["unit"] = to_string(Poly(1) + u, w);
    j["h"] = to_string(res.h_out, w);
    j["constant"] = res.constant.str();
    j["order"] = res.order;
    j["phi"] = {to_string(res.phi.phi1(), w), to_string(res.phi.phi2(), w)};
    j["check"] = {{"pass", check.pass}};
    if (check.residual_order) j["check"]["residual_order"] = *check.residual_order;
    return j;
}

json catalog_json(const CatalogEntry& entry) {
    json j = germ_header(entry.germ);
    j["r"] = resonant_monomials(entry.germ.weights(), entry.germ.d()).size();
    MilnorData md = milnor_data(entry.germ.f(), entry.germ.weights());
    j["c"] = codim_json(md);
    if (!entry.note.empty()) j["note"] = entry.note;
    return j;
}

}  // namespace poisson2
