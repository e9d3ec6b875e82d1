#pragma once

#include <array>
#include <optional>
#include <vector>

#include "poisson2/cohomology.hpp"

namespace poisson2 {

/// One degree of the graded cochain complex of an unperturbed germ. The row
/// index k is the vector-field quasidegree; delta_1 feeds X_k from functions
/// of degree k - s and delta_2 maps X_k into bivectors of degree k + s.
struct GradedDimsRow {
    int k = 0;
    std::size_t dimF = 0, dimX = 0, dimV = 0;
    std::size_t rank_d1 = 0, rank_d2 = 0;
    std::size_t h0 = 0, h1 = 0, h2 = 0;
};

/// Brute-force cohomology dimensions. For the unperturbed germ the rows are
/// the graded degrees up to the cutoff; for a perturbed germ the complex is
/// only filtered, so the totals come from the truncated jet complex
/// F^{<=cutoff} -> X^{<=cutoff+s} -> V^{<=cutoff+2s} and `rows` stays empty.
struct OracleReport {
    std::vector<GradedDimsRow> rows;
    int cutoff = 0;
    std::array<std::size_t, 3> totals{0, 0, 0};
    bool stabilized = false;
};

/// Exact ranks of delta_1 into and delta_2 out of the vector fields of
/// quasidegree k, for the unperturbed germ of f.
GradedDimsRow graded_cochain_dims(const Poly& f, Weights w, int k);

/// Full report; stabilization means the totals can no longer move (vanishing
/// rows beyond the concentration degrees for the graded case, totals
/// unchanged under a cutoff bump of max(w1, w2) for the jet case).
OracleReport oracle_report(const PoissonGerm& germ, int cutoff);

/// Default cutoff 2d + max(w1, w2).
int default_cutoff(const PoissonGerm& germ);

/// Theorem-level report versus brute force, with per-space agreement.
struct CrosscheckResult {
    CohomologyReport theorem;
    OracleReport oracle;
    bool h0_agree = false, h1_agree = false, h2_agree = false;
    std::optional<int> mismatch_degree;  // first offending graded row, when graded

    bool all_agree() const { return h0_agree && h1_agree && h2_agree; }
};

CrosscheckResult crosscheck(const PoissonGerm& germ, int cutoff);

}  // namespace poisson2
