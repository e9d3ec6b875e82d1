#pragma once

#include <json.hpp>

#include "poisson2/normal_forms.hpp"
#include "poisson2/oracle.hpp"

namespace poisson2 {

std::string to_string(const VectorField& X);
std::string to_string(const Bivector& P);

/// {"weights":[w1,w2],"f":...,"h":...,"d":...,"s":...,"r":...,"c":...,
///  "h0":...,"h1":...,"h2":...,"h1_basis":[...],"h2_basis":[...],
///  "provenance":...}; rationals render as "p/q" strings and an infinite
/// codimension as the string "infinite".
nlohmann::json cohomology_json(const PoissonGerm& germ, const CohomologyReport& rep);

nlohmann::json oracle_json(const OracleReport& rep);

/// Cohomology keys filled from the oracle totals, plus the "oracle" subobject.
nlohmann::json oracle_run_json(const PoissonGerm& germ, const OracleReport& rep);

nlohmann::json crosscheck_json(const PoissonGerm& germ, const CrosscheckResult& res);

nlohmann::json milnor_json(const PoissonGerm& germ, const MilnorData& md);

nlohmann::json normalization_json(const Poly& f, const Poly& u, Weights w,
                                  const NormalizationResult& res,
                                  const PushforwardCheck& check);

nlohmann::json catalog_json(const CatalogEntry& entry);

}  // namespace poisson2
