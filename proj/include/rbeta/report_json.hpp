#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "rbeta/closed_forms.hpp"
#include "rbeta/curve_params.hpp"
#include "rbeta/lattice.hpp"
#include "rbeta/verifier.hpp"
#include "rbeta/weierstrass.hpp"

namespace rbeta {

using Json = nlohmann::ordered_json;

/// Every document carries "schema": kSchemaVersion as its first key.
inline constexpr int kSchemaVersion = 1;

Json complex_json(Complex z);
/// {"re": .., "im": ..} or the string "pole".
Json node_value_json(const NodeValue& v);

Json params_json(const CurveParams& params, const Lattice& lattice,
                 const RadicalCatalog& catalog);

/// {"schema", "beta", "entries": [{m, n, symbol, re, im} | {m, n, symbol, "value": "pole"}]}
Json grid_json(double beta, const ClosedFormTable& table);

/// Header "m,n,symbol,re,im" then 81 rows; pole rows carry "pole" in both value columns.
std::string grid_csv(const ClosedFormTable& table);

Json report_json(const VerificationReport& report);
Json sweep_json(const std::vector<VerificationReport>& reports);

}  // namespace rbeta
