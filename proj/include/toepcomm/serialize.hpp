#pragma once

#include <nlohmann/json.hpp>

#include "toepcomm/classify.hpp"
#include "toepcomm/curve.hpp"
#include "toepcomm/factor.hpp"
#include "toepcomm/opspace.hpp"
#include "toepcomm/symbol.hpp"

namespace toepcomm {

using json = nlohmann::json;

json complex_to_json(Complex z);  // [re, im]
Complex complex_from_json(const json& j);

// {"label": ..., "order": N, "coeffs": [[re, im], ...]}
json symbol_to_json(const TaylorSymbol& s);
TaylorSymbol symbol_from_json(const json& j);

// {"zeros": [[re, im], ...], "constant": [re, im]}
json blaschke_to_json(const BlaschkeProduct& b);
BlaschkeProduct blaschke_from_json(const json& j);

// {"samples": [{"a": [re,im], "w": [re,im], "n": int}, ...],
//  "excluded": [{"a": ..., "w": ...}, ...]}
json profile_to_json(const WindingProfile& p);

// {"k": int, "h": TaylorSymbol, "residual": float}
json bdu_to_json(const BDUFactorization& f);

json tc_to_json(const TCFactorization& f);

// {"n": N, "rows": [[[re, im], ...], ...]}
json operator_to_json(const TruncatedOperator& t);

json witness_to_json(const DensityWitness& w);

// {"mcp": ..., "dcp": ..., "confidence": {...}, "rules": [...],
//  "diagnostics": [...]}
json verdict_to_json(const Verdict& v);

json crossings_to_json(const std::vector<CurveCrossing>& crossings);

}  // namespace toepcomm
