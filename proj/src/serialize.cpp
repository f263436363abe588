#include "toepcomm/serialize.hpp"

#include "toepcomm/errors.hpp"

namespace toepcomm {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw PreconditionError("complex values serialize as [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

json symbol_to_json(const TaylorSymbol& s) {
    json coeffs = json::array();
    for (const Complex& c : s.coeffs()) coeffs.push_back(complex_to_json(c));
    return json{{"label", s.label()}, {"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

TaylorSymbol symbol_from_json(const json& j) {
    std::vector<Complex> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(complex_from_json(c));
    TaylorSymbol s(std::move(coeffs), j.value("label", ""));
    if (j.contains("order") && j["order"].get<int>() != s.order())
        throw PreconditionError("serialized order disagrees with the coefficient count");
    return s;
}

json blaschke_to_json(const BlaschkeProduct& b) {
    json zeros = json::array();
    for (const Complex& a : b.zeros()) zeros.push_back(complex_to_json(a));
    return json{{"zeros", std::move(zeros)}, {"constant", complex_to_json(b.unimodular_constant())}};
}

BlaschkeProduct blaschke_from_json(const json& j) {
    std::vector<Complex> zeros;
    for (const auto& a : j.at("zeros")) zeros.push_back(complex_from_json(a));
    Complex constant(1.0);
    if (j.contains("constant")) constant = complex_from_json(j["constant"]);
    return BlaschkeProduct(std::move(zeros), constant);
}

json profile_to_json(const WindingProfile& p) {
    json samples = json::array();
    for (const WindingSample& s : p.samples)
        samples.push_back(json{{"a", complex_to_json(s.a)}, {"w", complex_to_json(s.w)}, {"n", s.n}});
    json excluded = json::array();
    for (const ExcludedSample& e : p.excluded)
        excluded.push_back(json{{"a", complex_to_json(e.a)}, {"w", complex_to_json(e.w)}});
    return json{{"samples", std::move(samples)}, {"excluded", std::move(excluded)}};
}

json bdu_to_json(const BDUFactorization& f) {
    return json{{"k", f.k}, {"h", symbol_to_json(f.h)}, {"residual", f.residual}};
}

json tc_to_json(const TCFactorization& f) {
    return json{{"blaschke", blaschke_to_json(f.blaschke)},
                {"h", symbol_to_json(f.h)},
                {"residual", f.residual}};
}

json operator_to_json(const TruncatedOperator& t) {
    json rows = json::array();
    for (int i = 0; i < t.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < t.dim(); ++j) row.push_back(complex_to_json(t.matrix(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"n", t.dim()}, {"rows", std::move(rows)}};
}

json witness_to_json(const DensityWitness& w) {
    json f0 = json::array();
    for (int i = 0; i < w.f0.size(); ++i) f0.push_back(complex_to_json(w.f0(i)));
    return json{{"f0", std::move(f0)},
                {"depth", w.depth},
                {"max_pairing", w.max_pairing},
                {"separating_h", symbol_to_json(w.separating_h)},
                {"separating_pairing", w.separating_pairing}};
}

json verdict_to_json(const Verdict& v) {
    json rules = json::array();
    for (const FiredRule& r : v.rules)
        rules.push_back(json{{"id", r.id}, {"cite", r.cite}, {"evidence", r.evidence}});
    return json{{"mcp", to_string(v.mcp)},
                {"dcp", to_string(v.dcp)},
                {"confidence", json{{"mcp", to_string(v.mcp_confidence)},
                                    {"dcp", to_string(v.dcp_confidence)}}},
                {"rules", std::move(rules)},
                {"diagnostics", v.diagnostics}};
}

json crossings_to_json(const std::vector<CurveCrossing>& crossings) {
    json out = json::array();
    for (const CurveCrossing& c : crossings)
        out.push_back(json{{"segment_a", c.segment_a},
                           {"segment_b", c.segment_b},
                           {"point", complex_to_json(c.point)},
                           {"grazing", c.grazing}});
    return out;
}

}  // namespace toepcomm
