#include "toepcomm/classify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "toepcomm/curve.hpp"
#include "toepcomm/errors.hpp"
#include "toepcomm/factor.hpp"
#include "toepcomm/numfmt.hpp"
#include "toepcomm/opspace.hpp"
#include "toepcomm/serialize.hpp"

namespace toepcomm {

const char* to_string(Conclusion c) {
    switch (c) {
        case Conclusion::Yes: return "Yes";
        case Conclusion::No: return "No";
        case Conclusion::Unknown: return "Unknown";
    }
    return "Unknown";
}

const char* to_string(Confidence c) {
    return c == Confidence::Certified ? "Certified" : "Heuristic";
}

ResolvedConclusion resolve_conclusions(const std::vector<ConclusionCandidate>& candidates) {
    bool certified_yes = false, certified_no = false;
    bool heuristic_yes = false, heuristic_no = false;
    for (const ConclusionCandidate& c : candidates) {
        if (c.conclusion == Conclusion::Unknown) continue;
        const bool yes = c.conclusion == Conclusion::Yes;
        if (c.confidence == Confidence::Certified)
            (yes ? certified_yes : certified_no) = true;
        else
            (yes ? heuristic_yes : heuristic_no) = true;
    }
    if (certified_yes && certified_no) return {Conclusion::Unknown, Confidence::Heuristic, true};
    if (certified_no) return {Conclusion::No, Confidence::Certified, false};
    if (certified_yes) return {Conclusion::Yes, Confidence::Certified, false};
    if (heuristic_no && heuristic_yes) return {Conclusion::Unknown, Confidence::Heuristic, false};
    if (heuristic_no) return {Conclusion::No, Confidence::Heuristic, false};
    if (heuristic_yes) return {Conclusion::Yes, Confidence::Heuristic, false};
    return {Conclusion::Unknown, Confidence::Heuristic, false};
}

namespace {

// Rule citations name the classical results the verdicts rest on.
constexpr const char* kCiteR1 =
    "a symbol taking one value twice cannot have a minimal commutant "
    "(reproducing-kernel functional obstruction)";
constexpr const char* kCiteR2 =
    "two interior points with distinct winding numbers rule out the double "
    "commutant property (argument-principle obstruction)";
constexpr const char* kCiteR3 =
    "a non-univalent symbol that single covers an open set has a full "
    "commutant (Deddens-Wong) but fails the double commutant property";
constexpr const char* kCiteR4 =
    "powers of z and finite Blaschke products are non-unitary isometries "
    "with the double commutant property (Wold decomposition argument)";
constexpr const char* kCiteR5 =
    "a univalent symbol with a Jordan image is a weak-star generator "
    "(Walsh polynomial approximation), giving the minimal commutant and "
    "hence the double commutant property";
constexpr const char* kCiteR6 =
    "Baker-Deddens-Ullman factorization phi = h(z^k) with h univalent onto "
    "a Jordan domain gives the double commutant property";
constexpr const char* kCiteR7 =
    "minimal winding number report: k(phi) against the candidate Blaschke "
    "order (equality is necessary for the double commutant property)";

constexpr double kInnerTolerance = 1e-8;

struct RuleState {
    Verdict verdict;
    std::vector<ConclusionCandidate> mcp;
    std::vector<ConclusionCandidate> dcp;

    void fire(const std::string& id, const char* cite, json evidence) {
        verdict.rules.push_back({id, cite, std::move(evidence)});
    }
    void conclude_mcp(Conclusion c, Confidence conf, const std::string& rule) {
        mcp.push_back({c, conf, rule});
    }
    void conclude_dcp(Conclusion c, Confidence conf, const std::string& rule) {
        dcp.push_back({c, conf, rule});
    }
    void diagnostic(const std::string& stage, const Error& e) {
        verdict.diagnostics.push_back(stage + ": " + e.what());
    }
};

// Largest deviation of |phi| from 1 on the boundary grid; a symbol within
// the noise tolerance of modulus one is (numerically) inner, i.e. a
// finite Blaschke product at this truncation.
double inner_deviation(const TaylorSymbol& s) {
    double worst = 0.0;
    for (const Complex& v : s.eval_circle(std::max(1024, 2 * s.order()), 1.0))
        worst = std::max(worst, std::abs(std::abs(v) - 1.0));
    return worst;
}

json winding_sample_json(const WindingSample& s) {
    return json{{"a", complex_to_json(s.a)}, {"w", complex_to_json(s.w)}, {"n", s.n}};
}

}  // namespace

Verdict classify(const TaylorSymbol& s, const ClassifyConfig& cfg) {
    if (s.effective_degree() < 1)
        throw PreconditionError("classification needs a nonconstant symbol");

    RuleState st;

    // ---- measurements ----
    std::optional<UnivalenceVerdict> univalence;
    try {
        univalence = univalence_probe(s, cfg.grid, cfg.curve_nodes);
    } catch (const Error& e) {
        st.diagnostic("univalence_probe", e);
    }

    std::optional<WindingProfile> profile;
    try {
        profile = winding_profile(s, cfg.grid, cfg.curve_nodes);
    } catch (const Error& e) {
        st.diagnostic("winding_profile", e);
    }

    std::optional<std::vector<CurveCrossing>> crossings;
    try {
        crossings = jordan_test(BoundaryCurve(s, cfg.curve_nodes));
    } catch (const Error& e) {
        st.diagnostic("jordan_test", e);
    }

    std::optional<BDUCrossCheck> crosscheck;
    std::optional<BDUFactorization> bdu;
    if (s.exact_polynomial()) {
        try {
            bdu = bdu_factor(s);
            crosscheck = bdu_crosscheck(s, std::max(cfg.grid, 24));
        } catch (const Error& e) {
            st.diagnostic("bdu", e);
        }
    }

    // ---- R1: certified non-univalence => no minimal commutant ----
    if (univalence && univalence->certified_nonunivalent) {
        json ev{{"collision", univalence->from_grid_collision}};
        if (univalence->witness) {
            ev["witness_a"] = complex_to_json(univalence->witness->first);
            ev["witness_b"] = complex_to_json(univalence->witness->second);
        }
        if (univalence->witness_w) ev["witness_w"] = complex_to_json(*univalence->witness_w);
        if (univalence->witness_winding) ev["winding"] = *univalence->witness_winding;
        st.fire("R1", kCiteR1, std::move(ev));
        st.conclude_mcp(Conclusion::No, Confidence::Certified, "R1");
    }

    // ---- R2: two distinct integer windings => no double commutant ----
    if (profile) {
        if (auto pair = winding_inconstancy(*profile)) {
            st.fire("R2", kCiteR2,
                    json{{"first", winding_sample_json(pair->first)},
                         {"second", winding_sample_json(pair->second)}});
            st.conclude_dcp(Conclusion::No, Confidence::Certified, "R2");
        }
    }

    // ---- R3: single cover + non-univalence => no double commutant ----
    const bool r1_fired = univalence && univalence->certified_nonunivalent;
    if (profile && r1_fired) {
        const SingleCoverVerdict cover = single_cover_probe(s, *profile);
        if (cover.single_covers) {
            json ev{{"witness_w", complex_to_json(*cover.witness_w)},
                    {"witness_a", complex_to_json(*cover.witness_a)}};
            // the constructive half: a vector annihilating the polynomials
            // on phi paired against a separating dictionary element
            try {
                int depth = cfg.krylov_depth;
                const int deg = std::max(1, s.effective_degree());
                if (s.exact_polynomial())
                    depth = std::max(1, std::min(depth, cfg.witness_dim / deg));
                if (auto witness = density_witness(s, cfg.witness_dim, depth)) {
                    ev["density_witness"] = witness_to_json(*witness);
                } else {
                    ev["density_witness"] = "dense at this truncation";
                }
            } catch (const Error& e) {
                st.diagnostic("density_witness", e);
            }
            st.fire("R3", kCiteR3, std::move(ev));
            st.conclude_dcp(Conclusion::No, Confidence::Certified, "R3");
        }
    }

    // ---- R4: inner symbol (z^n or finite Blaschke product) ----
    try {
        const double deviation = inner_deviation(s);
        if (deviation <= kInnerTolerance) {
            BoundaryCurve curve(s, cfg.curve_nodes);
            const int order = winding_number(curve, Complex(0.0));
            st.fire("R4", kCiteR4, json{{"modulus_deviation", deviation}, {"order", order}});
            st.conclude_dcp(Conclusion::Yes, Confidence::Certified, "R4");
            if (order >= 2)
                st.conclude_mcp(Conclusion::No, Confidence::Certified, "R4");
            else
                st.conclude_mcp(Conclusion::Yes, Confidence::Certified, "R4");
        }
    } catch (const Error& e) {
        st.diagnostic("inner_test", e);
    }

    // ---- R5: plausibly univalent with Jordan boundary ----
    const bool plausibly_univalent = univalence && !univalence->certified_nonunivalent;
    bool boundary_jordan = false;
    if (crossings) {
        boundary_jordan = true;
        for (const CurveCrossing& c : *crossings)
            if (!c.grazing) boundary_jordan = false;
    }
    if (plausibly_univalent && boundary_jordan) {
        st.fire("R5", kCiteR5,
                json{{"crossings", crossings ? crossings->size() : 0},
                     {"grid", cfg.grid},
                     {"curve_nodes", cfg.curve_nodes}});
        st.conclude_mcp(Conclusion::Yes, Confidence::Heuristic, "R5");
        st.conclude_dcp(Conclusion::Yes, Confidence::Heuristic, "R5");
    }

    // ---- R6: phi = h(z^k) with univalent Jordan h ----
    if (bdu && crosscheck && crosscheck->agree) {
        try {
            const UnivalenceVerdict h_univalence =
                univalence_probe(bdu->h, cfg.grid, cfg.curve_nodes);
            bool h_jordan = true;
            for (const CurveCrossing& c : jordan_test(BoundaryCurve(bdu->h, cfg.curve_nodes)))
                if (!c.grazing) h_jordan = false;
            if (!h_univalence.certified_nonunivalent && h_jordan) {
                st.fire("R6", kCiteR6,
                        json{{"k", bdu->k},
                             {"bdu_residual", bdu->residual},
                             {"h", bdu->h.label()}});
                st.conclude_dcp(Conclusion::Yes, Confidence::Heuristic, "R6");
            }
        } catch (const Error& e) {
            st.diagnostic("bdu_h_analysis", e);
        }
    }

    // ---- R7: minimal winding report for the z^k candidate ----
    if (crosscheck) {
        st.fire("R7", kCiteR7,
                json{{"k_gcd", crosscheck->k_gcd},
                     {"k_wind", crosscheck->k_wind},
                     {"minimal_winding_property", crosscheck->agree}});
    }

    const ResolvedConclusion mcp = resolve_conclusions(st.mcp);
    const ResolvedConclusion dcp = resolve_conclusions(st.dcp);
    st.verdict.mcp = mcp.conclusion;
    st.verdict.mcp_confidence = mcp.confidence;
    st.verdict.dcp = dcp.conclusion;
    st.verdict.dcp_confidence = dcp.confidence;
    if (mcp.conflict) st.verdict.diagnostics.push_back("conflicting certified MCP conclusions");
    if (dcp.conflict) st.verdict.diagnostics.push_back("conflicting certified DCP conclusions");

    // Univalence in evidence + minimal commutant forces the double
    // commutant property; anything else signals a rule bug.
    if (st.verdict.mcp == Conclusion::Yes && st.verdict.dcp == Conclusion::No)
        st.verdict.diagnostics.push_back("inconsistent: minimal commutant without double commutant");

    return st.verdict;
}

std::string explain(const Verdict& v) {
    std::ostringstream out;
    out << "MCP: " << to_string(v.mcp) << " (" << to_string(v.mcp_confidence) << ")\n";
    out << "DCP: " << to_string(v.dcp) << " (" << to_string(v.dcp_confidence) << ")\n";
    if (v.rules.empty()) out << "no rules fired\n";
    for (const FiredRule& r : v.rules) {
        out << r.id << ": " << r.cite << "\n";
        out << "    evidence: " << r.evidence.dump() << "\n";
    }
    for (const std::string& d : v.diagnostics) out << "diagnostic: " << d << "\n";
    return out.str();
}

}  // namespace toepcomm
