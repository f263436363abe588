#include <doctest.h>

#include <string>

#include "toepcomm/classify.hpp"
#include "toepcomm/errors.hpp"
#include "toepcomm/expr.hpp"
#include "toepcomm/registry.hpp"
#include "toepcomm/serialize.hpp"

using namespace toepcomm;

namespace {

TaylorSymbol named(const std::string& name, int order = kDefaultTruncationOrder) {
    return lower_dsl(*example_dsl(name), order, name);
}

bool fired(const Verdict& v, const std::string& id) {
    for (const FiredRule& r : v.rules)
        if (r.id == id) return true;
    return false;
}

}  // namespace

TEST_CASE("cardioid: certified double negative") {
    const Verdict v = classify(named("cardioid"));
    CHECK(v.mcp == Conclusion::No);
    CHECK(v.mcp_confidence == Confidence::Certified);
    CHECK(v.dcp == Conclusion::No);
    CHECK(v.dcp_confidence == Confidence::Certified);
    CHECK(fired(v, "R1"));
    CHECK(fired(v, "R2"));
    CHECK(fired(v, "R3"));
    CHECK(v.diagnostics.empty());
}

TEST_CASE("halfshift: heuristic double positive via the Jordan route") {
    const Verdict v = classify(named("halfshift"));
    CHECK(v.mcp == Conclusion::Yes);
    CHECK(v.mcp_confidence == Confidence::Heuristic);
    CHECK(v.dcp == Conclusion::Yes);
    CHECK(fired(v, "R5"));
    CHECK_FALSE(fired(v, "R1"));
    CHECK_FALSE(fired(v, "R4"));
}

TEST_CASE("powers: no minimal commutant, certified double commutant") {
    for (int n : {2, 3, 4}) {
        const Verdict v = classify(named("power:" + std::to_string(n)));
        INFO("power " << n);
        CHECK(v.mcp == Conclusion::No);
        CHECK(v.dcp == Conclusion::Yes);
        CHECK(v.dcp_confidence == Confidence::Certified);
        CHECK(fired(v, "R4"));
    }
}

TEST_CASE("identity: order-one inner symbol") {
    const Verdict v = classify(named("identity"));
    CHECK(v.mcp == Conclusion::Yes);
    CHECK(v.dcp == Conclusion::Yes);
    CHECK(fired(v, "R4"));
    CHECK(fired(v, "R5"));
}

TEST_CASE("finite Blaschke product: inner of order two") {
    const Verdict v = classify(named("blaschke:0.5,0;-0.5,0"));
    CHECK(v.mcp == Conclusion::No);
    CHECK(v.mcp_confidence == Confidence::Certified);
    CHECK(v.dcp == Conclusion::Yes);
    CHECK(v.dcp_confidence == Confidence::Certified);
    CHECK(fired(v, "R4"));
    CHECK_FALSE(fired(v, "R2"));
}

TEST_CASE("z^2 + z^4: winding obstruction through a non-univalent outer part") {
    const Verdict v = classify(named("zsquare-plus-z4"));
    CHECK(v.mcp == Conclusion::No);
    CHECK(v.dcp == Conclusion::No);
    CHECK(v.dcp_confidence == Confidence::Certified);
    CHECK(fired(v, "R2"));
    CHECK_FALSE(fired(v, "R6"));
}

TEST_CASE("classification rejects constants") {
    CHECK_THROWS_AS(classify(lower_dsl("0.5", 8)), PreconditionError);
}

TEST_CASE("explain lists rules and verdicts") {
    const Verdict v = classify(named("cardioid"));
    const std::string report = explain(v);
    CHECK(report.find("MCP: No") != std::string::npos);
    CHECK(report.find("DCP: No") != std::string::npos);
    CHECK(report.find("R1") != std::string::npos);
    CHECK(report.find("Deddens-Wong") != std::string::npos);

    const std::string walsh = explain(classify(named("identity")));
    CHECK(walsh.find("Walsh") != std::string::npos);

    const std::string power = explain(classify(named("power:6")));
    CHECK(power.find("\"k_gcd\":6") != std::string::npos);
}

TEST_CASE("verdicts serialize deterministically") {
    for (const std::string& name : example_suite_names()) {
        const TaylorSymbol s = named(name);
        const std::string first = verdict_to_json(classify(s)).dump();
        const std::string second = verdict_to_json(classify(s)).dump();
        INFO(name);
        CHECK(first == second);
    }
}

TEST_CASE("refinement never flips a certified verdict") {
    for (const std::string& name : {std::string("cardioid"), std::string("power:3"),
                                    std::string("zsquare-plus-z4")}) {
        const TaylorSymbol s = named(name);
        ClassifyConfig coarse;
        const Verdict v1 = classify(s, coarse);
        ClassifyConfig fine;
        fine.grid = 24;
        fine.curve_nodes = 8192;
        const Verdict v2 = classify(s, fine);
        INFO(name);
        if (v1.mcp_confidence == Confidence::Certified && v1.mcp != Conclusion::Unknown)
            CHECK(v1.mcp == v2.mcp);
        if (v1.dcp_confidence == Confidence::Certified && v1.dcp != Conclusion::Unknown)
            CHECK(v1.dcp == v2.dcp);
    }
}

TEST_CASE("conclusion resolution") {
    using CC = ConclusionCandidate;
    const auto yes_cert = CC{Conclusion::Yes, Confidence::Certified, "a"};
    const auto no_cert = CC{Conclusion::No, Confidence::Certified, "b"};
    const auto yes_heur = CC{Conclusion::Yes, Confidence::Heuristic, "c"};
    const auto no_heur = CC{Conclusion::No, Confidence::Heuristic, "d"};

    CHECK(resolve_conclusions({}).conclusion == Conclusion::Unknown);

    const ResolvedConclusion over = resolve_conclusions({yes_heur, no_cert});
    CHECK(over.conclusion == Conclusion::No);
    CHECK(over.confidence == Confidence::Certified);
    CHECK_FALSE(over.conflict);

    const ResolvedConclusion conflict = resolve_conclusions({yes_cert, no_cert});
    CHECK(conflict.conclusion == Conclusion::Unknown);
    CHECK(conflict.conflict);

    const ResolvedConclusion heuristics = resolve_conclusions({yes_heur, no_heur});
    CHECK(heuristics.conclusion == Conclusion::Unknown);
    CHECK_FALSE(heuristics.conflict);

    CHECK(resolve_conclusions({yes_heur}).conclusion == Conclusion::Yes);
    CHECK(resolve_conclusions({yes_heur}).confidence == Confidence::Heuristic);
    CHECK(resolve_conclusions({yes_cert, yes_heur}).confidence == Confidence::Certified);
}
