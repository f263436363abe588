#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "toepcomm/symbol.hpp"

namespace toepcomm {

enum class Conclusion { Yes, No, Unknown };
enum class Confidence { Certified, Heuristic };

const char* to_string(Conclusion c);
const char* to_string(Confidence c);

struct FiredRule {
    std::string id;
    std::string cite;
    nlohmann::json evidence;
};

// MCP/DCP conclusions with the rules that fired, the licensing result
// for each, and the numeric evidence. Certified conclusions rest on
// integer winding facts; Heuristic ones on sampling that cannot certify
// a positive (univalence, Jordan image at finite resolution).
struct Verdict {
    Conclusion mcp = Conclusion::Unknown;
    Conclusion dcp = Conclusion::Unknown;
    Confidence mcp_confidence = Confidence::Heuristic;
    Confidence dcp_confidence = Confidence::Heuristic;
    std::vector<FiredRule> rules;
    std::vector<std::string> diagnostics;  // measurement failures, conflicts
};

struct ClassifyConfig {
    int truncation_order = kDefaultTruncationOrder;
    int curve_nodes = 4096;
    int grid = 16;
    int witness_dim = 16;   // truncation for the density witness
    int krylov_depth = 6;   // powers of phi in the witness span
};

// Rule engine, evaluated in order R1..R7:
//  R1 certified non-univalence        => mcp No  (Certified)
//  R2 two distinct integer windings   => dcp No  (Certified)
//  R3 single cover and R1             => dcp No  (Certified, with a
//     density witness attached when available)
//  R4 symbol is z^n or a finite Blaschke product up to the noise floor
//     => dcp Yes (Certified); mcp No for order >= 2, Yes for order 1
//  R5 plausibly univalent, Jordan boundary => mcp Yes, dcp Yes (Heuristic)
//  R6 phi = h(z^k) with gcd/winding agreement, h plausibly univalent and
//     Jordan => dcp Yes (Heuristic)
//  R7 minimal-winding report: k(phi) vs the z^k candidate order
// A Certified No overrides any Heuristic Yes; conflicting Certified
// conclusions yield Unknown with both evidences kept. Measurement errors
// become diagnostics, never verdicts. Requires a nonconstant symbol.
Verdict classify(const TaylorSymbol& s, const ClassifyConfig& cfg = {});

// Internal conclusion resolution, exposed for direct testing: combines
// (conclusion, confidence) candidates for one property.
struct ConclusionCandidate {
    Conclusion conclusion;
    Confidence confidence;
    std::string rule_id;
};

struct ResolvedConclusion {
    Conclusion conclusion;
    Confidence confidence;
    bool conflict = false;  // certified Yes and certified No both present
};

ResolvedConclusion resolve_conclusions(const std::vector<ConclusionCandidate>& candidates);

// Human-readable report: verdicts, fired rules with their citations, and
// the numeric evidence.
std::string explain(const Verdict& v);

}  // namespace toepcomm
