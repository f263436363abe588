#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toepcomm/symbol.hpp"

namespace toepcomm {

inline constexpr int kMinCurveNodes = 256;
inline constexpr int kMaxCurveNodes = 1 << 20;
inline constexpr int kDefaultCurveNodes = 4096;

// Distance guards: direct winding queries refuse targets within
// kOnCurveDistance of the polyline; profile sampling excludes targets
// within kProfileExclusion.
inline constexpr double kOnCurveDistance = 1e-6;
inline constexpr double kProfileExclusion = 1e-4;

// The image curve phi(gamma) of the counterclockwise unit circle,
// sampled as a closed polyline with node j = phi(e^{2 pi i j / M}).
// M is a power of two >= 256 so the curve supports dyadic refinement;
// the generating symbol is kept so refinement can resample.
class BoundaryCurve {
  public:
    BoundaryCurve(TaylorSymbol symbol, int node_count = kDefaultCurveNodes);

    const std::vector<Complex>& nodes() const { return nodes_; }
    int size() const { return static_cast<int>(nodes_.size()); }
    const TaylorSymbol& symbol() const { return symbol_; }
    const std::string& source() const { return symbol_.label(); }

    bool can_refine() const { return size() * 2 <= kMaxCurveNodes; }
    void refine();  // double the node count

    // Minimum distance from w to the polyline segments.
    double distance_to(Complex w) const;

  private:
    TaylorSymbol symbol_;
    std::vector<Complex> nodes_;
};

// Winding number of the polyline about w, by summed argument increments
// rounded to the nearest integer. Whenever a single increment exceeds
// pi/2 (or the pre-rounding residual is >= 0.01) the curve is refined by
// doubling its node count, up to 2^20 nodes; the refinement persists in
// `c`. Throws OnCurveError when w is within 1e-6 of the polyline and
// ResolutionExhausted when the cap is hit with residual >= 0.01.
int winding_number(BoundaryCurve& c, Complex w);

// Convenience overload on a fresh curve.
int winding_number(const TaylorSymbol& s, Complex w, int node_count = kDefaultCurveNodes);

// Number of solutions of s(z) = w in the open disk, counted with
// multiplicity, computed as a winding number. For exact polynomial
// symbols the count is cross-checked against the companion-matrix roots
// of s - w; disagreement throws OracleMismatch.
int valence(const TaylorSymbol& s, Complex w, int node_count = kDefaultCurveNodes);

struct WindingSample {
    Complex a;  // interior sample
    Complex w;  // phi(a)
    int n;      // winding of phi(gamma) about w
};

struct ExcludedSample {
    Complex a;
    Complex w;
};

struct WindingProfile {
    std::vector<WindingSample> samples;
    std::vector<ExcludedSample> excluded;  // too close to the curve
};

// Windings at w = phi(a) for a on a K x K polar grid with radii
// (i + 1/2)/K and equispaced angles 2 pi j / K, in fixed (i, j)
// enumeration order. Samples within kProfileExclusion of the curve are
// excluded. Throws EmptyProfile when every sample is excluded; requires
// K >= 8.
WindingProfile winding_profile(const TaylorSymbol& s, int grid,
                               int node_count = kDefaultCurveNodes);

// Minimum recorded nonzero winding. Throws EmptyProfile when the profile
// has no nonzero entry.
int minimal_winding(const WindingProfile& p);

// nullopt when all recorded windings coincide; otherwise one witness
// pair realizing distinct windings.
std::optional<std::pair<WindingSample, WindingSample>> winding_inconstancy(
    const WindingProfile& p);

struct CurveCrossing {
    int segment_a;
    int segment_b;
    Complex point;
    bool grazing;  // tangential near-miss (within 1e-9) rather than a
                   // transversal crossing
};

// All transversal crossings between non-adjacent polyline segments,
// found by a sweep over segment pairs with bounding-box pruning. An
// empty list certifies no crossing at the sampled resolution.
std::vector<CurveCrossing> jordan_test(const BoundaryCurve& c);

struct UnivalenceVerdict {
    bool certified_nonunivalent = false;
    // Two distinct preimages of witness_w, or a double point (a == b).
    std::optional<std::pair<Complex, Complex>> witness;
    std::optional<Complex> witness_w;
    std::optional<int> witness_winding;
    bool from_grid_collision = false;
};

// CertifiedNonUnivalent when some profile entry has winding >= 2 or two
// grid points map within 1e-10 of each other; otherwise plausibly
// univalent (a heuristic, consumed as such downstream). Witness
// preimages are recovered by root finding for exact polynomial symbols.
UnivalenceVerdict univalence_probe(const TaylorSymbol& s, int grid,
                                   int node_count = kDefaultCurveNodes);

struct SingleCoverVerdict {
    bool single_covers = false;
    std::optional<Complex> witness_w;
    std::optional<Complex> witness_a;
};

// SingleCovers when some profile entry has winding exactly 1; winding is
// locally constant off the curve, so such an entry exhibits an open
// single-sheeted region.
SingleCoverVerdict single_cover_probe(const TaylorSymbol& s, const WindingProfile& p);

}  // namespace toepcomm
