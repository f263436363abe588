#include "toepcomm/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "toepcomm/errors.hpp"
#include "toepcomm/fourier.hpp"
#include "toepcomm/numfmt.hpp"
#include "toepcomm/roots.hpp"

namespace toepcomm {

namespace {

double point_segment_distance(Complex p, Complex a, Complex b) {
    const Complex d = b - a;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p - a).real() * d.real() + (p - a).imag() * d.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * d));
}

}  // namespace

BoundaryCurve::BoundaryCurve(TaylorSymbol symbol, int node_count) : symbol_(std::move(symbol)) {
    if (node_count < kMinCurveNodes || !is_power_of_two(static_cast<std::size_t>(node_count)))
        throw PreconditionError("curve node count must be a power of two >= 256");
    if (node_count > kMaxCurveNodes)
        throw PreconditionError("curve node count exceeds the 2^20 cap");
    nodes_ = symbol_.eval_circle(node_count, 1.0);
}

void BoundaryCurve::refine() {
    if (!can_refine()) throw ResolutionExhausted("curve refinement cap of 2^20 nodes reached");
    nodes_ = symbol_.eval_circle(size() * 2, 1.0);
}

double BoundaryCurve::distance_to(Complex w) const {
    double best = std::abs(w - nodes_[0]);
    const int m = size();
    for (int j = 0; j < m; ++j) {
        const Complex a = nodes_[static_cast<std::size_t>(j)];
        const Complex b = nodes_[static_cast<std::size_t>((j + 1) % m)];
        best = std::min(best, point_segment_distance(w, a, b));
        if (best == 0.0) break;
    }
    return best;
}

namespace {

struct ArgSum {
    double total;
    double max_step;
};

ArgSum arg_increment_sum(const std::vector<Complex>& nodes, Complex w) {
    double total = 0.0, max_step = 0.0;
    const std::size_t m = nodes.size();
    Complex prev = nodes[0] - w;
    for (std::size_t j = 1; j <= m; ++j) {
        const Complex cur = nodes[j % m] - w;
        const double step = std::arg(cur / prev);
        total += step;
        max_step = std::max(max_step, std::abs(step));
        prev = cur;
    }
    return {total, max_step};
}

constexpr double kWindingResidualCap = 0.01;
constexpr double kStepGuard = std::numbers::pi / 2.0;

}  // namespace

int winding_number(BoundaryCurve& c, Complex w) {
    if (c.distance_to(w) <= kOnCurveDistance)
        throw OnCurveError("winding target within 1e-6 of the curve: " + fmt_complex(w));
    for (;;) {
        const ArgSum sum = arg_increment_sum(c.nodes(), w);
        const double turns = sum.total / (2.0 * std::numbers::pi);
        const double rounded = std::round(turns);
        const double residual = std::abs(turns - rounded);
        const bool resolved = sum.max_step <= kStepGuard && residual < kWindingResidualCap;
        if (resolved) return static_cast<int>(rounded);
        if (!c.can_refine()) {
            if (residual < kWindingResidualCap) return static_cast<int>(rounded);
            throw ResolutionExhausted("winding residual " + fmt_double(residual) +
                                      " at the 2^20 node cap for target " + fmt_complex(w));
        }
        c.refine();
    }
}

int winding_number(const TaylorSymbol& s, Complex w, int node_count) {
    BoundaryCurve c(s, node_count);
    return winding_number(c, w);
}

int valence(const TaylorSymbol& s, Complex w, int node_count) {
    BoundaryCurve c(s, node_count);
    const int wind = winding_number(c, w);
    if (s.exact_polynomial() && s.effective_degree() >= 1) {
        const int root_count = static_cast<int>(interior_preimages(s, w).size());
        if (root_count != wind)
            throw OracleMismatch("winding " + std::to_string(wind) + " vs " +
                                 std::to_string(root_count) + " interior roots at target " +
                                 fmt_complex(w));
    }
    return wind;
}

WindingProfile winding_profile(const TaylorSymbol& s, int grid, int node_count) {
    if (grid < 8) throw PreconditionError("profile grid must be at least 8");
    BoundaryCurve curve(s, node_count);
    WindingProfile profile;
    for (int i = 0; i < grid; ++i) {
        const double r = (static_cast<double>(i) + 0.5) / static_cast<double>(grid);
        for (int j = 0; j < grid; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / grid;
            const Complex a = std::polar(r, theta);
            const Complex w = s.eval(a);
            if (curve.distance_to(w) <= kProfileExclusion) {
                profile.excluded.push_back({a, w});
                continue;
            }
            profile.samples.push_back({a, w, winding_number(curve, w)});
        }
    }
    if (profile.samples.empty())
        throw EmptyProfile("every grid sample fell within 1e-4 of the curve");
    return profile;
}

int minimal_winding(const WindingProfile& p) {
    int best = 0;
    for (const WindingSample& s : p.samples)
        if (s.n != 0 && (best == 0 || s.n < best)) best = s.n;
    if (best == 0) throw EmptyProfile("profile has no nonzero winding entry");
    return best;
}

std::optional<std::pair<WindingSample, WindingSample>> winding_inconstancy(
    const WindingProfile& p) {
    if (p.samples.empty()) throw EmptyProfile("profile has no samples");
    const WindingSample& first = p.samples.front();
    for (const WindingSample& s : p.samples)
        if (s.n != first.n) return std::make_pair(first, s);
    return std::nullopt;
}

// ---------------------------------------------------------------------
// Self-intersection sweep

namespace {

struct SegmentBox {
    double min_x, max_x, min_y, max_y;
    int index;
};

double cross2(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }

bool adjacent(int i, int j, int m) {
    const int d = std::abs(i - j);
    return d <= 1 || d == m - 1;
}

double segment_segment_distance(Complex a, Complex b, Complex c, Complex d) {
    return std::min(std::min(point_segment_distance(a, c, d), point_segment_distance(b, c, d)),
                    std::min(point_segment_distance(c, a, b), point_segment_distance(d, a, b)));
}

constexpr double kGrazingDistance = 1e-9;

}  // namespace

std::vector<CurveCrossing> jordan_test(const BoundaryCurve& curve) {
    const auto& nodes = curve.nodes();
    const int m = curve.size();

    std::vector<SegmentBox> boxes;
    boxes.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const Complex a = nodes[static_cast<std::size_t>(i)];
        const Complex b = nodes[static_cast<std::size_t>((i + 1) % m)];
        boxes.push_back({std::min(a.real(), b.real()), std::max(a.real(), b.real()),
                         std::min(a.imag(), b.imag()), std::max(a.imag(), b.imag()), i});
    }
    std::sort(boxes.begin(), boxes.end(),
              [](const SegmentBox& p, const SegmentBox& q) { return p.min_x < q.min_x; });

    std::vector<CurveCrossing> crossings;
    std::vector<const SegmentBox*> active;
    for (const SegmentBox& box : boxes) {
        active.erase(std::remove_if(active.begin(), active.end(),
                                    [&](const SegmentBox* s) { return s->max_x < box.min_x; }),
                     active.end());
        for (const SegmentBox* other : active) {
            if (box.min_y > other->max_y || other->min_y > box.max_y) continue;
            if (adjacent(box.index, other->index, m)) continue;
            const int i = std::min(box.index, other->index);
            const int j = std::max(box.index, other->index);
            const Complex a = nodes[static_cast<std::size_t>(i)];
            const Complex b = nodes[static_cast<std::size_t>((i + 1) % m)];
            const Complex c = nodes[static_cast<std::size_t>(j)];
            const Complex d = nodes[static_cast<std::size_t>((j + 1) % m)];
            const double d1 = cross2(b - a, c - a);
            const double d2 = cross2(b - a, d - a);
            const double d3 = cross2(d - c, a - c);
            const double d4 = cross2(d - c, b - c);
            if (((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) &&
                ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))) {
                const double t = d3 / (d3 - d4);
                crossings.push_back({i, j, a + t * (b - a), false});
            } else if (segment_segment_distance(a, b, c, d) < kGrazingDistance) {
                crossings.push_back({i, j, (a + b + c + d) / 4.0, true});
            }
        }
        active.push_back(&box);
    }
    std::sort(crossings.begin(), crossings.end(), [](const CurveCrossing& p, const CurveCrossing& q) {
        return p.segment_a != q.segment_a ? p.segment_a < q.segment_a : p.segment_b < q.segment_b;
    });
    return crossings;
}

// ---------------------------------------------------------------------
// Probes

UnivalenceVerdict univalence_probe(const TaylorSymbol& s, int grid, int node_count) {
    const WindingProfile profile = winding_profile(s, grid, node_count);
    UnivalenceVerdict verdict;

    for (const WindingSample& sample : profile.samples) {
        if (sample.n < 2) continue;
        verdict.certified_nonunivalent = true;
        verdict.witness_w = sample.w;
        verdict.witness_winding = sample.n;
        if (s.exact_polynomial() && s.effective_degree() >= 1) {
            std::vector<Complex> pre = interior_preimages(s, sample.w);
            if (pre.size() >= 2) {
                std::sort(pre.begin(), pre.end(), [](Complex x, Complex y) {
                    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
                });
                verdict.witness = std::make_pair(pre[0], pre[1]);
            }
        }
        return verdict;
    }

    // Exact-collision path: two grid points mapping to (numerically) the
    // same value certify non-univalence directly.
    for (std::size_t i = 0; i < profile.samples.size(); ++i) {
        for (std::size_t j = i + 1; j < profile.samples.size(); ++j) {
            if (std::abs(profile.samples[i].w - profile.samples[j].w) <= 1e-10) {
                verdict.certified_nonunivalent = true;
                verdict.from_grid_collision = true;
                verdict.witness = std::make_pair(profile.samples[i].a, profile.samples[j].a);
                verdict.witness_w = profile.samples[i].w;
                return verdict;
            }
        }
    }
    return verdict;
}

SingleCoverVerdict single_cover_probe(const TaylorSymbol&, const WindingProfile& p) {
    if (p.samples.empty()) throw EmptyProfile("profile has no samples");
    for (const WindingSample& s : p.samples) {
        if (s.n == 1) return {true, s.w, s.a};
    }
    return {};
}

}  // namespace toepcomm
