#include "strata/morphometrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "strata/error.hpp"

namespace strata {

Profile elevation_profile(const Tower& tower, ProfileKind kind) {
    Profile profile;
    profile.kind = kind;
    profile.values.reserve(tower.layers.size());
    for (const Layer& layer : tower.layers) {
        if (kind == ProfileKind::kPopulation) {
            profile.values.push_back(layer.population());
        } else {
            auto bounds = layer.occupied_bounds();
            profile.values.push_back(bounds ? bounds->width() : 0);
        }
    }
    return profile;
}

std::vector<Segment> segment_profile(const Profile& profile, int min_plateau) {
    if (min_plateau < 1) {
        throw DomainError("min_plateau must be >= 1, got " + std::to_string(min_plateau));
    }
    if (profile.values.empty()) {
        throw ValidationError("cannot segment an empty profile");
    }

    std::vector<Segment> runs;
    for (int value : profile.values) {
        if (!runs.empty() && runs.back().value == value) {
            ++runs.back().length;
        } else {
            runs.push_back({value, 1});
        }
    }

    // Short runs merge into the preceding run; a merge can make the next run
    // equal-valued, which then coalesces.
    std::vector<Segment> merged;
    for (const Segment& run : runs) {
        if (!merged.empty() && (run.length < min_plateau || merged.back().value == run.value)) {
            merged.back().length += run.length;
        } else {
            merged.push_back(run);
        }
    }
    return merged;
}

namespace {

// Depth-first enumeration of candidate tuples for one max-term bound. Terms
// are tried in ascending order, so the first full tuple found is the
// lexicographically smallest. The feasible scale interval shrinks as terms
// are chosen, which prunes almost everything.
bool find_tuple(const std::vector<int>& inputs, double tolerance, int max_term, std::size_t index,
                double scale_lo, double scale_hi, bool max_used, std::vector<int>& terms) {
    if (index == inputs.size()) {
        if (!max_used) return false;
        int g = 0;
        for (int t : terms) g = std::gcd(g, t);
        return g == 1;
    }
    const double x = inputs[index];
    for (int p = 1; p <= max_term; ++p) {
        // s must satisfy |x - s*p| <= tol*x  =>  s in [x(1-tol)/p, x(1+tol)/p]
        const double lo = std::max(scale_lo, x * (1.0 - tolerance) / p);
        const double hi = std::min(scale_hi, x * (1.0 + tolerance) / p);
        if (lo > hi) continue;
        terms.push_back(p);
        if (find_tuple(inputs, tolerance, max_term, index + 1, lo, hi,
                       max_used || p == max_term, terms)) {
            return true;
        }
        terms.pop_back();
    }
    return false;
}

} // namespace

std::optional<RatioSignature> ratio_signature(const std::vector<int>& segments, double tolerance) {
    if (segments.empty()) {
        throw ValidationError("ratio signature needs at least one segment");
    }
    for (int s : segments) {
        if (s < 1) throw DomainError("segments must be >= 1, got " + std::to_string(s));
    }
    if (tolerance < 0.0 || tolerance >= 0.5) {
        throw DomainError("tolerance must be in [0, 0.5), got " + std::to_string(tolerance));
    }

    RatioSignature signature;
    signature.tolerance_used = tolerance;

    if (tolerance == 0.0) {
        int g = 0;
        for (int s : segments) g = std::gcd(g, s);
        signature.terms.reserve(segments.size());
        for (int s : segments) signature.terms.push_back(s / g);
        return signature;
    }

    const int bound = *std::max_element(segments.begin(), segments.end());
    std::vector<int> terms;
    for (int max_term = 1; max_term <= bound; ++max_term) {
        terms.clear();
        constexpr double kInf = std::numeric_limits<double>::infinity();
        if (find_tuple(segments, tolerance, max_term, 0, 0.0, kInf, false, terms)) {
            signature.terms = terms;
            return signature;
        }
    }
    return std::nullopt;
}

namespace {

struct Voxel {
    int layer, row, col;
};

std::vector<Voxel> occupied_voxels(const Tower& tower) {
    std::vector<Voxel> voxels;
    for (int k = 0; k < tower.height(); ++k) {
        const Layer& layer = tower.layers[static_cast<std::size_t>(k)];
        for (int r = 0; r < layer.height(); ++r) {
            for (int c = 0; c < layer.width(); ++c) {
                if (layer.at(r, c)) voxels.push_back({k, r, c});
            }
        }
    }
    return voxels;
}

} // namespace

DimensionEstimate box_counting_dimension(const Tower& tower, int max_exponent) {
    if (max_exponent < 2) {
        throw ValidationError("max_exponent must be >= 2 (fewer than 3 usable box sizes)");
    }
    std::vector<Voxel> voxels = occupied_voxels(tower);
    if (voxels.empty()) {
        throw ValidationError("box counting needs at least one occupied cell");
    }

    Voxel origin = voxels.front();
    for (const Voxel& v : voxels) {
        origin.layer = std::min(origin.layer, v.layer);
        origin.row = std::min(origin.row, v.row);
        origin.col = std::min(origin.col, v.col);
    }

    DimensionEstimate estimate;
    for (int e = 0; e <= max_exponent; ++e) {
        const int size = 1 << e;
        std::unordered_set<std::uint64_t> boxes;
        boxes.reserve(voxels.size());
        for (const Voxel& v : voxels) {
            const std::uint64_t bk = static_cast<std::uint64_t>((v.layer - origin.layer) / size);
            const std::uint64_t br = static_cast<std::uint64_t>((v.row - origin.row) / size);
            const std::uint64_t bc = static_cast<std::uint64_t>((v.col - origin.col) / size);
            boxes.insert((bk << 42) | (br << 21) | bc);
        }
        estimate.samples.push_back({size, static_cast<long long>(boxes.size())});
    }

    // Least squares of log2(count) against log2(1/size). Both coordinates are
    // exact integers, so exactly self-similar solids fit with zero residual.
    const std::size_t n = estimate.samples.size();
    double x_mean = 0.0, y_mean = 0.0;
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = -std::log2(static_cast<double>(estimate.samples[i].box_size));
        ys[i] = std::log2(static_cast<double>(estimate.samples[i].box_count));
        x_mean += xs[i];
        y_mean += ys[i];
    }
    x_mean /= static_cast<double>(n);
    y_mean /= static_cast<double>(n);

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
        sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
        syy += (ys[i] - y_mean) * (ys[i] - y_mean);
    }
    estimate.slope = sxy / sxx;
    if (syy == 0.0) {
        estimate.r_squared = 1.0; // flat data: the constant fit is exact
    } else {
        double ss_res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double predicted = y_mean + estimate.slope * (xs[i] - x_mean);
            ss_res += (ys[i] - predicted) * (ys[i] - predicted);
        }
        estimate.r_squared = 1.0 - ss_res / syy;
    }
    return estimate;
}

std::string to_string(BehaviorClass c) {
    switch (c) {
    case BehaviorClass::kLimitPoint: return "I";
    case BehaviorClass::kLimitCycle: return "II";
    case BehaviorClass::kUnresolvedWithinHorizon: return "UNRESOLVED";
    }
    return "?";
}

ClassReport classify_rule(const Layer& plan, const TotalisticRule& rule, int horizon) {
    if (horizon < 1) {
        throw DomainError("horizon must be >= 1, got " + std::to_string(horizon));
    }

    ClassReport report;
    std::unordered_map<std::string, int> first_seen;
    first_seen.reserve(static_cast<std::size_t>(horizon));

    Layer current = plan;
    for (int t = 1; t <= horizon; ++t) {
        current = step_layer(current, rule);
        std::string key(reinterpret_cast<const char*>(current.cells().data()),
                        current.cells().size());
        auto [it, inserted] = first_seen.try_emplace(std::move(key), t);
        if (!inserted) {
            const int entered_at = it->second;
            report.period = t - entered_at;
            report.transient_length = entered_at;
            report.behavior = *report.period == 1 ? BehaviorClass::kLimitPoint
                                                  : BehaviorClass::kLimitCycle;
            return report;
        }
    }
    report.behavior = BehaviorClass::kUnresolvedWithinHorizon;
    return report;
}

} // namespace strata
