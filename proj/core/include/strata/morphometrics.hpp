#pragma once

#include <optional>
#include <vector>

#include "strata/growth.hpp"

namespace strata {

enum class ProfileKind {
    kExtent,     // width of the tight occupied bounding box, per layer
    kPopulation, // occupied-cell count per layer
};

// Per-layer scalar sequence used for elevation comparison.
struct Profile {
    ProfileKind kind = ProfileKind::kExtent;
    std::vector<int> values;

    friend bool operator==(const Profile&, const Profile&) = default;
};

Profile elevation_profile(const Tower& tower, ProfileKind kind);

// A maximal run of equal profile values.
struct Segment {
    int value = 0;
    int length = 0;

    friend bool operator==(const Segment&, const Segment&) = default;
};

// Run-length encodes the profile. Runs shorter than min_plateau are merged
// into the preceding run (the first run is never merged away); adjacent runs
// that end up with equal values coalesce.
std::vector<Segment> segment_profile(const Profile& profile, int min_plateau);

// The smallest coprime integer tuple proportional to the inputs.
struct RatioSignature {
    std::vector<int> terms;
    double tolerance_used = 0.0;

    friend bool operator==(const RatioSignature&, const RatioSignature&) = default;
};

// Finds the smallest positive coprime tuple (by max term, then
// lexicographically) such that every input is within the relative tolerance
// of s * term for one common positive scale s. The search is bounded by
// max term <= max(segments). Exact inputs (tolerance 0) reduce to division
// by the gcd. Returns nullopt when no tuple qualifies within the bound.
// Inputs must be >= 1 and tolerance in [0, 0.5).
std::optional<RatioSignature> ratio_signature(const std::vector<int>& segments, double tolerance);

struct BoxSample {
    int box_size = 1;
    long long box_count = 0;

    friend bool operator==(const BoxSample&, const BoxSample&) = default;
};

// Least-squares box-counting estimate over box sizes 1, 2, ..., 2^max_exponent.
struct DimensionEstimate {
    double slope = 0.0;     // the dimension estimate
    double r_squared = 1.0; // 1.0 for a perfect (or degenerate flat) fit
    std::vector<BoxSample> samples;
};

// Counts axis-aligned size^3 boxes, anchored at the corner of the tower's
// tight occupied bounding box, that contain at least one occupied cell, for
// every power-of-two size up to 2^max_exponent; the slope is the least-squares
// fit of log2(count) against log2(1/size). The tower must have at least one
// occupied cell and max_exponent must be >= 2 (three samples minimum).
DimensionEstimate box_counting_dimension(const Tower& tower, int max_exponent);

enum class BehaviorClass {
    kLimitPoint,             // converges to a single repeating configuration
    kLimitCycle,             // converges to a periodic orbit, period >= 2
    kUnresolvedWithinHorizon // no repeat seen within the horizon
};

std::string to_string(BehaviorClass c);

// Long-run behavior of the raw (unclipped-beyond-frame) dynamics started from
// the plan. transient_length is the step at which the repeated configuration
// first appeared (the plan itself counts as step 0 and is never the repeat
// target: the orbit only "enters" a state by an update). period is present
// iff a repeat was found within the horizon.
struct ClassReport {
    BehaviorClass behavior = BehaviorClass::kUnresolvedWithinHorizon;
    int transient_length = 0;
    std::optional<int> period;
};

ClassReport classify_rule(const Layer& plan, const TotalisticRule& rule, int horizon);

} // namespace strata
