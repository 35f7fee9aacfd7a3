#pragma once

#include <vector>

#include "strata/growth.hpp"
#include "strata/morphometrics.hpp"

namespace strata {

// Voxel-set intersection over union of two towers sharing a frame. The
// shorter tower is padded with empty layers on top for the comparison only.
// 1.0 when both towers are identical (or both empty). Throws ValidationError
// when the frames differ.
double iou_score(const Tower& a, const Tower& b);

// L1 distance of per-layer values; the shorter profile is zero-padded on top.
// Throws ValidationError when the kinds differ.
double profile_distance(const Profile& a, const Profile& b);

enum class ScanMetric {
    kIoU,     // higher is better
    kProfile, // extent-profile L1 distance; lower is better
};

// One row of an exhaustive rule scan.
struct ScanResult {
    int rule_code = 0;
    double score = 0.0;
    Termination termination = Termination::kEmpty;
    int height = 0;

    friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

// Grows a tower for every rule code 0..1023 from the plan under the given
// config and scores it against the target. Returns the best top_n results,
// best first, ties broken by ascending rule code. Evaluation may be spread
// over `threads` workers; the result sequence is identical for any thread
// count. Throws ValidationError when the plan and target frames differ.
std::vector<ScanResult> scan_rules(const Layer& plan, const Tower& target, ScanMetric metric,
                                   const GrowthConfig& config, int top_n, int threads = 1);

} // namespace strata
