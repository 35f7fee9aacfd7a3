#include "strata/scan.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "strata/error.hpp"

namespace strata {

double iou_score(const Tower& a, const Tower& b) {
    if (a.frame_width() != b.frame_width() || a.frame_height() != b.frame_height()) {
        throw ValidationError("tower frames differ: " + std::to_string(a.frame_width()) + "x" +
                              std::to_string(a.frame_height()) + " vs " +
                              std::to_string(b.frame_width()) + "x" +
                              std::to_string(b.frame_height()));
    }
    const int height = std::max(a.height(), b.height());
    long long intersection = 0;
    long long union_count = 0;
    for (int k = 0; k < height; ++k) {
        const Layer* la = k < a.height() ? &a.layers[static_cast<std::size_t>(k)] : nullptr;
        const Layer* lb = k < b.height() ? &b.layers[static_cast<std::size_t>(k)] : nullptr;
        if (!la) {
            union_count += lb->population();
            continue;
        }
        if (!lb) {
            union_count += la->population();
            continue;
        }
        const auto& ca = la->cells();
        const auto& cb = lb->cells();
        for (std::size_t i = 0; i < ca.size(); ++i) {
            intersection += ca[i] & cb[i];
            union_count += ca[i] | cb[i];
        }
    }
    if (union_count == 0) return 1.0;
    return static_cast<double>(intersection) / static_cast<double>(union_count);
}

double profile_distance(const Profile& a, const Profile& b) {
    if (a.kind != b.kind) {
        throw DomainError("cannot compare profiles of different kinds");
    }
    const std::size_t n = std::max(a.values.size(), b.values.size());
    long long distance = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int va = i < a.values.size() ? a.values[i] : 0;
        const int vb = i < b.values.size() ? b.values[i] : 0;
        distance += std::abs(va - vb);
    }
    return static_cast<double>(distance);
}

std::vector<ScanResult> scan_rules(const Layer& plan, const Tower& target, ScanMetric metric,
                                   const GrowthConfig& config, int top_n, int threads) {
    if (plan.width() != target.frame_width() || plan.height() != target.frame_height()) {
        throw ValidationError("plan frame " + std::to_string(plan.width()) + "x" +
                              std::to_string(plan.height()) + " does not match target frame " +
                              std::to_string(target.frame_width()) + "x" +
                              std::to_string(target.frame_height()));
    }
    if (top_n < 1) {
        throw DomainError("top_n must be >= 1, got " + std::to_string(top_n));
    }
    if (threads < 1) {
        throw DomainError("threads must be >= 1, got " + std::to_string(threads));
    }
    if (plan.is_empty()) {
        throw ValidationError("plan has no occupied cells; a tower needs a ground floor");
    }

    const Profile target_profile = elevation_profile(target, ProfileKind::kExtent);

    std::vector<ScanResult> results(kRuleSpaceSize);
    auto evaluate_range = [&](int begin, int end) {
        for (int code = begin; code < end; ++code) {
            const Tower tower = grow_tower(plan, TotalisticRule::from_code(code), config);
            double score = 0.0;
            if (metric == ScanMetric::kIoU) {
                score = iou_score(tower, target);
            } else {
                score = profile_distance(elevation_profile(tower, ProfileKind::kExtent),
                                         target_profile);
            }
            results[static_cast<std::size_t>(code)] =
                ScanResult{code, score, tower.termination, tower.height()};
        }
    };

    if (threads <= 1) {
        evaluate_range(0, kRuleSpaceSize);
    } else {
        const int workers = std::min(threads, kRuleSpaceSize);
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const int chunk = (kRuleSpaceSize + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int begin = w * chunk;
            const int end = std::min(begin + chunk, kRuleSpaceSize);
            if (begin < end) pool.emplace_back(evaluate_range, begin, end);
        }
        for (std::thread& worker : pool) worker.join();
    }

    const bool higher_is_better = metric == ScanMetric::kIoU;
    std::sort(results.begin(), results.end(), [&](const ScanResult& a, const ScanResult& b) {
        if (a.score != b.score) return higher_is_better ? a.score > b.score : a.score < b.score;
        return a.rule_code < b.rule_code;
    });

    if (static_cast<int>(results.size()) > top_n) {
        results.resize(static_cast<std::size_t>(top_n));
    }
    return results;
}

} // namespace strata
