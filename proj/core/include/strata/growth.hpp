#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strata/layer.hpp"
#include "strata/rule.hpp"

namespace strata {

// Why layer generation stopped.
enum class Termination {
    kEmpty,       // the next layer would have been all-empty (finished roof)
    kCycle,       // the newest layer repeats an earlier one (fixed points included)
    kHeightLimit, // max_layers reached
};

std::string to_string(Termination t);
std::optional<Termination> termination_from_string(const std::string& tag);

// How each new layer is confined to the ground plan.
enum class ClipMode {
    kBoundingBox,   // fixed frame only; the grid never grows
    kFootprintMask, // additionally AND each new layer with the plan's occupied cells
};

struct GrowthConfig {
    int max_layers = 64;
    ClipMode clip_mode = ClipMode::kBoundingBox;
    bool halt_on_cycle = true;
};

// An ordered bottom-to-top stack of same-sized layers; index 0 is the ground
// plan. rule_code is absent for towers ingested from files. cycle_period is
// known only for towers grown here with a cycle termination.
struct Tower {
    std::vector<Layer> layers;
    std::optional<int> rule_code;
    Termination termination = Termination::kEmpty;
    std::optional<int> cycle_period;

    int height() const { return static_cast<int>(layers.size()); }
    int frame_width() const { return layers.empty() ? 0 : layers.front().width(); }
    int frame_height() const { return layers.empty() ? 0 : layers.front().height(); }

    long long population() const;
};

// Grows a tower by iterating the rule upward from the plan. Layer k+1 is
// step_layer(layer k), masked with the plan footprint in kFootprintMask mode.
// Generation stops:
//   - before storing an all-empty layer           -> kEmpty
//   - after storing a layer equal to an earlier
//     one (when halt_on_cycle; period = distance) -> kCycle
//   - when max_layers layers are stored           -> kHeightLimit
// A plan with no occupied cells is rejected with ValidationError.
Tower grow_tower(const Layer& plan, const TotalisticRule& rule, const GrowthConfig& config = {});

} // namespace strata
