#include "strata/growth.hpp"

#include "strata/error.hpp"

namespace strata {

std::string to_string(Termination t) {
    switch (t) {
    case Termination::kEmpty: return "EMPTY";
    case Termination::kCycle: return "CYCLE";
    case Termination::kHeightLimit: return "HEIGHT_LIMIT";
    }
    return "?";
}

std::optional<Termination> termination_from_string(const std::string& tag) {
    if (tag == "EMPTY") return Termination::kEmpty;
    if (tag == "CYCLE") return Termination::kCycle;
    if (tag == "HEIGHT_LIMIT") return Termination::kHeightLimit;
    return std::nullopt;
}

long long Tower::population() const {
    long long total = 0;
    for (const Layer& layer : layers) {
        total += layer.population();
    }
    return total;
}

Tower grow_tower(const Layer& plan, const TotalisticRule& rule, const GrowthConfig& config) {
    if (config.max_layers < 1) {
        throw DomainError("max_layers must be >= 1, got " + std::to_string(config.max_layers));
    }
    if (plan.is_empty()) {
        throw ValidationError("plan has no occupied cells; a tower needs a ground floor");
    }

    Tower tower;
    tower.rule_code = rule.code();
    tower.layers.push_back(plan);

    while (true) {
        if (tower.height() >= config.max_layers) {
            tower.termination = Termination::kHeightLimit;
            break;
        }
        Layer next = step_layer(tower.layers.back(), rule);
        if (config.clip_mode == ClipMode::kFootprintMask) {
            next = apply_mask(next, plan);
        }
        if (next.is_empty()) {
            tower.termination = Termination::kEmpty;
            break;
        }
        if (config.halt_on_cycle) {
            int repeat_of = -1;
            for (int j = 0; j < tower.height(); ++j) {
                if (tower.layers[static_cast<std::size_t>(j)] == next) {
                    repeat_of = j;
                    break;
                }
            }
            if (repeat_of >= 0) {
                // The closing layer is kept: the tower records where the form
                // stopped changing.
                tower.layers.push_back(std::move(next));
                tower.termination = Termination::kCycle;
                tower.cycle_period = (tower.height() - 1) - repeat_of;
                break;
            }
        }
        tower.layers.push_back(std::move(next));
    }
    return tower;
}

} // namespace strata
