#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "strata/error.hpp"
#include "strata/formats.hpp"
#include "strata/growth.hpp"
#include "strata/rule.hpp"

using strata::GrowthConfig;
using strata::Layer;
using strata::Termination;
using strata::TotalisticRule;
using strata::Tower;

namespace {

Layer solid(int side) {
    Layer layer(side, side);
    for (int r = 0; r < side; ++r) {
        for (int c = 0; c < side; ++c) layer.set(r, c, 1);
    }
    return layer;
}

} // namespace

TEST_SUITE("growth") {

TEST_CASE("survive-on-9 erodes a solid square into a step pyramid") {
    const Tower tower = strata::grow_tower(solid(9), TotalisticRule::from_code(512));
    REQUIRE(tower.height() == 5);
    CHECK(tower.termination == Termination::kEmpty);
    CHECK(!tower.cycle_period.has_value());
    CHECK(tower.rule_code == 512);
    for (int k = 0; k < 5; ++k) {
        const Layer& layer = tower.layers[static_cast<std::size_t>(k)];
        for (int r = 0; r < 9; ++r) {
            for (int c = 0; c < 9; ++c) {
                const bool inside = r >= k && r < 9 - k && c >= k && c < 9 - k;
                CHECK(layer.at(r, c) == (inside ? 1 : 0));
            }
        }
    }
}

TEST_CASE("all-sums-active saturates the frame and closes a period-1 cycle") {
    const Tower tower = strata::grow_tower(solid(9), TotalisticRule::from_code(1023));
    REQUIRE(tower.height() == 2);
    CHECK(tower.termination == Termination::kCycle);
    CHECK(tower.cycle_period == 1);
    CHECK(tower.layers[1] == solid(9));
}

TEST_CASE("a plus pentomino is a fixed point of rule 816") {
    const Layer plan = strata::parse_plan_text(".....\n..#..\n.###.\n..#..\n.....").layer;
    REQUIRE(plan.width() == 5);
    const Tower tower = strata::grow_tower(plan, TotalisticRule::from_code(816));
    REQUIRE(tower.height() == 2);
    CHECK(tower.termination == Termination::kCycle);
    CHECK(tower.cycle_period == 1);
    CHECK(tower.layers[1] == plan);
}

TEST_CASE("a dead rule stops before storing the empty layer") {
    const Tower tower = strata::grow_tower(solid(4), TotalisticRule::from_code(0));
    CHECK(tower.height() == 1);
    CHECK(tower.termination == Termination::kEmpty);
    CHECK(tower.layers[0] == solid(4));
}

TEST_CASE("the layer cap wins over a long transient") {
    GrowthConfig config;
    config.max_layers = 3;
    const Tower tower = strata::grow_tower(solid(41), TotalisticRule::from_code(512), config);
    CHECK(tower.height() == 3);
    CHECK(tower.termination == Termination::kHeightLimit);
}

TEST_CASE("cycle detection can be disabled") {
    GrowthConfig config;
    config.max_layers = 5;
    config.halt_on_cycle = false;
    const Tower tower = strata::grow_tower(solid(3), TotalisticRule::from_code(1023), config);
    CHECK(tower.height() == 5);
    CHECK(tower.termination == Termination::kHeightLimit);
    CHECK(!tower.cycle_period.has_value());
}

TEST_CASE("footprint masking keeps growth inside the plan") {
    const Layer ring = strata::parse_plan_text("###\n#.#\n###").layer;
    const TotalisticRule rule = TotalisticRule::from_code(1023);

    const Tower boxed = strata::grow_tower(ring, rule);
    REQUIRE(boxed.height() == 3);
    CHECK(boxed.layers[1].at(1, 1) == 1); // the hole fills in

    GrowthConfig config;
    config.clip_mode = strata::ClipMode::kFootprintMask;
    const Tower masked = strata::grow_tower(ring, rule, config);
    REQUIRE(masked.height() == 2);
    CHECK(masked.termination == Termination::kCycle);
    CHECK(masked.cycle_period == 1);
    CHECK(masked.layers[1] == ring);
}

TEST_CASE("an oscillating pair records its period") {
    const Layer plan = strata::parse_plan_text("#.#\n...\n...").layer;
    const Tower tower = strata::grow_tower(plan, TotalisticRule::from_code(1));
    REQUIRE(tower.height() == 4);
    CHECK(tower.termination == Termination::kCycle);
    CHECK(tower.cycle_period == 2);
    CHECK(tower.layers[3] == tower.layers[1]);
}

TEST_CASE("degenerate configurations are rejected") {
    CHECK_THROWS_AS(strata::grow_tower(Layer(3, 3), TotalisticRule::from_code(5)),
                    strata::ValidationError);
    GrowthConfig config;
    config.max_layers = 0;
    CHECK_THROWS_AS(strata::grow_tower(solid(3), TotalisticRule::from_code(5), config),
                    strata::DomainError);
}

TEST_CASE("grower agrees with the naive oracle on random inputs") {
    std::mt19937 rng(911);
    std::uniform_int_distribution<int> code_dist(0, strata::kRuleSpaceSize - 1);
    std::uniform_int_distribution<int> size_dist(2, 12);
    std::uniform_real_distribution<double> density_dist(0.2, 0.8);
    std::bernoulli_distribution mask_dist(0.5);
    for (int trial = 0; trial < 40; ++trial) {
        Layer plan = testsupport::random_layer(rng, size_dist(rng), size_dist(rng),
                                               density_dist(rng));
        if (plan.is_empty()) plan.set(0, 0, 1);
        const TotalisticRule rule = TotalisticRule::from_code(code_dist(rng));
        const bool mask = mask_dist(rng);

        GrowthConfig config;
        config.max_layers = 24;
        config.clip_mode = mask ? strata::ClipMode::kFootprintMask
                                : strata::ClipMode::kBoundingBox;
        const Tower tower = strata::grow_tower(plan, rule, config);
        const testsupport::OracleTower expected =
            testsupport::oracle_grow(plan, rule.outputs(), 24, mask);

        REQUIRE(tower.layers.size() == expected.layers.size());
        for (std::size_t k = 0; k < expected.layers.size(); ++k) {
            CHECK(tower.layers[k] == expected.layers[k]);
        }
        CHECK(strata::to_string(tower.termination) == expected.termination);
        CHECK(tower.cycle_period.value_or(0) == expected.period);
    }
}

} // TEST_SUITE
