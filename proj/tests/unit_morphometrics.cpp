#include <doctest.h>

#include <random>
#include <vector>

#include "oracle.hpp"
#include "strata/error.hpp"
#include "strata/formats.hpp"
#include "strata/growth.hpp"
#include "strata/morphometrics.hpp"
#include "strata/rule.hpp"

using strata::BehaviorClass;
using strata::Layer;
using strata::Profile;
using strata::ProfileKind;
using strata::Segment;
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

Tower pyramid9() {
    return strata::grow_tower(solid(9), TotalisticRule::from_code(512));
}

Tower box_tower(int side, int layers) {
    Tower tower;
    for (int k = 0; k < layers; ++k) tower.layers.push_back(solid(side));
    return tower;
}

Profile profile_of(std::vector<int> values) {
    return Profile{ProfileKind::kExtent, std::move(values)};
}

} // namespace

TEST_SUITE("morphometrics") {

TEST_CASE("elevation profiles of the erosion pyramid") {
    const Tower tower = pyramid9();
    CHECK(strata::elevation_profile(tower, ProfileKind::kExtent).values ==
          std::vector<int>{9, 7, 5, 3, 1});
    CHECK(strata::elevation_profile(tower, ProfileKind::kPopulation).values ==
          std::vector<int>{81, 49, 25, 9, 1});
}

TEST_CASE("an all-empty stored layer reports zero extent") {
    Tower tower;
    tower.layers.push_back(solid(3));
    tower.layers.push_back(Layer(3, 3));
    tower.layers.push_back(solid(3));
    CHECK(strata::elevation_profile(tower, ProfileKind::kExtent).values ==
          std::vector<int>{3, 0, 3});
}

TEST_CASE("segmentation run-length encodes and folds short runs backward") {
    CHECK(strata::segment_profile(profile_of({9, 9, 9, 5, 5, 1}), 1) ==
          std::vector<Segment>{{9, 3}, {5, 2}, {1, 1}});
    CHECK(strata::segment_profile(profile_of({7, 7, 7, 7}), 1) == std::vector<Segment>{{7, 4}});
    CHECK(strata::segment_profile(profile_of({9, 9, 8, 9, 9}), 2) == std::vector<Segment>{{9, 5}});
    CHECK(strata::segment_profile(profile_of({5, 3, 3, 5, 5}), 2) ==
          std::vector<Segment>{{5, 1}, {3, 2}, {5, 2}});
}

TEST_CASE("segmentation rejects degenerate input") {
    CHECK_THROWS_AS(strata::segment_profile(profile_of({}), 1), strata::ValidationError);
    CHECK_THROWS_AS(strata::segment_profile(profile_of({1}), 0), strata::DomainError);
}

TEST_CASE("ratio signatures reduce to the smallest coprime tuple") {
    REQUIRE(strata::ratio_signature({4, 6, 9}, 0.0).has_value());
    CHECK(strata::ratio_signature({4, 6, 9}, 0.0)->terms == std::vector<int>{4, 6, 9});
    CHECK(strata::ratio_signature({8, 12, 18}, 0.0)->terms == std::vector<int>{4, 6, 9});
    CHECK(strata::ratio_signature({41, 59, 91}, 0.03)->terms == std::vector<int>{4, 6, 9});
    CHECK(strata::ratio_signature({7}, 0.0)->terms == std::vector<int>{1});
    CHECK(strata::ratio_signature({6, 4}, 0.0)->terms == std::vector<int>{3, 2});
    CHECK(strata::ratio_signature({5, 7, 11}, 0.0)->terms == std::vector<int>{5, 7, 11});
}

TEST_CASE("tolerance admits smaller tuples than the exact reduction") {
    CHECK(strata::ratio_signature({10, 21}, 0.0)->terms == std::vector<int>{10, 21});
    CHECK(strata::ratio_signature({10, 21}, 0.05)->terms == std::vector<int>{1, 2});
}

TEST_CASE("ratio signatures are scale invariant at zero tolerance") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> term_dist(1, 30);
    std::uniform_int_distribution<int> scale_dist(2, 9);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<int> base{term_dist(rng), term_dist(rng), term_dist(rng)};
        std::vector<int> scaled;
        const int c = scale_dist(rng);
        for (int x : base) scaled.push_back(c * x);
        CHECK(strata::ratio_signature(base, 0.0)->terms ==
              strata::ratio_signature(scaled, 0.0)->terms);
    }
}

TEST_CASE("ratio signature input validation") {
    CHECK_THROWS_AS(strata::ratio_signature({}, 0.0), strata::ValidationError);
    CHECK_THROWS_AS(strata::ratio_signature({0, 3}, 0.0), strata::DomainError);
    CHECK_THROWS_AS(strata::ratio_signature({3, 4}, 0.5), strata::DomainError);
    CHECK_THROWS_AS(strata::ratio_signature({3, 4}, -0.1), strata::DomainError);
}

TEST_CASE("box counting is exact on self-similar solids") {
    Tower cube = box_tower(8, 8);
    const auto cube_fit = strata::box_counting_dimension(cube, 3);
    CHECK(cube_fit.slope == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(cube_fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(cube_fit.samples.size() == 4);
    CHECK(cube_fit.samples[0] == strata::BoxSample{1, 512});
    CHECK(cube_fit.samples[1] == strata::BoxSample{2, 64});
    CHECK(cube_fit.samples[2] == strata::BoxSample{4, 8});
    CHECK(cube_fit.samples[3] == strata::BoxSample{8, 1});

    const auto slab_fit = strata::box_counting_dimension(box_tower(8, 1), 3);
    CHECK(slab_fit.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(slab_fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));

    const auto point_fit = strata::box_counting_dimension(box_tower(1, 1), 3);
    CHECK(point_fit.slope == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(point_fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("box counts are anchored to the occupied bounding box") {
    Tower offset;
    Layer sparse(16, 16);
    sparse.set(9, 9, 1);
    offset.layers.push_back(sparse);
    const auto fit = strata::box_counting_dimension(offset, 3);
    CHECK(fit.slope == doctest::Approx(0.0).epsilon(1e-12));
    for (const auto& sample : fit.samples) CHECK(sample.box_count == 1);
}

TEST_CASE("box counts match a brute-force oracle on random towers") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> size_dist(2, 10);
    std::uniform_int_distribution<int> layers_dist(1, 6);
    std::uniform_real_distribution<double> density_dist(0.2, 0.8);
    for (int trial = 0; trial < 12; ++trial) {
        Tower tower;
        const int side = size_dist(rng);
        const int layer_count = layers_dist(rng);
        for (int k = 0; k < layer_count; ++k) {
            tower.layers.push_back(testsupport::random_layer(rng, side, side, density_dist(rng)));
        }
        if (tower.population() == 0) tower.layers[0].set(0, 0, 1);
        const auto fit = strata::box_counting_dimension(tower, 4);
        for (const auto& sample : fit.samples) {
            CHECK(sample.box_count == testsupport::oracle_box_count(tower, sample.box_size));
        }
    }
}

TEST_CASE("box counting validates its inputs") {
    CHECK_THROWS_AS(strata::box_counting_dimension(box_tower(4, 2), 1), strata::ValidationError);
    Tower empty;
    empty.layers.push_back(Layer(3, 3));
    CHECK_THROWS_AS(strata::box_counting_dimension(empty, 3), strata::ValidationError);
}

TEST_CASE("classification pins: dead, eroding, saturating, oscillating") {
    const Layer nine = solid(9);

    const auto dead = strata::classify_rule(nine, TotalisticRule::from_code(0), 16);
    CHECK(dead.behavior == BehaviorClass::kLimitPoint);
    CHECK(dead.transient_length == 1);
    CHECK(dead.period == 1);

    const auto eroding = strata::classify_rule(nine, TotalisticRule::from_code(512), 16);
    CHECK(eroding.behavior == BehaviorClass::kLimitPoint);
    CHECK(eroding.transient_length == 5);
    CHECK(eroding.period == 1);

    const auto saturating = strata::classify_rule(nine, TotalisticRule::from_code(1023), 16);
    CHECK(saturating.behavior == BehaviorClass::kLimitPoint);
    CHECK(saturating.transient_length == 1);
    CHECK(saturating.period == 1);

    const Layer pair = strata::parse_plan_text("#.#\n...\n...").layer;
    const auto oscillating = strata::classify_rule(pair, TotalisticRule::from_code(1), 16);
    CHECK(oscillating.behavior == BehaviorClass::kLimitCycle);
    CHECK(oscillating.transient_length == 1);
    CHECK(oscillating.period == 2);
}

TEST_CASE("a fixed-point plan classifies as a limit point with transient 1") {
    const Layer plus = strata::parse_plan_text(".....\n..#..\n.###.\n..#..\n.....").layer;
    const auto report = strata::classify_rule(plus, TotalisticRule::from_code(816), 16);
    CHECK(report.behavior == BehaviorClass::kLimitPoint);
    CHECK(report.transient_length == 1);
    CHECK(report.period == 1);
}

TEST_CASE("a too-short horizon reports unresolved without a period") {
    const auto report = strata::classify_rule(solid(9), TotalisticRule::from_code(512), 1);
    CHECK(report.behavior == BehaviorClass::kUnresolvedWithinHorizon);
    CHECK(!report.period.has_value());
    CHECK_THROWS_AS(strata::classify_rule(solid(3), TotalisticRule::from_code(0), 0),
                    strata::DomainError);
}

TEST_CASE("behavior classes have stable tags") {
    CHECK(strata::to_string(BehaviorClass::kLimitPoint) == "I");
    CHECK(strata::to_string(BehaviorClass::kLimitCycle) == "II");
    CHECK(strata::to_string(BehaviorClass::kUnresolvedWithinHorizon) == "UNRESOLVED");
}

} // TEST_SUITE
