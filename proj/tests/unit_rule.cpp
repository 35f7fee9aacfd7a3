#include <doctest.h>

#include <vector>

#include "strata/error.hpp"
#include "strata/rule.hpp"

using strata::TotalisticRule;

namespace {

std::vector<int> active_sums(const TotalisticRule& rule) {
    std::vector<int> sums;
    for (int total = 0; total < TotalisticRule::kTableSize; ++total) {
        if (rule.output(total) == 1) sums.push_back(total);
    }
    return sums;
}

} // namespace

TEST_SUITE("rule") {

TEST_CASE("code 816 activates sums 4, 5, 8, 9") {
    const TotalisticRule rule = TotalisticRule::from_code(816);
    CHECK(active_sums(rule) == std::vector<int>{4, 5, 8, 9});
    CHECK(rule.code() == 816);
}

TEST_CASE("rendering names the bits and the active sums") {
    CHECK(strata::render_rule(TotalisticRule::from_code(816)) ==
          "rule 816: bits 1100110000, active sums {4,5,8,9}");
    CHECK(strata::render_rule(TotalisticRule::from_code(0)) ==
          "rule 0: bits 0000000000, active sums {}");
}

TEST_CASE("encode inverts decode across the whole space") {
    for (int code = 0; code < strata::kRuleSpaceSize; ++code) {
        CHECK(strata::encode_rule(strata::decode_rule(code)) == code);
    }
}

TEST_CASE("output table round-trips through from_outputs") {
    const TotalisticRule rule = TotalisticRule::from_code(688);
    CHECK(TotalisticRule::from_outputs(rule.outputs()) == rule);
}

TEST_CASE("out-of-range codes are rejected") {
    CHECK_THROWS_AS(TotalisticRule::from_code(-1), strata::DomainError);
    CHECK_THROWS_AS(TotalisticRule::from_code(strata::kRuleSpaceSize), strata::DomainError);
}

TEST_CASE("output table entries must be binary") {
    std::array<std::uint8_t, 10> table{};
    table[3] = 2;
    CHECK_THROWS_AS(TotalisticRule::from_outputs(table), strata::ValidationError);
}

TEST_CASE("neighborhood totals outside 0..9 are rejected") {
    const TotalisticRule rule = TotalisticRule::from_code(1);
    CHECK(rule.output(0) == 1);
    CHECK_THROWS_AS(rule.output(10), strata::DomainError);
    CHECK_THROWS_AS(rule.output(-1), strata::DomainError);
    CHECK(strata::rule_output(rule, 0) == 1);
}

} // TEST_SUITE
