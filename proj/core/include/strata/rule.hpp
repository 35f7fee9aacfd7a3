#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace strata {

// Number of distinct 2-state 9-neighbor totalistic rules: one output bit per
// neighborhood sum 0..9.
inline constexpr int kRuleSpaceSize = 1024;

// A totalistic update rule over the 9-cell Moore neighborhood (center
// included) with two cell states. The rule is a 10-entry output table indexed
// by the neighborhood sum; the table packs into an integer code where bit n
// holds the output for sum n. The code and the table are kept in sync by
// construction: the only state is the packed bits.
class TotalisticRule {
public:
    static constexpr int kStates = 2;
    static constexpr int kNeighborhood = 9;
    static constexpr int kTableSize = kNeighborhood + 1; // sums 0..9

    // Builds the rule for a code in [0, 1024). Throws DomainError otherwise.
    static TotalisticRule from_code(int code);

    // Builds a rule from an explicit output table. Entries must be 0 or 1;
    // anything else throws ValidationError.
    static TotalisticRule from_outputs(const std::array<std::uint8_t, kTableSize>& outputs);

    // The packed integer code, sum-0 output in bit 0.
    int code() const { return bits_; }

    // Output cell state for a neighborhood sum in [0, 9]. Throws DomainError
    // for sums outside that range (ten cells can never sum past 9).
    int output(int total) const;

    // Unchecked table lookup for hot loops; total must be in [0, 9].
    int output_unchecked(int total) const { return (bits_ >> total) & 1; }

    std::array<std::uint8_t, kTableSize> outputs() const;

    friend bool operator==(const TotalisticRule&, const TotalisticRule&) = default;

private:
    explicit TotalisticRule(std::uint16_t bits) : bits_(bits) {}

    std::uint16_t bits_;
};

// Free-function spellings of the codec.
TotalisticRule decode_rule(int code);
int encode_rule(const TotalisticRule& rule);

// Output state for a neighborhood sum; bounds-checked.
int rule_output(const TotalisticRule& rule, int total);

// One-line human-readable description: code, the 10-bit table printed
// most-significant-sum first, and the set of sums that produce a live cell.
// Rule 816 renders with the bit string "1100110000".
std::string render_rule(const TotalisticRule& rule);

} // namespace strata
