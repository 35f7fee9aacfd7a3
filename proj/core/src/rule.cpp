#include "strata/rule.hpp"

#include <sstream>

#include "strata/error.hpp"

namespace strata {

TotalisticRule TotalisticRule::from_code(int code) {
    if (code < 0 || code >= kRuleSpaceSize) {
        throw DomainError("rule code " + std::to_string(code) + " outside [0, " +
                          std::to_string(kRuleSpaceSize - 1) + "]");
    }
    return TotalisticRule(static_cast<std::uint16_t>(code));
}

TotalisticRule TotalisticRule::from_outputs(const std::array<std::uint8_t, kTableSize>& outputs) {
    std::uint16_t bits = 0;
    for (int n = 0; n < kTableSize; ++n) {
        if (outputs[n] > 1) {
            throw ValidationError("rule output table entry for sum " + std::to_string(n) +
                                  " is " + std::to_string(outputs[n]) + ", expected 0 or 1");
        }
        bits |= static_cast<std::uint16_t>(outputs[n] << n);
    }
    return TotalisticRule(bits);
}

int TotalisticRule::output(int total) const {
    if (total < 0 || total >= kTableSize) {
        throw DomainError("neighborhood sum " + std::to_string(total) + " outside [0, " +
                          std::to_string(kTableSize - 1) + "]");
    }
    return output_unchecked(total);
}

std::array<std::uint8_t, TotalisticRule::kTableSize> TotalisticRule::outputs() const {
    std::array<std::uint8_t, kTableSize> table{};
    for (int n = 0; n < kTableSize; ++n) {
        table[n] = static_cast<std::uint8_t>(output_unchecked(n));
    }
    return table;
}

TotalisticRule decode_rule(int code) {
    return TotalisticRule::from_code(code);
}

int encode_rule(const TotalisticRule& rule) {
    return rule.code();
}

int rule_output(const TotalisticRule& rule, int total) {
    return rule.output(total);
}

std::string render_rule(const TotalisticRule& rule) {
    std::ostringstream out;
    out << "rule " << rule.code() << ": bits ";
    for (int n = TotalisticRule::kTableSize - 1; n >= 0; --n) {
        out << rule.output_unchecked(n);
    }
    out << ", active sums {";
    bool first = true;
    for (int n = 0; n < TotalisticRule::kTableSize; ++n) {
        if (rule.output_unchecked(n)) {
            if (!first) out << ",";
            out << n;
            first = false;
        }
    }
    out << "}";
    return out.str();
}

} // namespace strata
