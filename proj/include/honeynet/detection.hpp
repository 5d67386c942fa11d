#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "honeynet/event.hpp"
#include "honeynet/severity.hpp"

namespace honeynet {

// Rows of the honeytoken rule table, plus the brute-force burst rule.
enum class RuleId : std::uint8_t {
    R1 = 1,  // ICMP or incoming SYN
    R2,      // index page access
    R3,      // hidden link access
    R4,      // SSH login (reserved)
    R5,      // web login, unrelated credentials
    R6,      // robots.txt disallowed path
    R7,      // exact honeytoken credentials
    R8,      // variation on the honeytoken credentials
    R9,      // SYN originating from a honeypot
    R10,     // login brute force
};

std::string rule_name(RuleId r);
std::optional<RuleId> parse_rule(std::string_view s) noexcept;

struct Detection {
    RuleId rule = RuleId::R1;
    Millis ts = 0;
    std::string src;
    Severity severity = Severity::VeryLow;
    ActorClass actor = ActorClass::Indeterminate;
    std::string evidence;
    std::vector<std::uint64_t> source_event_ids;

    std::string rule_id() const { return rule_name(rule); }

    friend bool operator==(const Detection&, const Detection&) = default;
};

}  // namespace honeynet
