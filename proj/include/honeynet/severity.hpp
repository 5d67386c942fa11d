#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace honeynet {

// Six-level scale; ordinal order is the severity order.
enum class Severity : std::uint8_t {
    VeryLow = 0,
    Low = 1,
    MediumLow = 2,
    MediumHigh = 3,
    High = 4,
    HighHigh = 5,
};

enum class PriorityBand : std::uint8_t {
    LowPriority = 0,
    MediumPriority = 1,
    HighPriority = 2,
};

enum class ActorClass : std::uint8_t {
    Automated,
    Human,
    HumanDirectedAutomation,  // automated burst configured from a honeytoken
    Indeterminate,
};

inline constexpr Severity kAllSeverities[] = {
    Severity::VeryLow, Severity::Low,  Severity::MediumLow,
    Severity::MediumHigh, Severity::High, Severity::HighHigh,
};

constexpr PriorityBand severity_band(Severity s) noexcept {
    switch (s) {
        case Severity::VeryLow:
        case Severity::Low:
            return PriorityBand::LowPriority;
        case Severity::MediumLow:
        case Severity::MediumHigh:
            return PriorityBand::MediumPriority;
        case Severity::High:
        case Severity::HighHigh:
            return PriorityBand::HighPriority;
    }
    return PriorityBand::HighPriority;
}

std::string_view to_string(Severity s) noexcept;
std::string_view to_string(PriorityBand b) noexcept;
std::string_view to_string(ActorClass a) noexcept;

std::optional<Severity> parse_severity(std::string_view s) noexcept;
std::optional<ActorClass> parse_actor(std::string_view s) noexcept;

}  // namespace honeynet
