#include "honeynet/severity.hpp"

namespace honeynet {

std::string_view to_string(Severity s) noexcept {
    switch (s) {
        case Severity::VeryLow: return "VeryLow";
        case Severity::Low: return "Low";
        case Severity::MediumLow: return "MediumLow";
        case Severity::MediumHigh: return "MediumHigh";
        case Severity::High: return "High";
        case Severity::HighHigh: return "HighHigh";
    }
    return "?";
}

std::string_view to_string(PriorityBand b) noexcept {
    switch (b) {
        case PriorityBand::LowPriority: return "LowPriority";
        case PriorityBand::MediumPriority: return "MediumPriority";
        case PriorityBand::HighPriority: return "HighPriority";
    }
    return "?";
}

std::string_view to_string(ActorClass a) noexcept {
    switch (a) {
        case ActorClass::Automated: return "Automated";
        case ActorClass::Human: return "Human";
        case ActorClass::HumanDirectedAutomation: return "HumanDirectedAutomation";
        case ActorClass::Indeterminate: return "Indeterminate";
    }
    return "?";
}

std::optional<Severity> parse_severity(std::string_view s) noexcept {
    for (auto sev : kAllSeverities) {
        if (to_string(sev) == s) return sev;
    }
    return std::nullopt;
}

std::optional<ActorClass> parse_actor(std::string_view s) noexcept {
    for (auto a : {ActorClass::Automated, ActorClass::Human, ActorClass::HumanDirectedAutomation,
                   ActorClass::Indeterminate}) {
        if (to_string(a) == s) return a;
    }
    return std::nullopt;
}

}  // namespace honeynet
