#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "honeynet/catalog.hpp"
#include "honeynet/event.hpp"

namespace honeynet {

enum class ScenarioKind : std::uint8_t { AutomatedScan, HumanExplorer, PentestReplay };

std::string_view to_string(ScenarioKind k) noexcept;
/// Accepts the CLI spellings "auto", "human", "replay".
std::optional<ScenarioKind> parse_scenario_kind(std::string_view s) noexcept;

struct Scenario {
    ScenarioKind kind = ScenarioKind::PentestReplay;
    std::uint64_t seed = 0;
    HoneytokenCatalog catalog = default_catalog();
    Millis start_ts = 0;
};

/// Deterministic synthetic trace, sorted by ts, seq numbered in order.
/// Throws std::invalid_argument for an invalid catalog, or one without index or disallowed paths.
std::vector<Event> generate(const Scenario& s);

/// Source address the replay attacker uses.
inline constexpr std::string_view kReplayAttacker = "10.0.0.5";

/// Cumulative per-kind counts from the trace start.
struct CheckpointCounts {
    std::uint64_t icmp = 0;
    std::uint64_t syn = 0;  // incoming
    std::uint64_t index = 0;
    std::uint64_t hidden = 0;
    std::uint64_t disallowed = 0;
    std::uint64_t logins = 0;
    std::uint64_t blank_logins = 0;

    friend bool operator==(const CheckpointCounts&, const CheckpointCounts&) = default;
};

/// Counts over events with ts <= start_ts + minutes. Past the end of the trace this is the total.
CheckpointCounts checkpoint_counts(std::span<const Event> trace, const HoneytokenCatalog& c, Millis start_ts,
                                   double minutes);

/// Replay timeline: minute marks at which the case-study counts are reached.
namespace replay {
inline constexpr double kStage2EndMin = 13;
inline constexpr double kStage3EndMin = 14;
inline constexpr double kStage5EndMin = 35;
inline constexpr double kEndMin = 98;
inline constexpr std::uint64_t kBruteForceAttempts = 1406;
}  // namespace replay

/// Free-text notes describing modelling assumptions of a scenario kind.
std::vector<std::string> scenario_notes(ScenarioKind k);

}  // namespace honeynet
