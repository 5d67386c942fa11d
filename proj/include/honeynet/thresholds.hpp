#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace honeynet {

/// Rate heuristics separating people from tools, and the brute-force burst trigger.
struct RateThresholds {
    double human_max_requests_per_min = 10.0;
    // Exposed for completeness; events carry no keystroke timing, so it never fires.
    double human_max_chars_per_sec = 3.0;
    // Typical scripted command cadence; informational, actor decisions use the CV test.
    double bot_interarrival_secs = 4.0;
    double bot_interarrival_cv_max = 0.1;
    std::int64_t brute_force_min_attempts = 100;
    std::int64_t brute_force_window_secs = 600;
};

/// Name of the first non-positive field, if any.
std::optional<std::string> validate_thresholds(const RateThresholds& t);

}  // namespace honeynet
