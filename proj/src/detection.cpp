#include "honeynet/detection.hpp"

#include <charconv>

#include "honeynet/thresholds.hpp"

namespace honeynet {

std::string rule_name(RuleId r) {
    return "R" + std::to_string(static_cast<int>(r));
}

std::optional<RuleId> parse_rule(std::string_view s) noexcept {
    if (s.size() < 2 || s.front() != 'R') return std::nullopt;
    int n = 0;
    auto [p, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), n);
    if (ec != std::errc{} || p != s.data() + s.size() || n < 1 || n > 10) return std::nullopt;
    return static_cast<RuleId>(n);
}

std::optional<std::string> validate_thresholds(const RateThresholds& t) {
    if (!(t.human_max_requests_per_min > 0)) return "human_max_requests_per_min";
    if (!(t.human_max_chars_per_sec > 0)) return "human_max_chars_per_sec";
    if (!(t.bot_interarrival_secs > 0)) return "bot_interarrival_secs";
    if (!(t.bot_interarrival_cv_max > 0)) return "bot_interarrival_cv_max";
    if (t.brute_force_min_attempts <= 0) return "brute_force_min_attempts";
    if (t.brute_force_window_secs <= 0) return "brute_force_window_secs";
    return std::nullopt;
}

}  // namespace honeynet
