#pragma once

#include <optional>
#include <span>
#include <vector>

#include "honeynet/catalog.hpp"
#include "honeynet/detection.hpp"
#include "honeynet/event.hpp"
#include "honeynet/thresholds.hpp"

namespace honeynet {

/// Sliding event-time window over one source's web login attempts (R10).
///
/// Logins are split into bursts wherever consecutive attempts are more than
/// `brute_force_window_secs` apart. A burst fires once, at the first attempt where the
/// window (ts - window, ts] holds at least `brute_force_min_attempts` logins. The actor is
/// HumanDirectedAutomation when at least half of the usernames in that window are derived
/// from the honeytoken, otherwise Automated. The detection references every attempt in the
/// burst, so `source_event_ids.size()` is the burst's attempt count.
///
/// Non-login events in `events` are ignored. Events must be sorted by ts.
std::vector<Detection> detect_brute_force(std::span<const Event> events, const HoneytokenCatalog& c,
                                          const RateThresholds& t = {});

/// Single-burst convenience form: the first burst detection, if any.
std::optional<Detection> detect_brute_force_once(std::span<const Event> events, const HoneytokenCatalog& c,
                                                 const RateThresholds& t = {});

}  // namespace honeynet
