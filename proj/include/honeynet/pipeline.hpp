#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "honeynet/attack_state.hpp"
#include "honeynet/catalog.hpp"
#include "honeynet/detection.hpp"
#include "honeynet/event.hpp"
#include "honeynet/rate.hpp"
#include "honeynet/thresholds.hpp"

namespace honeynet {

struct PipelineOptions {
    std::int64_t rate_window_secs = kDefaultRateWindowSecs;
};

struct PipelineResult {
    std::vector<Detection> detections;  // ordered by (ts, rule, src)
    std::map<std::string, AttackState> states;
};

/// Single deterministic pass over a ts-sorted stream (OrderError otherwise).
/// Rate features for an event cover that source's requests up to and including the event.
PipelineResult run_pipeline(std::span<const Event> events, const HoneytokenCatalog& c,
                            const RateThresholds& t = {}, PipelineOptions opts = {});

/// Detection ordering used by the pipeline output.
bool detection_before(const Detection& a, const Detection& b);

}  // namespace honeynet
