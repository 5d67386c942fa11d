#pragma once

#include <vector>

#include "honeynet/catalog.hpp"
#include "honeynet/detection.hpp"
#include "honeynet/event.hpp"
#include "honeynet/rate.hpp"
#include "honeynet/thresholds.hpp"

namespace honeynet {

/// Every rule-table row the event satisfies, in rule order, before precedence is applied.
std::vector<Detection> all_rule_matches(const Event& e, const HoneytokenCatalog& c,
                                        const RateFeatures& feats, const RateThresholds& t = {});

/// Rule table lookup: at most one Detection, carrying the highest severity among matching rows
/// (ties resolved by lower rule number). Unmatched events yield an empty list.
std::vector<Detection> match_rules(const Event& e, const HoneytokenCatalog& c,
                                   const RateFeatures& feats, const RateThresholds& t = {});

/// Resolves Indeterminate actors from rate features. R7/R8 are always Human.
ActorClass classify_actor(const Detection& d, const RateFeatures& feats, const RateThresholds& t = {});

/// True when the source is moving faster than a person plausibly browses.
bool automated_rate(const RateFeatures& feats, const RateThresholds& t) noexcept;

}  // namespace honeynet
