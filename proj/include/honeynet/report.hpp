#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "honeynet/attack_state.hpp"
#include "honeynet/catalog.hpp"
#include "honeynet/detection.hpp"
#include "honeynet/event.hpp"
#include "honeynet/pipeline.hpp"

namespace honeynet {

struct IndexAccess {
    std::string src;
    Millis ts = 0;
};

struct LoginRecord {
    Millis ts = 0;
    std::string username;
    std::string password;
};

/// Dashboard panels for one source: ICMP, index accesses, hidden-link clicks, SYNs,
/// login credentials, disallowed-folder accesses; plus the classification verdict.
struct SourceReport {
    std::string src;
    AttackCounters counters;
    std::vector<IndexAccess> index_accesses;
    std::vector<LoginRecord> logins;
    std::optional<Severity> max_severity;
    std::optional<PriorityBand> priority_band;
    ActorClass actor_verdict = ActorClass::Indeterminate;
    std::vector<Stage> stages_seen;
    bool structured_attack = false;
    std::map<RuleId, std::uint64_t> detections_by_rule;
};

struct ReportSummary {
    std::vector<SourceReport> sources;  // ordered by source address
    std::uint64_t events = 0;
    std::uint64_t detections = 0;
    std::optional<PriorityBand> max_band;
};

ReportSummary build_report(std::span<const Event> events, const PipelineResult& result,
                           const HoneytokenCatalog& c);

std::string render_report_json(const ReportSummary& r);
std::string render_report_text(const ReportSummary& r);

/// 0 for no detections or low priority, 1 for medium, 2 for high.
int band_exit_code(const ReportSummary& r) noexcept;

/// One NDJSON line: rule_id, ts, src, severity, actor, evidence, source_event_ids.
std::string serialize_detection(const Detection& d);

}  // namespace honeynet
