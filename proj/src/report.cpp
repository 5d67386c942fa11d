#include "honeynet/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace honeynet {
namespace {

using nlohmann::ordered_json;

// Field names and order shared by both renderers.
std::vector<std::pair<const char*, std::uint64_t>> counter_fields(const AttackCounters& c) {
    return {
        {"icmp_count", c.icmp},
        {"syn_in", c.syn_in},
        {"syn_out", c.syn_out},
        {"index_accesses", c.index_access},
        {"hidden_link_clicks", c.hidden_link},
        {"disallowed_accesses", c.disallowed_access},
        {"login_attempts", c.login_attempts},
        {"blank_logins", c.blank_logins},
        {"honeytoken_logins", c.honeytoken_logins},
        {"variation_logins", c.variation_logins},
        {"brute_force_logins", c.brute_force_logins},
    };
}

std::string opt_name(const auto& v) {
    return v ? std::string(to_string(*v)) : std::string("none");
}

}  // namespace

ReportSummary build_report(std::span<const Event> events, const PipelineResult& result,
                           const HoneytokenCatalog& c) {
    ReportSummary r;
    r.events = events.size();
    r.detections = result.detections.size();

    std::map<std::string, SourceReport> by_src;
    for (const auto& [src, state] : result.states) {
        auto& s = by_src[src];
        s.src = src;
        s.counters = state.counters;
        s.max_severity = state.max_severity;
        s.priority_band = state.priority_band();
        s.actor_verdict = state.actor_verdict();
        s.stages_seen = state.stages_seen;
        s.structured_attack = state.structured_attack;
        if (s.priority_band && (!r.max_band || *r.max_band < *s.priority_band)) r.max_band = s.priority_band;
    }
    for (const auto& d : result.detections) ++by_src[d.src].detections_by_rule[d.rule];

    for (const auto& e : events) {
        auto it = by_src.find(e.src);
        if (it == by_src.end()) continue;
        if (auto h = e.as<HttpAccess>()) {
            if (c.is_index(h->path)) it->second.index_accesses.push_back({e.src, e.ts});
        } else if (auto l = e.as<LoginAttempt>()) {
            it->second.logins.push_back({e.ts, l->username, l->password});
        }
    }
    for (auto& [src, s] : by_src) r.sources.push_back(std::move(s));
    return r;
}

std::string render_report_json(const ReportSummary& r) {
    ordered_json j;
    j["events"] = r.events;
    j["detections"] = r.detections;
    j["max_priority_band"] = opt_name(r.max_band);
    auto& sources = j["sources"] = ordered_json::array();
    for (const auto& s : r.sources) {
        ordered_json o;
        o["src"] = s.src;
        for (const auto& [name, value] : counter_fields(s.counters)) o[name] = value;
        o["max_severity"] = opt_name(s.max_severity);
        o["priority_band"] = opt_name(s.priority_band);
        o["actor_verdict"] = to_string(s.actor_verdict);
        auto& stages = o["stages_seen"] = ordered_json::array();
        for (auto st : s.stages_seen) stages.push_back(to_string(st));
        o["structured_attack"] = s.structured_attack;
        auto& rules = o["detections_by_rule"] = ordered_json::object();
        for (const auto& [rule, n] : s.detections_by_rule) rules[rule_name(rule)] = n;
        auto& index_log = o["index_access_log"] = ordered_json::array();
        for (const auto& a : s.index_accesses) index_log.push_back({{"src", a.src}, {"ts", a.ts}});
        auto& login_log = o["login_log"] = ordered_json::array();
        for (const auto& l : s.logins) {
            login_log.push_back({{"ts", l.ts}, {"username", l.username}, {"password", l.password}});
        }
        sources.push_back(std::move(o));
    }
    return j.dump(2) + "\n";
}

std::string render_report_text(const ReportSummary& r) {
    std::ostringstream out;
    out << "events: " << r.events << '\n'
        << "detections: " << r.detections << '\n'
        << "max_priority_band: " << opt_name(r.max_band) << '\n';
    for (const auto& s : r.sources) {
        out << "\n[source " << s.src << "]\n";
        for (const auto& [name, value] : counter_fields(s.counters)) out << name << ": " << value << '\n';
        out << "max_severity: " << opt_name(s.max_severity) << '\n'
            << "priority_band: " << opt_name(s.priority_band) << '\n'
            << "actor_verdict: " << to_string(s.actor_verdict) << '\n'
            << "stages_seen:";
        for (auto st : s.stages_seen) out << ' ' << to_string(st);
        out << "\nstructured_attack: " << (s.structured_attack ? "true" : "false") << '\n'
            << "detections_by_rule:";
        for (const auto& [rule, n] : s.detections_by_rule) out << ' ' << rule_name(rule) << '=' << n;
        out << '\n';
        for (const auto& a : s.index_accesses) out << "index_access " << a.ts << ' ' << a.src << '\n';
        for (const auto& l : s.logins) {
            out << "login " << l.ts << " user='" << l.username << "' password='" << l.password << "'\n";
        }
    }
    return out.str();
}

int band_exit_code(const ReportSummary& r) noexcept {
    if (!r.max_band) return 0;
    switch (*r.max_band) {
        case PriorityBand::LowPriority: return 0;
        case PriorityBand::MediumPriority: return 1;
        case PriorityBand::HighPriority: return 2;
    }
    return 0;
}

std::string serialize_detection(const Detection& d) {
    ordered_json j;
    j["rule_id"] = d.rule_id();
    j["ts"] = d.ts;
    j["src"] = d.src;
    j["severity"] = to_string(d.severity);
    j["actor"] = to_string(d.actor);
    j["evidence"] = d.evidence;
    j["source_event_ids"] = d.source_event_ids;
    return j.dump();
}

}  // namespace honeynet
