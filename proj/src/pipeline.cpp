#include "honeynet/pipeline.hpp"

#include <algorithm>
#include <tuple>

#include "honeynet/brute_force.hpp"
#include "honeynet/errors.hpp"
#include "honeynet/rules.hpp"

namespace honeynet {
namespace {

struct Staged {
    Detection detection;
    StageContext ctx;
};

std::uint64_t first_id(const Detection& d) {
    return d.source_event_ids.empty() ? 0 : d.source_event_ids.front();
}

bool blank_login(const Event& e) {
    auto l = e.as<LoginAttempt>();
    return l && l->username.empty() && l->password.empty();
}

}  // namespace

bool detection_before(const Detection& a, const Detection& b) {
    return std::forward_as_tuple(a.ts, a.rule, a.src, first_id(a)) <
           std::forward_as_tuple(b.ts, b.rule, b.src, first_id(b));
}

PipelineResult run_pipeline(std::span<const Event> events, const HoneytokenCatalog& c, const RateThresholds& t,
                            PipelineOptions opts) {
    std::map<std::string, std::vector<Event>> by_source;
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (i > 0 && events[i].ts < events[i - 1].ts) {
            throw OrderError("event stream not sorted: ts " + std::to_string(events[i].ts) + " follows " +
                             std::to_string(events[i - 1].ts));
        }
        by_source[events[i].src].push_back(events[i]);
    }

    PipelineResult result;
    for (const auto& [src, source_events] : by_source) {
        std::vector<Staged> staged;
        RateWindow window(opts.rate_window_secs);
        for (const auto& e : source_events) {
            window.push(e);
            const auto feats = window.features(e.ts);
            for (auto& d : match_rules(e, c, feats, t)) {
                d.actor = classify_actor(d, feats, t);
                staged.push_back({std::move(d), {automated_rate(feats, t), blank_login(e)}});
            }
        }
        for (auto& d : detect_brute_force(source_events, c, t)) staged.push_back({std::move(d), {}});

        std::stable_sort(staged.begin(), staged.end(), [](const Staged& a, const Staged& b) {
            return detection_before(a.detection, b.detection);
        });

        AttackState state;
        state.src = src;
        for (const auto& e : source_events) state.observe(e, c);
        for (auto& s : staged) {
            state.apply(s.detection, s.ctx);
            result.detections.push_back(std::move(s.detection));
        }
        result.states.emplace(src, std::move(state));
    }

    std::stable_sort(result.detections.begin(), result.detections.end(), detection_before);
    return result;
}

}  // namespace honeynet
