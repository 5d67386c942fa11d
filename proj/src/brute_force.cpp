#include "honeynet/brute_force.hpp"

#include "honeynet/credentials.hpp"
#include "honeynet/errors.hpp"

namespace honeynet {
namespace {

std::optional<Detection> scan_burst(std::span<const Event* const> burst, const HoneytokenCatalog& c,
                                    const RateThresholds& t) {
    const auto window_ms = t.brute_force_window_secs * 1000;
    const auto min_attempts = static_cast<std::size_t>(t.brute_force_min_attempts);
    if (burst.size() < min_attempts) return std::nullopt;

    std::size_t lo = 0;
    for (std::size_t hi = 0; hi < burst.size(); ++hi) {
        while (burst[lo]->ts <= burst[hi]->ts - window_ms) ++lo;
        const std::size_t in_window = hi - lo + 1;
        if (in_window < min_attempts) continue;

        std::size_t derived = 0;
        for (std::size_t i = lo; i <= hi; ++i) {
            const auto* login = burst[i]->as<LoginAttempt>();
            if (credential_match(login->username, login->password, c).honeytoken_derived()) ++derived;
        }
        const bool directed = 2 * derived >= in_window;

        Detection d;
        d.rule = RuleId::R10;
        d.ts = burst[hi]->ts;
        d.src = burst[hi]->src;
        d.severity = Severity::High;
        d.actor = directed ? ActorClass::HumanDirectedAutomation : ActorClass::Automated;
        d.evidence = std::to_string(burst.size()) + " login attempts in burst; " + std::to_string(derived) +
                     "/" + std::to_string(in_window) + " honeytoken-derived usernames in window";
        d.source_event_ids.reserve(burst.size());
        for (const auto* e : burst) d.source_event_ids.push_back(e->seq);
        return d;
    }
    return std::nullopt;
}

}  // namespace

std::vector<Detection> detect_brute_force(std::span<const Event> events, const HoneytokenCatalog& c,
                                          const RateThresholds& t) {
    std::vector<Detection> out;
    std::vector<const Event*> burst;
    const auto window_ms = t.brute_force_window_secs * 1000;

    for (const auto& e : events) {
        if (!e.is<LoginAttempt>()) continue;
        if (!burst.empty()) {
            if (e.ts < burst.back()->ts) throw OrderError("login events out of order at ts " + std::to_string(e.ts));
            if (e.ts - burst.back()->ts > window_ms) {
                if (auto d = scan_burst(burst, c, t)) out.push_back(std::move(*d));
                burst.clear();
            }
        }
        burst.push_back(&e);
    }
    if (auto d = scan_burst(burst, c, t)) out.push_back(std::move(*d));
    return out;
}

std::optional<Detection> detect_brute_force_once(std::span<const Event> events, const HoneytokenCatalog& c,
                                                 const RateThresholds& t) {
    auto all = detect_brute_force(events, c, t);
    if (all.empty()) return std::nullopt;
    return std::move(all.front());
}

}  // namespace honeynet
