#include "honeynet/attack_state.hpp"

#include <algorithm>
#include <stdexcept>

#include "honeynet/credentials.hpp"
#include "honeynet/errors.hpp"

namespace honeynet {

std::string_view to_string(Stage s) noexcept {
    switch (s) {
        case Stage::Recon: return "Recon";
        case Stage::WebScan: return "WebScan";
        case Stage::LoginExploration: return "LoginExploration";
        case Stage::ManualLoginTest: return "ManualLoginTest";
        case Stage::Fuzzing: return "Fuzzing";
        case Stage::HoneytokenCredentialUse: return "HoneytokenCredentialUse";
        case Stage::HiddenLinkAccess: return "HiddenLinkAccess";
        case Stage::BruteForce: return "BruteForce";
        case Stage::Breach: return "Breach";
    }
    return "?";
}

void AttackState::observe(const Event& e, const HoneytokenCatalog& c) {
    if (e.is<Icmp>()) {
        ++counters.icmp;
    } else if (auto syn = e.as<TcpSyn>()) {
        ++(syn->direction == Direction::Incoming ? counters.syn_in : counters.syn_out);
    } else if (auto http = e.as<HttpAccess>()) {
        if (c.is_index(http->path)) ++counters.index_access;
        if (c.is_hidden_link(http->path)) ++counters.hidden_link;
        if (c.is_disallowed(http->path)) ++counters.disallowed_access;
    } else if (auto login = e.as<LoginAttempt>()) {
        ++counters.login_attempts;
        if (login->username.empty() && login->password.empty()) ++counters.blank_logins;
        const auto m = credential_match(login->username, login->password, c);
        if (m.kind == MatchKind::Exact) ++counters.honeytoken_logins;
        if (m.is_variation()) ++counters.variation_logins;
    }
}

void AttackState::apply(const Detection& d, StageContext ctx) {
    if (d.src != src) throw std::invalid_argument("detection for " + d.src + " applied to state of " + src);
    if (max_severity && d.ts < last_detection_ts) {
        throw OrderError("detection at ts " + std::to_string(d.ts) + " precedes " +
                         std::to_string(last_detection_ts) + " for " + src);
    }
    last_detection_ts = d.ts;

    max_severity = max_severity ? std::max(*max_severity, d.severity) : d.severity;
    band_first_seen.emplace(severity_band(d.severity), d.ts);
    ++actor_tally[d.actor];

    std::optional<Stage> stage;
    switch (d.rule) {
        case RuleId::R1: stage = Stage::Recon; break;
        case RuleId::R2:
            if (ctx.automated_rate) stage = Stage::WebScan;
            break;
        case RuleId::R3: stage = Stage::HiddenLinkAccess; break;
        case RuleId::R5:
            if (d.actor == ActorClass::Human) {
                stage = Stage::ManualLoginTest;
            } else if (d.actor == ActorClass::Automated) {
                stage = ctx.blank_login ? Stage::LoginExploration : Stage::Fuzzing;
            }
            break;
        case RuleId::R6:
            if (ctx.automated_rate) stage = Stage::Fuzzing;
            break;
        case RuleId::R7:
        case RuleId::R8: stage = Stage::HoneytokenCredentialUse; break;
        case RuleId::R9: stage = Stage::Breach; break;
        case RuleId::R10:
            stage = Stage::BruteForce;
            counters.brute_force_logins += d.source_event_ids.size();
            break;
        case RuleId::R4: break;
    }
    if (stage && !has_stage(*stage)) stages_seen.push_back(*stage);

    const auto lo = band_first_seen.find(PriorityBand::LowPriority);
    const auto mid = band_first_seen.find(PriorityBand::MediumPriority);
    const auto hi = band_first_seen.find(PriorityBand::HighPriority);
    structured_attack = lo != band_first_seen.end() && mid != band_first_seen.end() &&
                        hi != band_first_seen.end() && lo->second < mid->second && mid->second < hi->second;
}

bool AttackState::has_stage(Stage s) const {
    return std::find(stages_seen.begin(), stages_seen.end(), s) != stages_seen.end();
}

ActorClass AttackState::actor_verdict() const {
    for (auto a : {ActorClass::Human, ActorClass::HumanDirectedAutomation, ActorClass::Automated}) {
        auto it = actor_tally.find(a);
        if (it != actor_tally.end() && it->second > 0) return a;
    }
    return ActorClass::Indeterminate;
}

std::optional<PriorityBand> AttackState::priority_band() const {
    if (!max_severity) return std::nullopt;
    return severity_band(*max_severity);
}

AttackState update_state(AttackState s, const Detection& d, StageContext ctx) {
    s.apply(d, ctx);
    return s;
}

}  // namespace honeynet
