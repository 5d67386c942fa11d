#include "honeynet/rules.hpp"

#include <algorithm>
#include <cstdio>

#include "honeynet/credentials.hpp"

namespace honeynet {
namespace {

Detection make(RuleId rule, const Event& e, Severity sev, ActorClass actor, std::string evidence) {
    return Detection{rule, e.ts, e.src, sev, actor, std::move(evidence), {e.seq}};
}

std::string rate_text(double per_min) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", per_min);
    return buf;
}

}  // namespace

bool automated_rate(const RateFeatures& feats, const RateThresholds& t) noexcept {
    return feats.requests_per_min > t.human_max_requests_per_min;
}

std::vector<Detection> all_rule_matches(const Event& e, const HoneytokenCatalog& c,
                                        const RateFeatures& feats, const RateThresholds& t) {
    std::vector<Detection> out;

    if (e.is<Icmp>()) {
        out.push_back(make(RuleId::R1, e, Severity::VeryLow, ActorClass::Automated, "ICMP to " + e.dst));
    } else if (auto syn = e.as<TcpSyn>()) {
        if (syn->direction == Direction::Incoming) {
            out.push_back(make(RuleId::R1, e, Severity::VeryLow, ActorClass::Automated,
                               "incoming TCP SYN to " + e.dst));
        } else {
            out.push_back(make(RuleId::R9, e, Severity::HighHigh, ActorClass::Human,
                               "outgoing TCP SYN from honeypot " + e.src + " to " + e.dst));
        }
    } else if (auto http = e.as<HttpAccess>()) {
        const auto request = http->method + " " + http->path;
        if (c.is_index(http->path)) {
            out.push_back(make(RuleId::R2, e, Severity::Low, ActorClass::Automated, "index access " + request));
        }
        if (c.is_hidden_link(http->path)) {
            out.push_back(make(RuleId::R3, e, Severity::MediumLow, ActorClass::Indeterminate,
                               "hidden link access " + request));
        }
        if (c.is_disallowed(http->path)) {
            if (automated_rate(feats, t)) {
                out.push_back(make(RuleId::R6, e, Severity::Low, ActorClass::Automated,
                                   "disallowed path " + request + " at " + rate_text(feats.requests_per_min) +
                                       " req/min (downgraded)"));
            } else {
                out.push_back(make(RuleId::R6, e, Severity::MediumHigh, ActorClass::Automated,
                                   "disallowed path " + request));
            }
        }
    } else if (auto login = e.as<LoginAttempt>()) {
        const auto m = credential_match(login->username, login->password, c);
        const auto who = "user='" + login->username + "'";
        if (m.kind == MatchKind::Exact) {
            out.push_back(make(RuleId::R7, e, Severity::High, ActorClass::Human, "honeytoken credentials " + who));
        } else if (m.is_variation()) {
            auto evidence = std::string(to_string(m.kind)) + " of honeytoken credentials " + who;
            if (m.edit_distance) evidence += " distance " + std::to_string(*m.edit_distance);
            out.push_back(make(RuleId::R8, e, Severity::HighHigh, ActorClass::Human, std::move(evidence)));
        } else {
            out.push_back(make(RuleId::R5, e, Severity::MediumHigh, ActorClass::Indeterminate,
                               "web login with unrelated credentials " + who));
        }
    } else if (auto ssh = e.as<SshLoginAttempt>()) {
        out.push_back(make(RuleId::R4, e, Severity::MediumLow, ActorClass::Indeterminate,
                           "SSH login user='" + ssh->username + "'"));
    }
    return out;
}

std::vector<Detection> match_rules(const Event& e, const HoneytokenCatalog& c, const RateFeatures& feats,
                                   const RateThresholds& t) {
    auto all = all_rule_matches(e, c, feats, t);
    if (all.size() <= 1) return all;
    // max_element keeps the first of equal elements, i.e. the lower rule number.
    auto best = std::max_element(all.begin(), all.end(), [](const Detection& a, const Detection& b) {
        return a.severity < b.severity;
    });
    return {std::move(*best)};
}

ActorClass classify_actor(const Detection& d, const RateFeatures& feats, const RateThresholds& t) {
    if (d.rule == RuleId::R7 || d.rule == RuleId::R8) return ActorClass::Human;
    if (d.actor != ActorClass::Indeterminate) return d.actor;

    const bool regular = feats.interarrival_samples >= 5 && feats.interarrival_cv < t.bot_interarrival_cv_max;
    if (automated_rate(feats, t) || regular) return ActorClass::Automated;
    if (feats.login_attempts_per_min <= 3.0) return ActorClass::Human;
    return ActorClass::Indeterminate;
}

}  // namespace honeynet
