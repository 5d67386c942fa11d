#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "honeynet/catalog.hpp"
#include "honeynet/detection.hpp"
#include "honeynet/event.hpp"
#include "honeynet/severity.hpp"

namespace honeynet {

enum class Stage : std::uint8_t {
    Recon,
    WebScan,
    LoginExploration,
    ManualLoginTest,
    Fuzzing,
    HoneytokenCredentialUse,
    HiddenLinkAccess,
    BruteForce,
    Breach,
};

std::string_view to_string(Stage s) noexcept;

struct AttackCounters {
    std::uint64_t icmp = 0;
    std::uint64_t syn_in = 0;
    std::uint64_t syn_out = 0;
    std::uint64_t index_access = 0;
    std::uint64_t hidden_link = 0;
    std::uint64_t disallowed_access = 0;
    std::uint64_t login_attempts = 0;
    std::uint64_t blank_logins = 0;  // empty username and password
    std::uint64_t honeytoken_logins = 0;
    std::uint64_t variation_logins = 0;
    std::uint64_t brute_force_logins = 0;  // attempts inside R10 bursts

    friend bool operator==(const AttackCounters&, const AttackCounters&) = default;
};

/// Facts about the triggering traffic that a Detection alone does not carry.
struct StageContext {
    bool automated_rate = false;
    bool blank_login = false;
};

/// Per-source accumulator driven by the attack stage diagram.
struct AttackState {
    std::string src;
    AttackCounters counters;
    std::vector<Stage> stages_seen;  // first-occurrence order
    std::optional<Severity> max_severity;
    std::map<PriorityBand, Millis> band_first_seen;
    std::map<ActorClass, std::uint64_t> actor_tally;
    bool structured_attack = false;
    Millis last_detection_ts = 0;

    /// Counter update for one event of this source.
    void observe(const Event& e, const HoneytokenCatalog& c);

    /// Severity, band, stage and actor update. Throws OrderError on a ts regression and
    /// std::invalid_argument when the detection belongs to another source.
    void apply(const Detection& d, StageContext ctx = {});

    bool has_stage(Stage s) const;

    /// Human > HumanDirectedAutomation > Automated > Indeterminate, over all detections seen.
    ActorClass actor_verdict() const;
    std::optional<PriorityBand> priority_band() const;
};

AttackState update_state(AttackState s, const Detection& d, StageContext ctx = {});

}  // namespace honeynet
