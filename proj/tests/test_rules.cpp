#include <doctest.h>

#include <algorithm>
#include <random>

#include "honeynet/brute_force.hpp"
#include "honeynet/rules.hpp"

using namespace honeynet;

namespace {

const HoneytokenCatalog kCatalog = default_catalog();

Event ev(EventKind k, Millis ts = 1'000, std::string src = "10.0.0.5") {
    return {ts, std::move(src), "10.0.0.2", std::move(k)};
}

RateFeatures at_rate(double per_min, double logins_per_min = 0.0) {
    RateFeatures f;
    f.requests_per_min = per_min;
    f.login_attempts_per_min = logins_per_min;
    return f;
}

Detection only(const std::vector<Detection>& ds) {
    REQUIRE(ds.size() == 1);
    return ds.front();
}

}  // namespace

TEST_CASE("rule table rows") {
    const RateFeatures calm = at_rate(1);

    auto d = only(match_rules(ev(TcpSyn{Direction::Incoming}), kCatalog, calm));
    CHECK(d.rule == RuleId::R1);
    CHECK(d.severity == Severity::VeryLow);
    CHECK(d.actor == ActorClass::Automated);

    CHECK(only(match_rules(ev(Icmp{}), kCatalog, calm)).rule == RuleId::R1);

    d = only(match_rules(ev(HttpAccess{"GET", "/index.php", 200}), kCatalog, calm));
    CHECK(d.rule == RuleId::R2);
    CHECK(d.severity == Severity::Low);

    d = only(match_rules(ev(HttpAccess{"GET", "/testlogin/index.php", 200}), kCatalog, calm));
    CHECK(d.rule == RuleId::R3);
    CHECK(d.severity == Severity::MediumLow);
    CHECK(d.actor == ActorClass::Indeterminate);

    d = only(match_rules(ev(SshLoginAttempt{"root"}), kCatalog, calm));
    CHECK(d.rule == RuleId::R4);
    CHECK(d.severity == Severity::MediumLow);

    d = only(match_rules(ev(LoginAttempt{"admin", "123456"}), kCatalog, calm));
    CHECK(d.rule == RuleId::R5);
    CHECK(d.severity == Severity::MediumHigh);

    d = only(match_rules(ev(HttpAccess{"GET", "/admin", 200}), kCatalog, calm));
    CHECK(d.rule == RuleId::R6);
    CHECK(d.severity == Severity::MediumHigh);

    d = only(match_rules(ev(LoginAttempt{"eigentest1@eigen", "e1Ars3nal"}), kCatalog, calm));
    CHECK(d.rule == RuleId::R7);
    CHECK(d.severity == Severity::High);
    CHECK(d.actor == ActorClass::Human);

    d = only(match_rules(ev(LoginAttempt{"eigentest1@eigen.co", "e1Ars3nal"}), kCatalog, calm));
    CHECK(d.rule == RuleId::R8);
    CHECK(d.severity == Severity::HighHigh);
    CHECK(d.actor == ActorClass::Human);

    d = only(match_rules(ev(TcpSyn{Direction::Outgoing}, 1, "10.0.0.2"), kCatalog, calm));
    CHECK(d.rule == RuleId::R9);
    CHECK(d.severity == Severity::HighHigh);

    CHECK(match_rules(ev(HttpAccess{"GET", "/nothing-here", 404}), kCatalog, calm).empty());
    CHECK(match_rules(ev(HttpAccess{"GET", "/robots.txt", 200}), kCatalog, calm).empty());
}

TEST_CASE("disallowed access is downgraded at automated rates") {
    auto d = only(match_rules(ev(HttpAccess{"GET", "/admin/x", 200}), kCatalog, at_rate(200)));
    CHECK(d.rule == RuleId::R6);
    CHECK(d.severity == Severity::Low);
    CHECK(d.actor == ActorClass::Automated);

    // the threshold is strict
    d = only(match_rules(ev(HttpAccess{"GET", "/admin/x", 200}), kCatalog, at_rate(10)));
    CHECK(d.severity == Severity::MediumHigh);
}

TEST_CASE("highest severity wins when several rows match") {
    auto c = kCatalog;
    c.index_paths.insert("/admin/index.php");  // index and disallowed at once
    c.disallowed_paths.insert("/testlogin");   // hidden link under a disallowed folder

    std::mt19937_64 rng(5);
    const std::vector<std::string> paths = {"/admin/index.php", "/testlogin/index.php", "/admin", "/index.php", "/"};
    for (int i = 0; i < 200; ++i) {
        const auto& path = paths[rng() % paths.size()];
        const auto feats = at_rate(static_cast<double>(rng() % 300));
        const auto e = ev(HttpAccess{"GET", path, 200});
        const auto all = all_rule_matches(e, c, feats);
        const auto chosen = match_rules(e, c, feats);
        REQUIRE(chosen.size() == (all.empty() ? 0u : 1u));
        if (all.empty()) continue;
        const auto top = std::max_element(all.begin(), all.end(), [](auto& a, auto& b) {
                             return a.severity < b.severity;
                         })->severity;
        CHECK(chosen.front().severity == top);
    }

    const auto calm = at_rate(1);
    auto d = only(match_rules(ev(HttpAccess{"GET", "/admin/index.php", 200}), c, calm));
    CHECK(d.rule == RuleId::R6);
    CHECK(all_rule_matches(ev(HttpAccess{"GET", "/admin/index.php", 200}), c, calm).size() == 2);
    // downgraded R6 ties with R2 at Low; the lower rule number is kept
    d = only(match_rules(ev(HttpAccess{"GET", "/admin/index.php", 200}), c, at_rate(100)));
    CHECK(d.rule == RuleId::R2);
    d = only(match_rules(ev(HttpAccess{"GET", "/testlogin/index.php", 200}), c, calm));
    CHECK(d.rule == RuleId::R6);
}

TEST_CASE("classify_actor") {
    const RateThresholds t;
    auto r5 = only(match_rules(ev(LoginAttempt{"admin@eigen.co", "admin"}), kCatalog, at_rate(1)));

    SUBCASE("three manual attempts over three minutes") {
        CHECK(classify_actor(r5, at_rate(1.0, 1.0), t) == ActorClass::Human);
    }
    SUBCASE("hidden link hit inside a fast crawl") {
        auto r3 = only(match_rules(ev(HttpAccess{"GET", "/testlogin/index.php", 200}), kCatalog, at_rate(200)));
        CHECK(classify_actor(r3, at_rate(200), t) == ActorClass::Automated);
    }
    SUBCASE("regular cadence counts as automation even at low rate") {
        RateFeatures f = at_rate(6);
        f.interarrival_samples = 5;
        f.interarrival_cv = 0.02;
        CHECK(classify_actor(r5, f, t) == ActorClass::Automated);
        f.interarrival_samples = 4;
        CHECK(classify_actor(r5, f, t) == ActorClass::Human);
    }
    SUBCASE("many logins at a human request rate stays indeterminate") {
        CHECK(classify_actor(r5, at_rate(8, 5), t) == ActorClass::Indeterminate);
    }
    SUBCASE("variations are human at any rate") {
        auto r8 = only(match_rules(ev(LoginAttempt{"eigentest1@eigen.co", "e1Ars3nal"}), kCatalog, at_rate(500)));
        CHECK(classify_actor(r8, at_rate(500, 400), t) == ActorClass::Human);
        auto r7 = only(match_rules(ev(LoginAttempt{"eigentest1@eigen", "e1Ars3nal"}), kCatalog, at_rate(500)));
        RateFeatures f = at_rate(500, 400);
        f.interarrival_samples = 50;
        CHECK(classify_actor(r7, f, t) == ActorClass::Human);
    }
    SUBCASE("resolved actors are left alone") {
        auto r1 = only(match_rules(ev(Icmp{}), kCatalog, at_rate(0)));
        CHECK(classify_actor(r1, at_rate(0), t) == ActorClass::Automated);
    }
}

namespace {

std::vector<Event> logins(std::size_t n, Millis begin, Millis step, auto&& creds) {
    std::vector<Event> out;
    for (std::size_t i = 0; i < n; ++i) {
        auto [u, p] = creds(i);
        Event e = ev(LoginAttempt{u, p}, begin + static_cast<Millis>(i) * step);
        e.seq = i;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

TEST_CASE("brute force: honeytoken-seeded burst") {
    // 1406 attempts over 31 minutes, four in five on the planted username
    const auto events = logins(1406, 0, 31 * 60'000 / 1406, [](std::size_t i) {
        return std::pair<std::string, std::string>{i % 5 == 4 ? "admin@eigen.co" : "eigentest1@eigen",
                                                   "pw" + std::to_string(i)};
    });
    const auto found = detect_brute_force(events, kCatalog);
    REQUIRE(found.size() == 1);
    const auto& d = found.front();
    CHECK(d.rule == RuleId::R10);
    CHECK(d.severity == Severity::High);
    CHECK(d.actor == ActorClass::HumanDirectedAutomation);
    CHECK(d.source_event_ids.size() == 1406);
    CHECK(d.ts == events[99].ts);  // fires at the 100th attempt
}

TEST_CASE("brute force: generic dictionary is plain automation") {
    const auto events = logins(300, 0, 1'000, [](std::size_t i) {
        return std::pair<std::string, std::string>{"user" + std::to_string(i), "123456"};
    });
    auto d = detect_brute_force_once(events, kCatalog);
    REQUIRE(d);
    CHECK(d->actor == ActorClass::Automated);
}

TEST_CASE("brute force: slow or small streams do not fire") {
    // 45 attempts over 90 minutes
    const auto slow = logins(45, 0, 2 * 60'000, [](std::size_t) {
        return std::pair<std::string, std::string>{"", ""};
    });
    CHECK(detect_brute_force(slow, kCatalog).empty());
    CHECK(detect_brute_force(std::vector<Event>{}, kCatalog).empty());

    // 150 attempts spread so that no 600 s window holds 100
    const auto spread = logins(150, 0, 7'000, [](std::size_t) {
        return std::pair<std::string, std::string>{"a", "b"};
    });
    CHECK(detect_brute_force(spread, kCatalog).empty());
}

TEST_CASE("brute force: a gap longer than the window separates bursts") {
    auto creds = [](std::size_t) { return std::pair<std::string, std::string>{"x", "y"}; };
    auto events = logins(120, 0, 1'000, creds);
    auto second = logins(130, 120'000 + 601'000, 1'000, creds);
    for (auto& e : second) events.push_back(e);
    const auto found = detect_brute_force(events, kCatalog);
    REQUIRE(found.size() == 2);
    CHECK(found[0].source_event_ids.size() == 120);
    CHECK(found[1].source_event_ids.size() == 130);

    // exactly one window apart stays one burst
    auto joined = logins(120, 0, 1'000, creds);
    for (auto& e : logins(130, 119'000 + 600'000, 1'000, creds)) joined.push_back(e);
    CHECK(detect_brute_force(joined, kCatalog).size() == 1);
}

TEST_CASE("brute force never fires below the minimum attempt count") {
    std::mt19937_64 rng(77);
    const RateThresholds t;
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = rng() % static_cast<std::uint64_t>(t.brute_force_min_attempts);
        const auto events = logins(n, 0, static_cast<Millis>(rng() % 50), [](std::size_t) {
            return std::pair<std::string, std::string>{"eigentest1@eigen", "x"};
        });
        CHECK(detect_brute_force(events, kCatalog, t).empty());
    }
}
