#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "honeynet/attack_sim.hpp"
#include "honeynet/credentials.hpp"

using namespace honeynet;

namespace {

const HoneytokenCatalog kCatalog = default_catalog();

std::vector<const LoginAttempt*> logins_between(const std::vector<Event>& trace, double from_min, double to_min) {
    std::vector<const LoginAttempt*> out;
    for (const auto& e : trace) {
        const double m = static_cast<double>(e.ts) / 60'000.0;
        if (m <= from_min || m > to_min) continue;
        if (auto l = e.as<LoginAttempt>()) out.push_back(l);
    }
    return out;
}

}  // namespace

TEST_CASE("scenario names") {
    for (auto k : {ScenarioKind::AutomatedScan, ScenarioKind::HumanExplorer, ScenarioKind::PentestReplay}) {
        CHECK(parse_scenario_kind(to_string(k)) == k);
        CHECK_FALSE(scenario_notes(k).empty());
    }
    CHECK_FALSE(parse_scenario_kind("bogus"));
}

TEST_CASE("replay checkpoints") {
    const auto trace = generate({.kind = ScenarioKind::PentestReplay, .seed = 1});
    CHECK(std::is_sorted(trace.begin(), trace.end(), [](auto& a, auto& b) { return a.ts < b.ts; }));
    for (std::size_t i = 0; i < trace.size(); ++i) CHECK(trace[i].seq == i);

    const auto at13 = checkpoint_counts(trace, kCatalog, 0, replay::kStage2EndMin);
    CHECK(at13.syn == 173);
    CHECK(at13.disallowed == 10);

    const auto at14 = checkpoint_counts(trace, kCatalog, 0, replay::kStage3EndMin);
    CHECK(at14.syn == 216);
    CHECK(at14.index == 35);
    CHECK(at14.disallowed == 47);
    CHECK(at14.blank_logins == 1);

    const auto at35 = checkpoint_counts(trace, kCatalog, 0, replay::kStage5EndMin);
    CHECK(at35.syn == 783);
    CHECK(at35.blank_logins == 11);
    CHECK(at35.disallowed == 12'004);

    const auto total = checkpoint_counts(trace, kCatalog, 0, replay::kEndMin);
    CHECK(total.disallowed == 56'114);
    CHECK(total.icmp == 1);
    CHECK(total.hidden == 1);
    CHECK(total.logins >= 1'412);
    CHECK(checkpoint_counts(trace, kCatalog, 0, 10'000) == total);
    CHECK(checkpoint_counts(trace, kCatalog, 0, 0) == CheckpointCounts{});
}

TEST_CASE("replay credential stages") {
    const auto trace = generate({.kind = ScenarioKind::PentestReplay, .seed = 9});

    const auto manual = logins_between(trace, 14, 17);
    REQUIRE(manual.size() == 2);
    CHECK(manual[0]->username == "admin@eigen.co");
    CHECK(manual[1]->username == "test@eigen.co");

    const auto planted = logins_between(trace, 35, 38);
    REQUIRE(planted.size() == 3);
    CHECK(credential_match(planted[0]->username, planted[0]->password, kCatalog).kind == MatchKind::TypoVariation);
    CHECK(credential_match(planted[1]->username, planted[1]->password, kCatalog).kind == MatchKind::Exact);
    CHECK(credential_match(planted[2]->username, planted[2]->password, kCatalog).kind ==
          MatchKind::DomainCompletion);

    const auto burst = logins_between(trace, 66, 97);
    CHECK(burst.size() == replay::kBruteForceAttempts);
    std::size_t derived = 0;
    bool liverpool = false;
    for (auto l : burst) {
        CHECK(l->password != kCatalog.token_password);
        if (credential_match(l->username, l->password, kCatalog).honeytoken_derived()) ++derived;
        if (l->password == "Liverpool") liverpool = true;
    }
    CHECK(liverpool);
    CHECK(derived * 2 >= burst.size());
}

TEST_CASE("same seed, same trace") {
    for (auto k : {ScenarioKind::AutomatedScan, ScenarioKind::HumanExplorer, ScenarioKind::PentestReplay}) {
        CHECK(generate({.kind = k, .seed = 42}) == generate({.kind = k, .seed = 42}));
    }
    CHECK(generate({.kind = ScenarioKind::AutomatedScan, .seed = 1}) !=
          generate({.kind = ScenarioKind::AutomatedScan, .seed = 2}));
}

TEST_CASE("start timestamp shifts the whole trace") {
    const auto a = generate({.kind = ScenarioKind::HumanExplorer, .seed = 4});
    const auto b = generate({.kind = ScenarioKind::HumanExplorer, .seed = 4, .start_ts = 1'700'000'000'000});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i].ts - a[i].ts == 1'700'000'000'000);
}

TEST_CASE("automated scan shape") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto trace = generate({.kind = ScenarioKind::AutomatedScan, .seed = seed});
        const auto counts = checkpoint_counts(trace, kCatalog, 0, 1e9);
        CHECK(counts.hidden == 0);
        CHECK(counts.blank_logins == 11);
        const auto requests = std::count_if(trace.begin(), trace.end(), [](const Event& e) {
            return e.is<HttpAccess>() || e.is<LoginAttempt>();
        });
        CHECK(requests >= 400);
        CHECK(requests <= 900);
    }
}

TEST_CASE("human explorer shape") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto trace = generate({.kind = ScenarioKind::HumanExplorer, .seed = seed});
        for (std::size_t i = 1; i < trace.size(); ++i) {
            const auto gap = trace[i].ts - trace[i - 1].ts;
            CHECK(gap >= 8'000);
            CHECK(gap <= 45'000);
        }
        const auto counts = checkpoint_counts(trace, kCatalog, 0, 1e9);
        CHECK(counts.logins == 2);
    }
}

TEST_CASE("catalog problems are reported") {
    Scenario s;
    s.catalog.token_password.clear();
    CHECK_THROWS_AS(generate(s), std::invalid_argument);

    Scenario scan{.kind = ScenarioKind::AutomatedScan};
    scan.catalog.disallowed_paths.clear();
    CHECK_THROWS_AS(generate(scan), std::invalid_argument);
}
