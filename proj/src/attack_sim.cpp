#include "honeynet/attack_sim.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

namespace honeynet {
namespace {

constexpr Millis kMinute = 60'000;

// mt19937_64 output is fully specified; std distributions are not, so draw by hand.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t n) { return n ? engine_() % n : 0; }
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

constexpr std::array kWordlist = {
    "backup", "config", "test",    "images",  "css",     "js",      "uploads", "phpmyadmin",
    "db",     "old",    "tmp",     "private", "includes", "api",    "login",   "wp-admin",
    "cgi-bin", "logs",  "data",    "files",   "panel",   "secure",  "user",    "server-status",
    "shell",  "manager", "static", "install", "setup",   "dev",     "cache",   "lib",
};

constexpr std::array kPasswords = {
    "123456",   "password", "12345678", "qwerty",  "abc123",   "111111",  "letmein", "welcome",
    "monkey",   "dragon",   "football", "iloveyou", "admin",   "princess", "sunshine", "master",
    "Arsenal",  "Chelsea",  "Everton",  "Tottenham", "Fulham", "Leeds",   "Celtic",  "Rangers",
    "arsenal1", "chelsea1", "Passw0rd", "changeme", "secret",  "trustno1", "eigen",   "eigen123",
};

struct Builder {
    const HoneytokenCatalog& catalog;
    std::string attacker;
    std::string honeypot;
    Millis start;
    std::vector<Event> events;

    void icmp(Millis t) { events.push_back({start + t, attacker, honeypot, Icmp{}}); }
    void syn(Millis t) { events.push_back({start + t, attacker, honeypot, TcpSyn{Direction::Incoming}}); }
    void get(Millis t, std::string path) {
        const int status = catalog.is_index(path) || catalog.is_hidden_link(path) ||
                                   catalog.is_disallowed(path) || path == "/robots.txt"
                               ? 200
                               : 404;
        events.push_back({start + t, attacker, honeypot, HttpAccess{"GET", std::move(path), status}});
    }
    void login(Millis t, std::string user, std::string password) {
        events.push_back({start + t, attacker, honeypot, LoginAttempt{std::move(user), std::move(password)}});
    }

    std::vector<Event> finish() {
        std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.ts < b.ts; });
        for (std::size_t i = 0; i < events.size(); ++i) events[i].seq = i;
        return std::move(events);
    }
};

// n sorted offsets in (begin, end], one per equal-width slot with seeded jitter inside the slot.
std::vector<Millis> spread(Rng& rng, std::size_t n, Millis begin, Millis end) {
    std::vector<Millis> out;
    out.reserve(n);
    const auto span = static_cast<double>(end - begin - 1);
    for (std::size_t i = 0; i < n; ++i) {
        const double pos = (static_cast<double>(i) + rng.unit()) / static_cast<double>(n);
        out.push_back(begin + 1 + static_cast<Millis>(span * pos));
    }
    return out;
}

std::string index_path(const HoneytokenCatalog& c) {
    for (const auto& p : c.index_paths) {
        if (p != "/") return p;
    }
    return *c.index_paths.begin();
}

std::string company_domain(const HoneytokenCatalog& c) {
    const auto domain = c.token_username.substr(c.token_username.find('@') + 1);
    return c.expected_domain_suffixes.empty() ? domain : domain + c.expected_domain_suffixes.front();
}

std::string decoy_word(Rng& rng, const HoneytokenCatalog& c) {
    for (;;) {
        std::string p = "/";
        p += kWordlist[rng.below(kWordlist.size())];
        if (!c.is_index(p) && !c.is_hidden_link(p) && !c.is_disallowed(p)) return p;
    }
}

std::string disallowed_hit(Rng& rng, const HoneytokenCatalog& c, bool fuzz_subfolders) {
    auto it = c.disallowed_paths.begin();
    std::advance(it, static_cast<long>(rng.below(c.disallowed_paths.size())));
    std::string base = *it;
    if (!fuzz_subfolders) return rng.below(2) ? base : (base.back() == '/' ? base : base + "/");
    if (base.back() != '/') base += '/';
    base += kWordlist[rng.below(kWordlist.size())];
    if (rng.below(3) == 0) {
        base += '/';
        base += kWordlist[rng.below(kWordlist.size())];
    }
    return base;
}

std::string random_source(Rng& rng, const HoneytokenCatalog& c, std::string_view prefix) {
    for (;;) {
        auto ip = std::string(prefix) + std::to_string(rng.between(1, 254)) + "." + std::to_string(rng.between(1, 254));
        if (!c.is_honeypot(ip)) return ip;
    }
}

enum class Hit { Index, Disallowed, Hidden, Robots, Other };

// Shuffled mix of web requests laid over sorted timestamps.
void web_sweep(Builder& b, Rng& rng, Millis begin, Millis end, std::size_t index, std::size_t disallowed,
               std::size_t other, bool fuzz_subfolders, std::size_t hidden = 0, std::size_t robots = 0) {
    std::vector<Hit> hits;
    hits.insert(hits.end(), index, Hit::Index);
    hits.insert(hits.end(), disallowed, Hit::Disallowed);
    hits.insert(hits.end(), hidden, Hit::Hidden);
    hits.insert(hits.end(), robots, Hit::Robots);
    hits.insert(hits.end(), other, Hit::Other);
    rng.shuffle(hits);
    // A crawler only reaches the hidden link after it has parsed pages, mid-sweep.
    if (hidden > 0) {
        auto it = std::find(hits.begin(), hits.end(), Hit::Hidden);
        std::iter_swap(it, hits.begin() + static_cast<long>(hits.size() / 2));
    }

    const auto times = spread(rng, hits.size(), begin, end);
    const auto home = index_path(b.catalog);
    for (std::size_t i = 0; i < hits.size(); ++i) {
        switch (hits[i]) {
            case Hit::Index: b.get(times[i], home); break;
            case Hit::Disallowed: b.get(times[i], disallowed_hit(rng, b.catalog, fuzz_subfolders)); break;
            case Hit::Hidden: b.get(times[i], b.catalog.hidden_link_path); break;
            case Hit::Robots: b.get(times[i], "/robots.txt"); break;
            case Hit::Other: b.get(times[i], decoy_word(rng, b.catalog)); break;
        }
    }
}

std::string typo_of(const std::string& password) {
    std::string t = password;
    const std::size_t pos = t.size() > 1 ? 1 : 0;
    t[pos] = t[pos] == 'I' ? 'l' : 'I';
    return t;
}

std::vector<Event> pentest_replay(const Scenario& s) {
    const auto& c = s.catalog;
    Rng rng(s.seed);
    Builder b{c, std::string(kReplayAttacker), *c.honeypot_addrs.begin(), s.start_ts, {}};
    const auto at = [](double minutes) { return static_cast<Millis>(minutes * kMinute); };

    // Stage 1: one ping, then a SYN flood.
    b.icmp(at(7.5));
    for (auto t : spread(rng, 120, at(7.5), at(8))) b.syn(t);

    // Stage 2: crawler sweep; 173 SYN and 10 disallowed hits by +13.
    for (auto t : spread(rng, 53, at(8), at(13))) b.syn(t);
    web_sweep(b, rng, at(8), at(13), 5, 10, 184, false, 0, 1);

    // Stage 3: 216 SYN, 35 index, 47 disallowed, one blank login by +14.
    for (auto t : spread(rng, 43, at(13), at(14))) b.syn(t);
    web_sweep(b, rng, at(13), at(14), 30, 37, 40, false);
    b.login(at(13.5), "", "");

    // Stage 4: scanning pauses; a person tries guessable credentials (3 logins in total).
    const auto domain = company_domain(c);
    b.get(at(15), index_path(c));
    b.login(at(15) + 20'000, "admin@" + domain, "admin");
    b.login(at(16) + 10'000, "test@" + domain, "test123");

    // Stage 5: directory fuzzing; 783 SYN, 11 blank logins, 12,004 disallowed hits by +35.
    for (auto t : spread(rng, 567, at(17), at(35))) b.syn(t);
    web_sweep(b, rng, at(17), at(18), 0, 1300, 0, true);
    web_sweep(b, rng, at(18), at(35), 400, 10'657, 1500, true);
    for (auto t : spread(rng, 10, at(17.5), at(34.5))) b.login(t, "", "");

    // Stage 6: the planted comment is read and used: typo, exact, domain completion.
    b.get(at(35) + 40'000, index_path(c));
    b.login(at(36) + 10'000, c.token_username, typo_of(c.token_password));
    b.login(at(36) + 40'000, c.token_username, c.token_password);
    b.login(at(37) + 20'000, c.token_username + (c.expected_domain_suffixes.empty() ? std::string(".com")
                                                                                    : c.expected_domain_suffixes.front()),
            c.token_password);

    // Stage 7: crawler rerun finds the hidden link; fuzzing of the disallowed tree resumes.
    // 56,114 disallowed hits in total.
    web_sweep(b, rng, at(43), at(44), 20, 10, 168, false, 1, 1);
    web_sweep(b, rng, at(44), at(53), 0, 44'100, 0, true);

    // Stage 8: injection-style probe, then a brute force seeded with the planted username.
    b.login(at(54.5), "'@gmail", "' or '1'='1");
    const auto times = spread(rng, replay::kBruteForceAttempts, at(66), at(97));
    const auto liverpool = static_cast<std::size_t>(
        std::lower_bound(times.begin(), times.end(), at(94)) - times.begin());
    const std::array generic = {"admin@" + domain, "administrator@" + domain, "ROOT@" + domain};
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (i == liverpool) {
            b.login(times[i], c.token_username, "Liverpool");
            continue;
        }
        std::string user;
        if (i % 5 == 4) {
            user = generic[rng.below(generic.size())];
        } else if (rng.below(2) == 0 || c.expected_domain_suffixes.empty()) {
            user = c.token_username;
        } else {
            user = c.token_username + c.expected_domain_suffixes[rng.below(c.expected_domain_suffixes.size())];
        }
        const auto round = i / kPasswords.size();
        std::string password = kPasswords[i % kPasswords.size()];
        if (round > 0) password += std::to_string(round);
        if (password == c.token_password) password += "!";
        b.login(times[i], std::move(user), std::move(password));
    }
    return b.finish();
}

std::vector<Event> automated_scan(const Scenario& s) {
    const auto& c = s.catalog;
    Rng rng(s.seed);
    Builder b{c, random_source(rng, c, "10.1."), *c.honeypot_addrs.begin(), s.start_ts, {}};

    b.icmp(0);
    for (auto t : spread(rng, 30, 0, 5'000)) b.syn(t);

    const auto per_min = rng.between(90, 300);
    const auto requests = static_cast<std::size_t>(rng.between(400, 900));
    const double interval = 60'000.0 / static_cast<double>(per_min);

    // Blank form submissions land after the first 100 requests, once the scan is at full rate.
    std::vector<std::size_t> blank_slots;
    for (auto t : spread(rng, 11, 100, static_cast<Millis>(requests) - 1)) {
        blank_slots.push_back(static_cast<std::size_t>(t));
    }

    const auto home = index_path(c);
    double t = 6'000.0;
    std::size_t next_blank = 0;
    for (std::size_t i = 0; i < requests; ++i) {
        t += interval * (0.96 + 0.08 * rng.unit());
        const auto ts = static_cast<Millis>(t);
        if (next_blank < blank_slots.size() && blank_slots[next_blank] == i) {
            b.login(ts, "", "");
            ++next_blank;
            continue;
        }
        const auto pick = rng.below(20);
        if (pick < 2) b.get(ts, home);
        else if (pick < 7) b.get(ts, disallowed_hit(rng, c, rng.below(2) == 0));
        else if (pick == 7) b.get(ts, "/robots.txt");
        else b.get(ts, decoy_word(rng, c));
    }
    return b.finish();
}

std::vector<Event> human_explorer(const Scenario& s) {
    const auto& c = s.catalog;
    Rng rng(s.seed);
    Builder b{c, random_source(rng, c, "192.168."), *c.honeypot_addrs.begin(), s.start_ts, {}};

    Millis t = rng.between(0, 5'000);
    const auto think = [&] { t += rng.between(8'000, 45'000); return t; };

    b.get(t, "/");
    b.get(think(), index_path(c));
    if (rng.below(2)) b.get(think(), "/robots.txt");
    const auto revisits = rng.between(0, 2);
    for (std::int64_t i = 0; i < revisits; ++i) b.get(think(), index_path(c));
    b.login(think(), c.token_username, c.token_password);
    const auto suffix = c.expected_domain_suffixes.empty()
                            ? std::string{}
                            : c.expected_domain_suffixes[rng.below(c.expected_domain_suffixes.size())];
    b.login(think(), c.token_username + suffix, c.token_password);
    return b.finish();
}

}  // namespace

std::string_view to_string(ScenarioKind k) noexcept {
    switch (k) {
        case ScenarioKind::AutomatedScan: return "auto";
        case ScenarioKind::HumanExplorer: return "human";
        case ScenarioKind::PentestReplay: return "replay";
    }
    return "?";
}

std::optional<ScenarioKind> parse_scenario_kind(std::string_view s) noexcept {
    if (s == "auto") return ScenarioKind::AutomatedScan;
    if (s == "human") return ScenarioKind::HumanExplorer;
    if (s == "replay") return ScenarioKind::PentestReplay;
    return std::nullopt;
}

std::vector<Event> generate(const Scenario& s) {
    if (auto v = validate_catalog(s.catalog)) {
        throw std::invalid_argument("invalid catalog (" + v->invariant + "): " + v->message);
    }
    if (s.catalog.honeypot_addrs.empty() || s.catalog.index_paths.empty()) {
        throw std::invalid_argument("scenario needs a honeypot address and an index path");
    }
    switch (s.kind) {
        case ScenarioKind::HumanExplorer:
            return human_explorer(s);
        case ScenarioKind::AutomatedScan:
        case ScenarioKind::PentestReplay:
            if (s.catalog.disallowed_paths.empty()) {
                throw std::invalid_argument("scan scenarios need at least one disallowed path");
            }
            return s.kind == ScenarioKind::AutomatedScan ? automated_scan(s) : pentest_replay(s);
    }
    return {};
}

CheckpointCounts checkpoint_counts(std::span<const Event> trace, const HoneytokenCatalog& c, Millis start_ts,
                                   double minutes) {
    const auto limit = start_ts + static_cast<Millis>(minutes * kMinute);
    CheckpointCounts n;
    for (const auto& e : trace) {
        if (e.ts > limit) continue;
        if (e.is<Icmp>()) {
            ++n.icmp;
        } else if (auto syn = e.as<TcpSyn>()) {
            if (syn->direction == Direction::Incoming) ++n.syn;
        } else if (auto h = e.as<HttpAccess>()) {
            n.index += c.is_index(h->path);
            n.hidden += c.is_hidden_link(h->path);
            n.disallowed += c.is_disallowed(h->path);
        } else if (auto l = e.as<LoginAttempt>()) {
            ++n.logins;
            n.blank_logins += l->username.empty() && l->password.empty();
        }
    }
    return n;
}

std::vector<std::string> scenario_notes(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::PentestReplay:
            return {
                "eight-stage pentest replay from a single attacker address",
                "SYN count is frozen after stage 5 (783); later per-stage SYN totals were not reported",
                "timestamps between reported checkpoints are spread uniformly with seeded jitter",
                "brute-force usernames: 80% honeytoken-derived, 20% generic administrative accounts",
            };
        case ScenarioKind::AutomatedScan:
            return {"high-rate wordlist scan with regular interarrival and 11 blank form submissions"};
        case ScenarioKind::HumanExplorer:
            return {"low-rate browsing; exact honeytoken login followed by a domain-completed variation"};
    }
    return {};
}

}  // namespace honeynet
