#include <doctest.h>

#include <random>
#include <sstream>

#include "honeynet/capture.hpp"
#include "honeynet/errors.hpp"
#include "oracles.hpp"

using namespace honeynet;

namespace {

PacketMeta tcp_packet(std::uint8_t flags, std::string src = "10.0.0.5", std::string dst = "10.0.0.2") {
    return {1000, std::move(src), std::move(dst), Proto::Tcp, flags};
}

}  // namespace

TEST_CASE("packet filter examples") {
    CHECK(packet_filter(tcp_packet(tcp::SYN)));
    CHECK_FALSE(packet_filter(tcp_packet(tcp::SYN | tcp::ACK)));
    CHECK(packet_filter({0, "10.0.0.5", "10.0.0.2", Proto::Icmp, std::nullopt}));
    CHECK_FALSE(packet_filter(tcp_packet(tcp::ACK)));
    CHECK_FALSE(packet_filter(tcp_packet(0)));
}

TEST_CASE("packet filter matches the boolean formula on every flag subset") {
    for (auto proto : {Proto::Icmp, Proto::Tcp}) {
        for (unsigned flags = 0; flags <= tcp::kAllFlags; ++flags) {
            PacketMeta p{0, "10.0.0.5", "10.0.0.2", proto, std::nullopt};
            if (proto == Proto::Tcp) p.tcp_flags = static_cast<std::uint8_t>(flags);
            CHECK(packet_filter(p) == oracle::capture_filter(proto, static_cast<std::uint8_t>(flags)));
        }
    }
}

TEST_CASE("normalize_packet") {
    const auto c = default_catalog();

    auto in = normalize_packet(tcp_packet(tcp::SYN), c);
    REQUIRE(in);
    REQUIRE(in->is<TcpSyn>());
    CHECK(in->as<TcpSyn>()->direction == Direction::Incoming);

    auto out = normalize_packet(tcp_packet(tcp::SYN, "10.0.0.2", "203.0.113.9"), c);
    REQUIRE(out);
    CHECK(out->as<TcpSyn>()->direction == Direction::Outgoing);

    CHECK_FALSE(normalize_packet(tcp_packet(tcp::SYN | tcp::ACK), c).has_value());

    auto ping = normalize_packet({5, "10.0.0.5", "10.0.0.2", Proto::Icmp, std::nullopt}, c);
    REQUIRE(ping);
    CHECK(ping->is<Icmp>());
    CHECK(ping->ts == 5);

    CHECK_THROWS_AS(normalize_packet(tcp_packet(tcp::SYN, "not-an-ip"), c), ParseError);
}

TEST_CASE("parse_event_line examples") {
    const auto c = default_catalog();

    auto icmp = parse_event_line(R"({"ts":480000,"src":"10.0.0.5","dst":"10.0.0.2","kind":"icmp"})", c);
    CHECK(icmp.is<Icmp>());
    CHECK(icmp.ts == 480000);

    auto http = parse_event_line(
        R"({"ts":0,"src":"10.0.0.5","dst":"10.0.0.2","kind":"http","method":"GET","path":"/index.php","status":200,"ua":"x"})",
        c);
    REQUIRE(http.is<HttpAccess>());
    CHECK(http.as<HttpAccess>()->path == "/index.php");
    CHECK(http.as<HttpAccess>()->status == 200);

    auto login = parse_event_line(
        R"({"ts":2160000,"src":"10.0.0.5","dst":"10.0.0.2","kind":"login","username":"eigentest1@eigen","password":"e1Ars3nal"})",
        c);
    REQUIRE(login.is<LoginAttempt>());
    CHECK(login.as<LoginAttempt>()->username == "eigentest1@eigen");
    CHECK(login.as<LoginAttempt>()->password == "e1Ars3nal");

    auto syn_out = parse_event_line(R"({"ts":1,"src":"10.0.0.2","dst":"10.0.0.9","kind":"syn"})", c);
    CHECK(syn_out.as<TcpSyn>()->direction == Direction::Outgoing);

    auto ssh = parse_event_line(R"({"ts":1,"src":"fd00::5","dst":"fd00::2","kind":"ssh_login","username":"root"})", c);
    CHECK(ssh.as<SshLoginAttempt>()->username == "root");
}

TEST_CASE("parse_event_line errors") {
    const auto c = default_catalog();
    CHECK_THROWS_AS(parse_event_line("{not json", c, 7), ParseError);
    try {
        parse_event_line("{not json", c, 7);
    } catch (const ParseError& e) {
        CHECK(e.line() == 7);
        CHECK(std::string(e.what()).find("line 7") != std::string::npos);
    }

    try {
        parse_event_line(R"({"ts":1,"src":"10.0.0.5","kind":"icmp"})", c, 3);
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        CHECK(e.field() == "dst");
        CHECK(e.line() == 3);
    }

    CHECK_THROWS_AS(parse_event_line(R"({"ts":-1,"src":"10.0.0.5","dst":"10.0.0.2","kind":"icmp"})", c), SchemaError);
    CHECK_THROWS_AS(parse_event_line(R"({"ts":1.5,"src":"10.0.0.5","dst":"10.0.0.2","kind":"icmp"})", c), SchemaError);
    CHECK_THROWS_AS(parse_event_line(R"({"ts":1,"src":"10.0.0","dst":"10.0.0.2","kind":"icmp"})", c), ParseError);
    CHECK_THROWS_AS(parse_event_line(R"({"ts":1,"src":"10.0.0.5","dst":"10.0.0.2","kind":"udp"})", c), SchemaError);
    CHECK_THROWS_AS(
        parse_event_line(R"({"ts":1,"src":"10.0.0.5","dst":"10.0.0.2","kind":"http","method":"GET","path":"x","status":200})", c),
        SchemaError);
    CHECK_THROWS_AS(parse_event_line(R"({"ts":1,"src":"10.0.0.5","dst":"10.0.0.2","kind":"login","username":"a"})", c),
                    SchemaError);
    CHECK_THROWS_AS(parse_event_line("[1,2]", c), ParseError);
}

TEST_CASE("event serialization round trip is byte identical") {
    const auto c = default_catalog();
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        Event e;
        e.ts = static_cast<Millis>(rng() % 10'000'000'000ULL);
        e.src = rng() % 2 ? "10.0.0." + std::to_string(rng() % 255) : "fd00::" + std::to_string(rng() % 999);
        e.dst = "10.0.0.2";
        switch (rng() % 5) {
            case 0: e.kind = Icmp{}; break;
            case 1: e.kind = TcpSyn{}; break;
            case 2: e.kind = HttpAccess{"GET", "/" + oracle::random_token(rng, 12), static_cast<int>(200 + rng() % 300)}; break;
            case 3: e.kind = LoginAttempt{oracle::random_token(rng, 20) + "\"\\\n\t\xc3\xa9", oracle::random_token(rng, 20)}; break;
            default: e.kind = SshLoginAttempt{oracle::random_token(rng, 8)}; break;
        }
        const auto line = serialize_event(e);
        CHECK(line.find('\n') == std::string::npos);
        const auto back = parse_event_line(line, c);
        CHECK(serialize_event(back) == line);
        if (!e.is<TcpSyn>()) CHECK(back == e);
    }
}

TEST_CASE("packet lines") {
    auto p = parse_packet_line(R"({"ts":3,"src":"10.0.0.5","dst":"10.0.0.2","proto":"tcp","flags":["SYN","ACK"]})");
    CHECK(p.proto == Proto::Tcp);
    CHECK(p.tcp_flags == (tcp::SYN | tcp::ACK));
    auto icmp = parse_packet_line(R"({"ts":3,"src":"10.0.0.5","dst":"10.0.0.2","proto":"icmp"})");
    CHECK_FALSE(icmp.tcp_flags.has_value());
    CHECK_THROWS_AS(parse_packet_line(R"({"ts":3,"src":"10.0.0.5","dst":"10.0.0.2","proto":"tcp","flags":["XMAS"]})"),
                    SchemaError);
    CHECK_THROWS_AS(parse_packet_line(R"({"ts":3,"src":"10.0.0.5","dst":"10.0.0.2","proto":"tcp"})"), SchemaError);
}

TEST_CASE("read_stream") {
    const auto c = default_catalog();
    const std::string a = R"({"ts":1,"src":"10.0.0.5","dst":"10.0.0.2","kind":"icmp"})";
    const std::string b = R"({"ts":2,"src":"10.0.0.6","dst":"10.0.0.2","kind":"icmp"})";
    const std::string d = R"({"ts":3,"src":"10.0.0.7","dst":"10.0.0.2","kind":"icmp"})";

    SUBCASE("in order") {
        std::istringstream in(a + "\n" + b + "\n" + d + "\n");
        auto r = read_stream(in, c);
        REQUIRE(r.events.size() == 3);
        CHECK(r.events[0].src == "10.0.0.5");
        CHECK(r.events[2].src == "10.0.0.7");
        CHECK(r.events[1].seq == 1);
    }
    SUBCASE("out of order sorts stably") {
        const std::string tie = R"({"ts":1,"src":"10.0.0.9","dst":"10.0.0.2","kind":"icmp"})";
        std::istringstream in(d + "\n" + a + "\n" + b + "\n" + tie + "\n");
        auto r = read_stream(in, c);
        REQUIRE(r.events.size() == 4);
        CHECK(r.events[0].src == "10.0.0.5");
        CHECK(r.events[1].src == "10.0.0.9");
        CHECK(r.events[2].ts == 2);
        CHECK(r.events[3].ts == 3);
        CHECK(r.events[3].seq == 0);
        for (std::size_t i = 1; i < r.events.size(); ++i) CHECK(r.events[i - 1].ts <= r.events[i].ts);
    }
    SUBCASE("empty input") {
        std::istringstream in("");
        auto r = read_stream(in, c);
        CHECK(r.events.empty());
        CHECK(r.skipped == 0);
    }
    SUBCASE("strict mode reports the line") {
        std::istringstream in(a + "\n\n{oops\n" + b + "\n");
        try {
            read_stream(in, c);
            FAIL("expected parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
        }
    }
    SUBCASE("lenient mode skips and counts") {
        std::istringstream in(a + "\n{oops\n" + R"({"ts":1})" + "\n" + b + "\n");
        auto r = read_stream(in, c, {.lenient = true});
        CHECK(r.events.size() == 2);
        CHECK(r.skipped == 2);
        CHECK(r.lines_read == 4);
    }
}
