#include "honeynet/capture.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "honeynet/errors.hpp"

namespace honeynet {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& require(const json& obj, const char* field, std::size_t line) {
    auto it = obj.find(field);
    if (it == obj.end()) {
        throw SchemaError(line, field, std::string("missing required field '") + field + "'");
    }
    return *it;
}

std::string require_string(const json& obj, const char* field, std::size_t line) {
    const auto& v = require(obj, field, line);
    if (!v.is_string()) {
        throw SchemaError(line, field, std::string("field '") + field + "' must be a string");
    }
    return v.get<std::string>();
}

std::int64_t require_int(const json& obj, const char* field, std::size_t line) {
    const auto& v = require(obj, field, line);
    if (!v.is_number_integer()) {
        throw SchemaError(line, field, std::string("field '") + field + "' must be an integer");
    }
    return v.get<std::int64_t>();
}

std::string require_ip(const json& obj, const char* field, std::size_t line) {
    auto s = require_string(obj, field, line);
    if (!is_ip_literal(s)) throw ParseError(line, std::string("bad IP address in '") + field + "': " + s);
    return s;
}

json parse_object(std::string_view line, std::size_t line_no) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw ParseError(line_no, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError(line_no, "expected a JSON object");
    return j;
}

bool blank(std::string_view s) {
    return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

bool packet_filter(const PacketMeta& p) noexcept {
    if (p.proto == Proto::Icmp) return true;
    const auto flags = p.tcp_flags.value_or(0);
    return (flags & tcp::SYN) != 0 && (flags & tcp::ACK) == 0;
}

std::optional<Event> normalize_packet(const PacketMeta& p, const HoneytokenCatalog& c) {
    if (!is_ip_literal(p.src)) throw ParseError(0, "bad source address: " + p.src);
    if (!is_ip_literal(p.dst)) throw ParseError(0, "bad destination address: " + p.dst);
    if (!packet_filter(p)) return std::nullopt;

    Event e{.ts = p.ts, .src = p.src, .dst = p.dst, .kind = Icmp{}};
    if (p.proto == Proto::Tcp) {
        e.kind = TcpSyn{c.is_honeypot(p.src) ? Direction::Outgoing : Direction::Incoming};
    }
    return e;
}

std::string serialize_event(const Event& e) {
    ordered_json j;
    j["ts"] = e.ts;
    j["src"] = e.src;
    j["dst"] = e.dst;
    j["kind"] = kind_name(e.kind);
    if (auto h = e.as<HttpAccess>()) {
        j["method"] = h->method;
        j["path"] = h->path;
        j["status"] = h->status;
    } else if (auto l = e.as<LoginAttempt>()) {
        j["username"] = l->username;
        j["password"] = l->password;
    } else if (auto s = e.as<SshLoginAttempt>()) {
        j["username"] = s->username;
    }
    return j.dump();
}

Event parse_event_line(std::string_view line, const HoneytokenCatalog& c, std::size_t line_no) {
    const auto j = parse_object(line, line_no);

    Event e;
    e.ts = require_int(j, "ts", line_no);
    if (e.ts < 0) throw SchemaError(line_no, "ts", "field 'ts' must be non-negative");
    e.src = require_ip(j, "src", line_no);
    e.dst = require_ip(j, "dst", line_no);

    const auto kind = require_string(j, "kind", line_no);
    if (kind == "icmp") {
        e.kind = Icmp{};
    } else if (kind == "syn") {
        e.kind = TcpSyn{c.is_honeypot(e.src) ? Direction::Outgoing : Direction::Incoming};
    } else if (kind == "http") {
        HttpAccess h;
        h.method = require_string(j, "method", line_no);
        h.path = require_string(j, "path", line_no);
        h.status = static_cast<int>(require_int(j, "status", line_no));
        if (h.path.empty() || h.path.front() != '/') {
            throw SchemaError(line_no, "path", "field 'path' must begin with '/'");
        }
        e.kind = std::move(h);
    } else if (kind == "login") {
        e.kind = LoginAttempt{require_string(j, "username", line_no), require_string(j, "password", line_no)};
    } else if (kind == "ssh_login") {
        e.kind = SshLoginAttempt{require_string(j, "username", line_no)};
    } else {
        throw SchemaError(line_no, "kind", "unknown event kind '" + kind + "'");
    }
    return e;
}

PacketMeta parse_packet_line(std::string_view line, std::size_t line_no) {
    const auto j = parse_object(line, line_no);

    PacketMeta p;
    p.ts = require_int(j, "ts", line_no);
    if (p.ts < 0) throw SchemaError(line_no, "ts", "field 'ts' must be non-negative");
    p.src = require_ip(j, "src", line_no);
    p.dst = require_ip(j, "dst", line_no);
    const auto proto = require_string(j, "proto", line_no);
    if (proto == "icmp") {
        p.proto = Proto::Icmp;
        return p;
    }
    if (proto != "tcp") throw SchemaError(line_no, "proto", "unknown protocol '" + proto + "'");

    p.proto = Proto::Tcp;
    const auto& flags = require(j, "flags", line_no);
    if (!flags.is_array()) throw SchemaError(line_no, "flags", "field 'flags' must be an array");
    std::uint8_t bits = 0;
    for (const auto& f : flags) {
        const auto name = f.is_string() ? f.get<std::string>() : std::string{};
        if (name == "SYN") bits |= tcp::SYN;
        else if (name == "ACK") bits |= tcp::ACK;
        else if (name == "FIN") bits |= tcp::FIN;
        else if (name == "RST") bits |= tcp::RST;
        else if (name == "PSH") bits |= tcp::PSH;
        else if (name == "URG") bits |= tcp::URG;
        else throw SchemaError(line_no, "flags", "unknown TCP flag '" + name + "'");
    }
    p.tcp_flags = bits;
    return p;
}

StreamResult read_stream(std::istream& in, const HoneytokenCatalog& c, StreamOptions opts) {
    StreamResult out;
    std::string line;
    std::uint64_t seq = 0;
    while (std::getline(in, line)) {
        ++out.lines_read;
        if (blank(line)) continue;
        try {
            auto e = parse_event_line(line, c, out.lines_read);
            e.seq = seq++;
            out.events.push_back(std::move(e));
        } catch (const ParseError&) {
            if (!opts.lenient) throw;
            ++out.skipped;
        }
    }
    std::stable_sort(out.events.begin(), out.events.end(),
                     [](const Event& a, const Event& b) { return a.ts < b.ts; });
    return out;
}

StreamResult read_stream(const std::filesystem::path& path, const HoneytokenCatalog& c,
                         StreamOptions opts) {
    if (path == "-") return read_stream(std::cin, c, opts);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input: " + path.string());
    return read_stream(in, c, opts);
}

}  // namespace honeynet
