#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace honeynet {

using Millis = std::int64_t;

enum class Direction : std::uint8_t { Incoming, Outgoing };

struct Icmp {
    friend bool operator==(const Icmp&, const Icmp&) = default;
};

struct TcpSyn {
    Direction direction = Direction::Incoming;
    friend bool operator==(const TcpSyn&, const TcpSyn&) = default;
};

struct HttpAccess {
    std::string method;
    std::string path;
    int status = 0;
    friend bool operator==(const HttpAccess&, const HttpAccess&) = default;
};

struct LoginAttempt {
    std::string username;
    std::string password;
    friend bool operator==(const LoginAttempt&, const LoginAttempt&) = default;
};

// Reserved: no SSH sensor ships, but the rule table carries a row for it.
struct SshLoginAttempt {
    std::string username;
    friend bool operator==(const SshLoginAttempt&, const SshLoginAttempt&) = default;
};

using EventKind = std::variant<Icmp, TcpSyn, HttpAccess, LoginAttempt, SshLoginAttempt>;

/// One normalized interaction with the honeypot.
struct Event {
    Millis ts = 0;
    std::string src;
    std::string dst;
    EventKind kind;
    std::uint64_t seq = 0;  // position in the input stream; not serialized

    template <typename T>
    const T* as() const noexcept {
        return std::get_if<T>(&kind);
    }

    template <typename T>
    bool is() const noexcept {
        return std::holds_alternative<T>(kind);
    }

    friend bool operator==(const Event& a, const Event& b) {
        return a.ts == b.ts && a.src == b.src && a.dst == b.dst && a.kind == b.kind;
    }
};

/// Wire name of the event kind ("icmp", "syn", "http", "login", "ssh_login").
std::string_view kind_name(const EventKind& k) noexcept;

bool is_ip_literal(std::string_view s);

}  // namespace honeynet
