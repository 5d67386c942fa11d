#include "honeynet/event.hpp"

#include <arpa/inet.h>

#include <string>

namespace honeynet {

std::string_view kind_name(const EventKind& k) noexcept {
    struct Visitor {
        std::string_view operator()(const Icmp&) const { return "icmp"; }
        std::string_view operator()(const TcpSyn&) const { return "syn"; }
        std::string_view operator()(const HttpAccess&) const { return "http"; }
        std::string_view operator()(const LoginAttempt&) const { return "login"; }
        std::string_view operator()(const SshLoginAttempt&) const { return "ssh_login"; }
    };
    return std::visit(Visitor{}, k);
}

bool is_ip_literal(std::string_view s) {
    std::string buf(s);
    unsigned char addr[16];
    return inet_pton(AF_INET, buf.c_str(), addr) == 1 || inet_pton(AF_INET6, buf.c_str(), addr) == 1;
}

}  // namespace honeynet
