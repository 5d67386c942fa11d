#include "honeynet/catalog.hpp"

#include <algorithm>

#include "honeynet/event.hpp"

namespace honeynet {

bool path_within(std::string_view path, std::string_view prefix) {
    if (prefix.empty()) return false;
    if (path == prefix) return true;
    if (path.size() <= prefix.size() || path.substr(0, prefix.size()) != prefix) return false;
    return prefix.back() == '/' || path[prefix.size()] == '/';
}

bool HoneytokenCatalog::is_honeypot(std::string_view addr) const {
    return honeypot_addrs.find(std::string(addr)) != honeypot_addrs.end();
}

bool HoneytokenCatalog::is_index(std::string_view path) const {
    return index_paths.find(std::string(path)) != index_paths.end();
}

bool HoneytokenCatalog::is_disallowed(std::string_view path) const {
    return std::any_of(disallowed_paths.begin(), disallowed_paths.end(),
                       [&](const std::string& d) { return path_within(path, d); });
}

std::optional<CatalogViolation> validate_catalog(const HoneytokenCatalog& c) {
    for (const auto& a : c.honeypot_addrs) {
        if (!is_ip_literal(a)) return CatalogViolation{"honeypot_addrs", "not an IP literal: " + a};
    }
    auto bad_path = [](const std::string& p) { return p.empty() || p.front() != '/'; };
    for (const auto& p : c.index_paths) {
        if (bad_path(p)) return CatalogViolation{"index_paths", "path must begin with '/': " + p};
    }
    for (const auto& p : c.disallowed_paths) {
        if (bad_path(p)) return CatalogViolation{"disallowed_paths", "path must begin with '/': " + p};
    }
    if (bad_path(c.hidden_link_path)) {
        return CatalogViolation{"hidden_link_path", "path must begin with '/': " + c.hidden_link_path};
    }

    const auto at = c.token_username.find('@');
    if (at == std::string::npos || c.token_username.find('@', at + 1) != std::string::npos) {
        return CatalogViolation{"token_username",
                                "must contain exactly one '@': " + c.token_username};
    }
    if (c.token_username.find('.', at + 1) != std::string::npos) {
        return CatalogViolation{"token_username",
                                "domain after '@' must be incomplete (no '.'): " + c.token_username};
    }
    if (c.token_password.empty()) {
        return CatalogViolation{"token_password", "must not be empty"};
    }
    if (c.disallowed_paths.count(c.hidden_link_path) || c.index_paths.count(c.hidden_link_path)) {
        return CatalogViolation{"hidden_link_path",
                                "must not be an index or disallowed path: " + c.hidden_link_path};
    }
    return std::nullopt;
}

HoneytokenCatalog default_catalog() {
    HoneytokenCatalog c;
    c.honeypot_addrs = {"10.0.0.2"};
    c.index_paths = {"/", "/index.php"};
    c.hidden_link_path = "/testlogin/index.php";
    c.disallowed_paths = {"/admin"};
    c.token_username = "eigentest1@eigen";
    c.expected_domain_suffixes = {".co"};
    c.token_password = "e1Ars3nal";
    return c;
}

}  // namespace honeynet
