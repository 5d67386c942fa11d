#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace honeynet {

/// The planted deception artifacts and the honeypot identity.
struct HoneytokenCatalog {
    std::set<std::string> honeypot_addrs;
    std::set<std::string> index_paths;
    std::string hidden_link_path;
    std::set<std::string> disallowed_paths;   // robots.txt Disallow entries
    std::string token_username;               // incomplete email: no TLD after '@'
    std::vector<std::string> expected_domain_suffixes;
    std::string token_password;

    bool is_honeypot(std::string_view addr) const;
    bool is_index(std::string_view path) const;
    bool is_hidden_link(std::string_view path) const { return path == hidden_link_path; }
    /// Path equals a Disallow entry or lies beneath one.
    bool is_disallowed(std::string_view path) const;
};

struct CatalogViolation {
    std::string invariant;
    std::string message;
};

/// Empty when every catalog invariant holds, otherwise the first violation.
std::optional<CatalogViolation> validate_catalog(const HoneytokenCatalog& c);

/// The deployment used in the pentest case study.
HoneytokenCatalog default_catalog();

/// True when path equals prefix or continues it with a '/' boundary.
bool path_within(std::string_view path, std::string_view prefix);

}  // namespace honeynet
