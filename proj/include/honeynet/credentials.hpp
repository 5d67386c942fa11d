#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "honeynet/catalog.hpp"

namespace honeynet {

/// Edit distance (insert/delete/substitute, unit cost), two-row dynamic programme.
std::size_t levenshtein(std::string_view a, std::string_view b);

bool iequals(std::string_view a, std::string_view b) noexcept;

enum class MatchKind : std::uint8_t {
    Exact,
    DomainCompletion,
    TypoVariation,
    UsernameReuse,
    Unrelated,
};

std::string_view to_string(MatchKind k) noexcept;

struct CredentialMatch {
    MatchKind kind = MatchKind::Unrelated;
    std::optional<std::size_t> edit_distance;

    /// Anything but Unrelated: the attempt was built from the planted credentials.
    bool honeytoken_derived() const noexcept { return kind != MatchKind::Unrelated; }
    bool is_variation() const noexcept {
        return kind == MatchKind::DomainCompletion || kind == MatchKind::TypoVariation ||
               kind == MatchKind::UsernameReuse;
    }

    friend bool operator==(const CredentialMatch&, const CredentialMatch&) = default;
};

/// Usernames compare case-insensitively, passwords case-sensitively.
/// Precedence: Exact > DomainCompletion > TypoVariation > UsernameReuse > Unrelated.
CredentialMatch credential_match(std::string_view username, std::string_view password,
                                 const HoneytokenCatalog& c);

}  // namespace honeynet
