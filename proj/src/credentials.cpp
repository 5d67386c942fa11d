#include "honeynet/credentials.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <vector>

namespace honeynet {
namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return out;
}

}  // namespace

std::size_t levenshtein(std::string_view a, std::string_view b) {
    if (a.size() < b.size()) std::swap(a, b);
    if (b.empty()) return a.size();

    std::vector<std::size_t> prev(b.size() + 1);
    std::vector<std::size_t> cur(b.size() + 1);
    std::iota(prev.begin(), prev.end(), std::size_t{0});

    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t subst = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, subst});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

bool iequals(std::string_view a, std::string_view b) noexcept {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](unsigned char x, unsigned char y) {
               return std::tolower(x) == std::tolower(y);
           });
}

std::string_view to_string(MatchKind k) noexcept {
    switch (k) {
        case MatchKind::Exact: return "Exact";
        case MatchKind::DomainCompletion: return "DomainCompletion";
        case MatchKind::TypoVariation: return "TypoVariation";
        case MatchKind::UsernameReuse: return "UsernameReuse";
        case MatchKind::Unrelated: return "Unrelated";
    }
    return "?";
}

CredentialMatch credential_match(std::string_view username, std::string_view password,
                                 const HoneytokenCatalog& c) {
    const bool user_exact = iequals(username, c.token_username);
    const bool user_completed = std::any_of(
        c.expected_domain_suffixes.begin(), c.expected_domain_suffixes.end(),
        [&](const std::string& suffix) { return iequals(username, c.token_username + suffix); });
    const bool user_matches = user_exact || user_completed;
    const bool password_equal = password == c.token_password;

    if (user_exact && password_equal) return {MatchKind::Exact, 0};
    if (user_completed && password_equal) return {MatchKind::DomainCompletion, std::nullopt};

    if (user_matches) {
        const auto d = levenshtein(password, c.token_password);
        if (d <= 2) return {MatchKind::TypoVariation, d};
        return {MatchKind::UsernameReuse, d};
    }
    if (password_equal) {
        const auto d = levenshtein(lower(username), lower(c.token_username));
        if (d >= 1 && d <= 2) return {MatchKind::TypoVariation, d};
    }
    return {MatchKind::Unrelated, std::nullopt};
}

}  // namespace honeynet
