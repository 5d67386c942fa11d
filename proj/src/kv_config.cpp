#include "honeynet/kv_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "honeynet/errors.hpp"

namespace honeynet {
namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::string join(const auto& items) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += ", ";
        out += s;
    }
    return out;
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(std::istream& in) {
    KeyValueConfig cfg;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(n) + ": expected key = value");
        }
        auto key = trim(std::string_view(body).substr(0, eq));
        if (key.empty()) throw ConfigError("config line " + std::to_string(n) + ": empty key");
        cfg.values_[key] = trim(std::string_view(body).substr(eq + 1));
    }
    return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    return parse(in);
}

const std::string& KeyValueConfig::get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("missing config key: " + key);
    return it->second;
}

std::string KeyValueConfig::get_or(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

std::vector<std::string> KeyValueConfig::get_list(const std::string& key) const {
    std::vector<std::string> out;
    auto it = values_.find(key);
    if (it == values_.end()) return out;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto t = trim(item);
        if (!t.empty()) out.push_back(std::move(t));
    }
    return out;
}

long long KeyValueConfig::get_int(const std::string& key, long long fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    long long v = 0;
    const auto& s = it->second;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) {
        throw ConfigError("config key " + key + ": expected integer, got '" + s + "'");
    }
    return v;
}

double KeyValueConfig::get_real(const std::string& key, double fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        std::size_t used = 0;
        double v = std::stod(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key " + key + ": expected number, got '" + it->second + "'");
    }
}

HoneytokenCatalog catalog_from_config(const KeyValueConfig& cfg) {
    HoneytokenCatalog c;
    for (auto& a : cfg.get_list("honeypot_addrs")) c.honeypot_addrs.insert(a);
    for (auto& p : cfg.get_list("index_paths")) c.index_paths.insert(p);
    for (auto& p : cfg.get_list("disallowed_paths")) c.disallowed_paths.insert(p);
    c.hidden_link_path = cfg.get("hidden_link_path");
    c.token_username = cfg.get("token_username");
    c.token_password = cfg.get("token_password");
    c.expected_domain_suffixes = cfg.get_list("expected_domain_suffixes");
    if (c.honeypot_addrs.empty()) throw ConfigError("missing config key: honeypot_addrs");
    if (auto v = validate_catalog(c)) {
        throw ConfigError("invalid catalog (" + v->invariant + "): " + v->message);
    }
    return c;
}

RateThresholds thresholds_from_config(const KeyValueConfig& cfg) {
    RateThresholds t;
    t.human_max_requests_per_min = cfg.get_real("human_max_requests_per_min", t.human_max_requests_per_min);
    t.human_max_chars_per_sec = cfg.get_real("human_max_chars_per_sec", t.human_max_chars_per_sec);
    t.bot_interarrival_secs = cfg.get_real("bot_interarrival_secs", t.bot_interarrival_secs);
    t.bot_interarrival_cv_max = cfg.get_real("bot_interarrival_cv_max", t.bot_interarrival_cv_max);
    t.brute_force_min_attempts = cfg.get_int("brute_force_min_attempts", t.brute_force_min_attempts);
    t.brute_force_window_secs = cfg.get_int("brute_force_window_secs", t.brute_force_window_secs);
    if (auto bad = validate_thresholds(t)) throw ConfigError("threshold must be positive: " + *bad);
    return t;
}

std::string catalog_to_config(const HoneytokenCatalog& c) {
    std::ostringstream out;
    out << "honeypot_addrs = " << join(c.honeypot_addrs) << '\n'
        << "index_paths = " << join(c.index_paths) << '\n'
        << "hidden_link_path = " << c.hidden_link_path << '\n'
        << "disallowed_paths = " << join(c.disallowed_paths) << '\n'
        << "token_username = " << c.token_username << '\n'
        << "expected_domain_suffixes = " << join(c.expected_domain_suffixes) << '\n'
        << "token_password = " << c.token_password << '\n';
    return out.str();
}

}  // namespace honeynet
