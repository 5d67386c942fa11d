#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "honeynet/catalog.hpp"
#include "honeynet/thresholds.hpp"

namespace honeynet {

/// Flat `key = value` document. lines starting with '#' are comments; list values are comma separated.
class KeyValueConfig {
public:
    static KeyValueConfig parse(std::istream& in);
    static KeyValueConfig load(const std::filesystem::path& path);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    const std::string& get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
    std::vector<std::string> get_list(const std::string& key) const;
    long long get_int(const std::string& key, long long fallback) const;
    double get_real(const std::string& key, double fallback) const;

    const std::map<std::string, std::string>& values() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

/// Reads the catalog keys; throws ConfigError if a required key is missing or the result is invalid.
HoneytokenCatalog catalog_from_config(const KeyValueConfig& cfg);
RateThresholds thresholds_from_config(const KeyValueConfig& cfg);

std::string catalog_to_config(const HoneytokenCatalog& c);

}  // namespace honeynet
