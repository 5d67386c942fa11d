#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace honeynet {

/// Malformed input line (bad JSON, bad IP literal, bad enum value).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed JSON that is missing a required field or carries a field of the wrong type.
class SchemaError : public ParseError {
public:
    SchemaError(std::size_t line, std::string field, const std::string& what)
        : ParseError(line, what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Timestamp regression where ordered input is required.
class OrderError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace honeynet
