#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "honeynet/catalog.hpp"
#include "honeynet/event.hpp"

namespace honeynet {

enum class Proto : std::uint8_t { Icmp, Tcp };

namespace tcp {
inline constexpr std::uint8_t FIN = 0x01;
inline constexpr std::uint8_t SYN = 0x02;
inline constexpr std::uint8_t RST = 0x04;
inline constexpr std::uint8_t PSH = 0x08;
inline constexpr std::uint8_t ACK = 0x10;
inline constexpr std::uint8_t URG = 0x20;
inline constexpr std::uint8_t kAllFlags = 0x3f;
}  // namespace tcp

/// Packet header metadata as produced by a capture adapter.
struct PacketMeta {
    Millis ts = 0;
    std::string src;
    std::string dst;
    Proto proto = Proto::Icmp;
    std::optional<std::uint8_t> tcp_flags;  // present iff proto == Tcp
};

/// Capture filter: `icmp || (tcp-syn set and tcp-ack clear)`.
bool packet_filter(const PacketMeta& p) noexcept;

/// Filtered packets yield nullopt. Throws ParseError on a malformed address.
std::optional<Event> normalize_packet(const PacketMeta& p, const HoneytokenCatalog& c);

/// Single NDJSON line of the event schema. Field order is fixed: ts, src, dst, kind, kind fields.
std::string serialize_event(const Event& e);

/// Parses one NDJSON event line. SYN direction is inferred from the catalog's honeypot addresses.
/// Throws ParseError (bad JSON / IP) or SchemaError (missing or mistyped field).
Event parse_event_line(std::string_view line, const HoneytokenCatalog& c, std::size_t line_no = 0);

/// Packet metadata line: {"ts":..,"src":..,"dst":..,"proto":"icmp"|"tcp","flags":["SYN",..]}.
PacketMeta parse_packet_line(std::string_view line, std::size_t line_no = 0);

struct StreamOptions {
    bool lenient = false;  // skip and count bad lines instead of throwing
};

struct StreamResult {
    std::vector<Event> events;  // stable-sorted by ts; seq is the input ordinal
    std::size_t lines_read = 0;
    std::size_t skipped = 0;
};

StreamResult read_stream(std::istream& in, const HoneytokenCatalog& c, StreamOptions opts = {});
/// "-" reads stdin.
StreamResult read_stream(const std::filesystem::path& path, const HoneytokenCatalog& c,
                         StreamOptions opts = {});

}  // namespace honeynet
