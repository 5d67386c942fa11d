#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "honeynet/catalog.hpp"
#include "honeynet/event.hpp"
#include "honeynet/kv_config.hpp"

namespace httplib {
class Server;
}

namespace honeynet {

struct ServerConfig {
    std::string bind_host = "127.0.0.1";
    int bind_port = 8080;
    HoneytokenCatalog catalog = default_catalog();
    std::int64_t login_delay_min_ms = 300;
    std::int64_t login_delay_max_ms = 1500;
    std::filesystem::path event_sink_path = "events.ndjson";
    std::optional<std::uint64_t> rng_seed;
    std::string login_path = "/index.php";
    std::size_t max_body_bytes = 16 * 1024;
};

/// Catalog keys plus bind_addr (host:port, [v6]:port), login_delay_min_ms, login_delay_max_ms,
/// event_sink_path, rng_seed, login_path, max_body_bytes.
ServerConfig server_config_from(const KeyValueConfig& cfg);
std::optional<std::string> validate_server_config(const ServerConfig& cfg);

/// Login page carrying the honeytoken comment and the invisible link.
std::string render_index(const HoneytokenCatalog& c, std::string_view login_path = "/index.php");
std::string render_robots(const HoneytokenCatalog& c);

/// Append-only NDJSON event file. Appends are serialized so lines never interleave.
/// A failed open or write is counted, never thrown.
class EventSink {
public:
    explicit EventSink(std::filesystem::path path);

    bool append(const Event& e);
    void flush();

    bool is_open() const;
    std::uint64_t written() const noexcept { return written_.load(); }
    std::uint64_t errors() const noexcept { return errors_.load(); }
    const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
    mutable std::mutex mu_;
    std::ofstream out_;
    std::atomic<std::uint64_t> written_{0};
    std::atomic<std::uint64_t> errors_{0};
};

struct HttpRequest {
    std::string method;
    std::string path;
    std::string body;
    std::string src;
    std::string dst;
};

struct HttpResponse {
    int status = 200;
    std::string content_type = "text/html; charset=utf-8";
    std::string body;
};

/// Routing and logging for the deception surface, independent of the transport.
class Honeypot {
public:
    using Sleeper = std::function<void(std::chrono::milliseconds)>;

    struct Outcome {
        HttpResponse response;
        Event event;
        std::optional<std::int64_t> login_delay_ms;           // drawn delay
        std::optional<std::int64_t> measured_login_delay_ms;  // observed, whole milliseconds
    };

    Honeypot(ServerConfig cfg, EventSink& sink, Sleeper sleeper = {});

    /// Serves one request and appends exactly one event to the sink.
    Outcome handle_request(const HttpRequest& req, Millis now);

    const ServerConfig& config() const noexcept { return cfg_; }
    std::uint64_t sink_errors() const noexcept { return sink_.errors(); }

private:
    std::int64_t draw_delay();

    ServerConfig cfg_;
    EventSink& sink_;
    Sleeper sleeper_;
    std::string index_html_;
    std::string robots_txt_;
    std::mutex rng_mu_;
    std::mt19937_64 rng_;
};

/// HTTP/1.1 transport around a Honeypot.
class HoneypotServer {
public:
    explicit HoneypotServer(ServerConfig cfg);
    ~HoneypotServer();

    HoneypotServer(const HoneypotServer&) = delete;
    HoneypotServer& operator=(const HoneypotServer&) = delete;

    /// Binds the configured address; port 0 picks a free port. False on failure.
    bool bind();
    int port() const noexcept { return port_; }
    /// Blocks until stop().
    bool listen();
    void stop();
    void wait_until_ready() const;

    EventSink& sink() noexcept { return sink_; }
    Honeypot& honeypot() noexcept { return honeypot_; }

    /// Called after every served request, from the worker thread. Set before listen().
    void on_outcome(std::function<void(const Honeypot::Outcome&)> f) { observer_ = std::move(f); }

private:
    ServerConfig cfg_;
    EventSink sink_;
    Honeypot honeypot_;
    std::unique_ptr<httplib::Server> http_;
    std::function<void(const Honeypot::Outcome&)> observer_;
    int port_ = -1;
};

Millis now_millis();

}  // namespace honeynet
