#include "honeynet/server.hpp"

#include <httplib.h>

#include <sstream>
#include <thread>

#include "honeynet/capture.hpp"
#include "honeynet/errors.hpp"

namespace honeynet {
namespace {

std::string escape_html(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

constexpr std::string_view kPageBackground = "#ffffff";

const char* kLoginFailed =
    "<!DOCTYPE html>\n<html><head><title>Sign in</title></head>\n"
    "<body><p>Invalid email or password.</p><p><a href=\"/\">Try again</a></p></body></html>\n";

const char* kNotFound =
    "<!DOCTYPE html>\n<html><head><title>404 Not Found</title></head>\n"
    "<body><h1>Not Found</h1></body></html>\n";

const char* kTooLarge =
    "<!DOCTYPE html>\n<html><head><title>413 Payload Too Large</title></head>\n"
    "<body><h1>Payload Too Large</h1></body></html>\n";

std::string decoy_page(std::string_view path) {
    const auto p = escape_html(path);
    return "<!DOCTYPE html>\n<html><head><title>Index of " + p + "</title></head>\n<body><h1>Index of " + p +
           "</h1><hr><pre><a href=\"../\">../</a>\n</pre><hr></body></html>\n";
}

const char* kHiddenDecoy =
    "<!DOCTYPE html>\n<html><head><title>Test login</title></head>\n"
    "<body><h1>Test login</h1><p>This page is under construction.</p></body></html>\n";

// Coarse sleep, then yield up to the deadline so timer slack does not stretch the delay.
void hold_for(std::chrono::milliseconds d) {
    using clock = std::chrono::steady_clock;
    constexpr auto kWakeMargin = std::chrono::milliseconds(2);
    const auto deadline = clock::now() + d;
    if (d > kWakeMargin) std::this_thread::sleep_until(deadline - kWakeMargin);
    while (clock::now() < deadline) std::this_thread::yield();
}

std::pair<std::string, int> split_bind_addr(const std::string& s) {
    const auto colon = s.rfind(':');
    if (colon == std::string::npos) throw ConfigError("bind_addr must be host:port: " + s);
    auto host = s.substr(0, colon);
    if (host.size() >= 2 && host.front() == '[' && host.back() == ']') host = host.substr(1, host.size() - 2);
    int port = 0;
    try {
        std::size_t used = 0;
        port = std::stoi(s.substr(colon + 1), &used);
        if (used != s.size() - colon - 1) throw std::invalid_argument("port");
    } catch (const std::exception&) {
        throw ConfigError("bind_addr has a bad port: " + s);
    }
    return {host, port};
}

}  // namespace

Millis now_millis() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

ServerConfig server_config_from(const KeyValueConfig& cfg) {
    ServerConfig s;
    s.catalog = catalog_from_config(cfg);
    if (cfg.has("bind_addr")) std::tie(s.bind_host, s.bind_port) = split_bind_addr(cfg.get("bind_addr"));
    s.login_delay_min_ms = cfg.get_int("login_delay_min_ms", s.login_delay_min_ms);
    s.login_delay_max_ms = cfg.get_int("login_delay_max_ms", s.login_delay_max_ms);
    s.event_sink_path = cfg.get_or("event_sink_path", s.event_sink_path.string());
    if (cfg.has("rng_seed")) s.rng_seed = static_cast<std::uint64_t>(cfg.get_int("rng_seed", 0));
    s.login_path = cfg.get_or("login_path", s.login_path);
    s.max_body_bytes = static_cast<std::size_t>(cfg.get_int("max_body_bytes", static_cast<long long>(s.max_body_bytes)));
    if (auto err = validate_server_config(s)) throw ConfigError(*err);
    return s;
}

std::optional<std::string> validate_server_config(const ServerConfig& cfg) {
    if (auto v = validate_catalog(cfg.catalog)) return "invalid catalog (" + v->invariant + "): " + v->message;
    if (cfg.login_delay_min_ms < 0 || cfg.login_delay_min_ms > cfg.login_delay_max_ms) {
        return "login delay bounds must satisfy 0 <= min <= max";
    }
    if (cfg.bind_port < 0 || cfg.bind_port > 65535) return "bind port out of range";
    if (cfg.login_path.empty() || cfg.login_path.front() != '/') return "login_path must begin with '/'";
    return std::nullopt;
}

std::string render_index(const HoneytokenCatalog& c, std::string_view login_path) {
    std::ostringstream html;
    html << "<!DOCTYPE html>\n"
         << "<html>\n<head>\n<meta charset=\"utf-8\">\n<title>Staff portal</title>\n</head>\n"
         << "<body style=\"background-color:" << kPageBackground << ";color:#222222\">\n"
         << "<h1>Staff portal</h1>\n"
         << "<form method=\"post\" action=\"" << escape_html(login_path) << "\">\n"
         << "<label>Email <input type=\"text\" name=\"email\"></label>\n"
         << "<label>Password <input type=\"password\" name=\"password\"></label>\n"
         << "<input type=\"submit\" value=\"Sign in\">\n"
         << "</form>\n"
         << "<!-- test login user: " << c.token_username << " psw: " << c.token_password << " -->\n"
         << "<a href=\"" << escape_html(c.hidden_link_path) << "\" style=\"color:" << kPageBackground
         << ";background-color:" << kPageBackground << ";text-decoration:none\">test login</a>\n"
         << "</body>\n</html>\n";
    return html.str();
}

std::string render_robots(const HoneytokenCatalog& c) {
    std::string out = "User-agent: *\n";
    for (const auto& p : c.disallowed_paths) out += "Disallow: " + p + "\n";
    return out;
}

EventSink::EventSink(std::filesystem::path path) : path_(std::move(path)) {
    out_.open(path_, std::ios::out | std::ios::app);
}

bool EventSink::is_open() const {
    std::lock_guard lock(mu_);
    return out_.is_open() && out_.good();
}

bool EventSink::append(const Event& e) {
    const auto line = serialize_event(e) + "\n";
    std::lock_guard lock(mu_);
    if (!out_.is_open()) {
        ++errors_;
        return false;
    }
    out_.write(line.data(), static_cast<std::streamsize>(line.size()));
    out_.flush();
    if (!out_) {
        out_.clear();
        ++errors_;
        return false;
    }
    ++written_;
    return true;
}

void EventSink::flush() {
    std::lock_guard lock(mu_);
    if (out_.is_open()) out_.flush();
}

Honeypot::Honeypot(ServerConfig cfg, EventSink& sink, Sleeper sleeper)
    : cfg_(std::move(cfg)),
      sink_(sink),
      sleeper_(sleeper ? std::move(sleeper) : Sleeper(hold_for)),
      index_html_(render_index(cfg_.catalog, cfg_.login_path)),
      robots_txt_(render_robots(cfg_.catalog)),
      rng_(cfg_.rng_seed ? *cfg_.rng_seed : std::random_device{}()) {}

std::int64_t Honeypot::draw_delay() {
    const auto span = static_cast<std::uint64_t>(cfg_.login_delay_max_ms - cfg_.login_delay_min_ms) + 1;
    std::lock_guard lock(rng_mu_);
    return cfg_.login_delay_min_ms + static_cast<std::int64_t>(rng_() % span);
}

Honeypot::Outcome Honeypot::handle_request(const HttpRequest& req, Millis now) {
    Outcome out;
    out.event.ts = now;
    out.event.src = req.src;
    out.event.dst = req.dst;
    auto& res = out.response;
    const bool is_get = req.method == "GET" || req.method == "HEAD";
    const auto& c = cfg_.catalog;

    if (req.body.size() > cfg_.max_body_bytes) {
        res = {413, "text/html; charset=utf-8", kTooLarge};
    } else if (req.method == "POST" && req.path == cfg_.login_path) {
        httplib::Params form;
        httplib::detail::parse_query_text(req.body, form);
        auto field = [&](const char* name) {
            auto it = form.find(name);
            return it == form.end() ? std::string{} : it->second;
        };
        out.event.kind = LoginAttempt{field("email"), field("password")};

        const auto delay = draw_delay();
        const auto t0 = std::chrono::steady_clock::now();
        sleeper_(std::chrono::milliseconds(delay));
        const auto slept = std::chrono::steady_clock::now() - t0;
        out.login_delay_ms = delay;
        out.measured_login_delay_ms = std::chrono::duration_cast<std::chrono::milliseconds>(slept).count();
        res = {401, "text/html; charset=utf-8", kLoginFailed};
    } else if (is_get && c.is_index(req.path)) {
        res = {200, "text/html; charset=utf-8", index_html_};
    } else if (is_get && req.path == "/robots.txt") {
        res = {200, "text/plain; charset=utf-8", robots_txt_};
    } else if (is_get && c.is_hidden_link(req.path)) {
        res = {200, "text/html; charset=utf-8", kHiddenDecoy};
    } else if (is_get && c.is_disallowed(req.path)) {
        res = {200, "text/html; charset=utf-8", decoy_page(req.path)};
    } else {
        res = {404, "text/html; charset=utf-8", kNotFound};
    }

    if (!out.event.is<LoginAttempt>()) out.event.kind = HttpAccess{req.method, req.path, res.status};
    sink_.append(out.event);
    return out;
}

HoneypotServer::HoneypotServer(ServerConfig cfg)
    : cfg_(std::move(cfg)),
      sink_(cfg_.event_sink_path),
      honeypot_(cfg_, sink_),
      http_(std::make_unique<httplib::Server>()) {
    auto handler = [this](const httplib::Request& req, httplib::Response& res) {
        HttpRequest r{req.method, req.path, req.body, req.remote_addr, req.local_addr};
        if (!is_ip_literal(r.src)) r.src = "0.0.0.0";
        if (!is_ip_literal(r.dst)) r.dst = cfg_.bind_host;
        auto out = honeypot_.handle_request(r, now_millis());
        if (observer_) observer_(out);
        res.status = out.response.status;
        res.set_content(out.response.body, out.response.content_type);
    };
    const char* any = R"(/.*)";
    http_->Get(any, handler);
    http_->Post(any, handler);
    http_->Put(any, handler);
    http_->Delete(any, handler);
    http_->Patch(any, handler);
    http_->Options(any, handler);
}

HoneypotServer::~HoneypotServer() { stop(); }

bool HoneypotServer::bind() {
    if (cfg_.bind_port == 0) {
        port_ = http_->bind_to_any_port(cfg_.bind_host);
        return port_ > 0;
    }
    if (!http_->bind_to_port(cfg_.bind_host, cfg_.bind_port)) return false;
    port_ = cfg_.bind_port;
    return true;
}

bool HoneypotServer::listen() {
    const bool ok = http_->listen_after_bind();
    sink_.flush();
    return ok;
}

void HoneypotServer::stop() {
    if (http_) http_->stop();
    sink_.flush();
}

void HoneypotServer::wait_until_ready() const { http_->wait_until_ready(); }

}  // namespace honeynet
