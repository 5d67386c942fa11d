// honeynet: serve the honeypot, simulate attack traces, classify event streams.

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <signal.h>
#include <unistd.h>

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <nlohmann/json.hpp>

#include "honeynet/attack_sim.hpp"
#include "honeynet/capture.hpp"
#include "honeynet/errors.hpp"
#include "honeynet/kv_config.hpp"
#include "honeynet/pipeline.hpp"
#include "honeynet/report.hpp"
#include "honeynet/server.hpp"

namespace {

// sysexits.h
constexpr int kExUsage = 64;
constexpr int kExDataErr = 65;
constexpr int kExNoInput = 66;
constexpr int kExUnavailable = 69;
constexpr int kExCantCreate = 73;
constexpr int kExIoErr = 74;
constexpr int kExConfig = 78;

void setup_logging() {
    auto logger = spdlog::stderr_color_mt("honeynet");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::info);
    if (const char* env = std::getenv("HONEYNET_LOG_LEVEL")) {
        spdlog::set_level(spdlog::level::from_str(env));
    }
}

honeynet::HoneytokenCatalog load_catalog(const std::string& path) {
    if (path.empty()) return honeynet::default_catalog();
    return honeynet::catalog_from_config(honeynet::KeyValueConfig::load(path));
}

int cmd_serve(const std::string& config_path) {
    honeynet::ServerConfig cfg;
    try {
        cfg = honeynet::server_config_from(honeynet::KeyValueConfig::load(config_path));
    } catch (const honeynet::ConfigError& e) {
        spdlog::error("{}", e.what());
        return kExConfig;
    }

    // Signals are taken synchronously on a dedicated thread; block them before any other thread starts.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    honeynet::HoneypotServer server(cfg);
    if (!server.sink().is_open()) {
        spdlog::error("cannot open event sink {}", cfg.event_sink_path.string());
        return kExCantCreate;
    }
    if (!server.bind()) {
        spdlog::error("cannot bind {}:{}", cfg.bind_host, cfg.bind_port);
        return kExUnavailable;
    }
    spdlog::info("honeypot listening on {}:{}, events -> {}", cfg.bind_host, server.port(),
                 cfg.event_sink_path.string());

    std::atomic<bool> signalled{false};
    std::thread waiter([&] {
        int sig = 0;
        sigwait(&signals, &sig);
        signalled = true;
        spdlog::info("signal {} received, shutting down", sig);
        server.stop();
    });
    const bool clean = server.listen();
    // listen() can also return on its own; wake the waiter so it can be joined.
    if (!signalled) kill(getpid(), SIGTERM);
    waiter.join();
    server.sink().flush();
    spdlog::info("served {} events ({} sink errors)", server.sink().written(), server.sink().errors());
    return clean || signalled ? 0 : kExIoErr;
}

int cmd_simulate(const std::string& kind_name, std::uint64_t seed, const std::string& out_path,
                 const std::string& catalog_path, std::int64_t start_ts) {
    const auto kind = honeynet::parse_scenario_kind(kind_name);
    if (!kind) {
        spdlog::error("unknown scenario kind '{}' (expected auto, human or replay)", kind_name);
        return kExUsage;
    }
    honeynet::Scenario scenario{*kind, seed, honeynet::default_catalog(), start_ts};
    try {
        scenario.catalog = load_catalog(catalog_path);
    } catch (const honeynet::ConfigError& e) {
        spdlog::error("{}", e.what());
        return kExConfig;
    }

    const auto trace = honeynet::generate(scenario);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        spdlog::error("cannot write {}", out_path);
        return kExCantCreate;
    }
    for (const auto& e : trace) out << honeynet::serialize_event(e) << '\n';
    if (!out.flush()) return kExIoErr;

    nlohmann::ordered_json meta;
    meta["kind"] = honeynet::to_string(*kind);
    meta["seed"] = seed;
    meta["start_ts"] = start_ts;
    meta["events"] = trace.size();
    meta["notes"] = honeynet::scenario_notes(*kind);
    std::ofstream(out_path + ".meta.json") << meta.dump(2) << '\n';

    std::cout << trace.size() << " events written to " << out_path << '\n';
    return 0;
}

int cmd_classify(const std::string& in_path, const std::string& catalog_path, const std::string& out_path,
                 const std::string& format, bool lenient, const std::string& report_path,
                 const std::string& thresholds_path) {
    honeynet::HoneytokenCatalog catalog;
    honeynet::RateThresholds thresholds;
    try {
        catalog = load_catalog(catalog_path);
        if (!thresholds_path.empty()) {
            thresholds = honeynet::thresholds_from_config(honeynet::KeyValueConfig::load(thresholds_path));
        }
    } catch (const honeynet::ConfigError& e) {
        spdlog::error("{}", e.what());
        return kExConfig;
    }

    honeynet::StreamResult stream;
    try {
        stream = honeynet::read_stream(std::filesystem::path(in_path), catalog, {.lenient = lenient});
    } catch (const honeynet::ParseError& e) {
        spdlog::error("{}: {}", in_path, e.what());
        return kExDataErr;
    } catch (const std::runtime_error& e) {
        spdlog::error("{}", e.what());
        return kExNoInput;
    }
    if (stream.skipped) spdlog::warn("skipped {} malformed lines", stream.skipped);
    spdlog::info("read {} events", stream.events.size());

    const auto result = honeynet::run_pipeline(stream.events, catalog, thresholds);
    {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            spdlog::error("cannot write {}", out_path);
            return kExCantCreate;
        }
        for (const auto& d : result.detections) out << honeynet::serialize_detection(d) << '\n';
        if (!out.flush()) return kExIoErr;
    }

    const auto report = honeynet::build_report(stream.events, result, catalog);
    const auto rendered = format == "json" ? honeynet::render_report_json(report) : honeynet::render_report_text(report);
    std::cout << rendered;
    if (!report_path.empty()) {
        std::ofstream rep(report_path, std::ios::binary);
        rep << rendered;
        if (!rep.flush()) return kExIoErr;
    }
    return honeynet::band_exit_code(report);
}

int cmd_capture(const std::string& in_path, const std::string& catalog_path, const std::string& out_path) {
    honeynet::HoneytokenCatalog catalog;
    try {
        catalog = load_catalog(catalog_path);
    } catch (const honeynet::ConfigError& e) {
        spdlog::error("{}", e.what());
        return kExConfig;
    }
    std::ifstream in(in_path);
    if (!in) {
        spdlog::error("cannot open {}", in_path);
        return kExNoInput;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        spdlog::error("cannot write {}", out_path);
        return kExCantCreate;
    }
    std::string line;
    std::size_t n = 0, kept = 0;
    try {
        while (std::getline(in, line)) {
            ++n;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            if (auto e = honeynet::normalize_packet(honeynet::parse_packet_line(line, n), catalog)) {
                out << honeynet::serialize_event(*e) << '\n';
                ++kept;
            }
        }
    } catch (const honeynet::ParseError& e) {
        spdlog::error("{}: {}", in_path, e.what());
        return kExDataErr;
    }
    std::cout << kept << " of " << n << " packets passed the capture filter\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    setup_logging();

    CLI::App app{"Honeytoken deception framework: honeypot server, attack simulator, intrusion classifier"};
    app.require_subcommand(1);

    std::string config_path;
    auto* serve = app.add_subcommand("serve", "Run the instrumented honeypot web service");
    serve->add_option("--config", config_path, "Server config file (key = value)")->required();

    std::string kind;
    std::uint64_t seed = 1;
    std::string sim_out;
    std::string sim_catalog;
    std::int64_t start_ts = 0;
    auto* simulate = app.add_subcommand("simulate", "Write a synthetic attack trace as NDJSON events");
    simulate->add_option("--kind", kind, "auto | human | replay")->required();
    simulate->add_option("--seed", seed, "RNG seed");
    simulate->add_option("--out", sim_out, "Output trace path")->required();
    simulate->add_option("--catalog", sim_catalog, "Catalog file (defaults to the built-in deployment)");
    simulate->add_option("--start-ts", start_ts, "Trace start, ms since epoch");

    std::string in_path;
    std::string catalog_path;
    std::string out_path;
    std::string format = "text";
    bool lenient = false;
    std::string report_path;
    std::string thresholds_path;
    auto* classify = app.add_subcommand("classify", "Classify an event stream; exit code is the max priority band");
    classify->add_option("--in", in_path, "Event NDJSON ('-' for stdin)")->required();
    classify->add_option("--catalog", catalog_path, "Catalog file (defaults to the built-in deployment)");
    classify->add_option("--out", out_path, "Detections NDJSON output")->required();
    classify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
    classify->add_flag("--lenient", lenient, "Skip malformed lines instead of failing");
    classify->add_option("--report", report_path, "Also write the report to this file");
    classify->add_option("--thresholds", thresholds_path, "Rate threshold overrides (key = value)");

    std::string packets_in;
    std::string events_out;
    std::string capture_catalog;
    auto* capture = app.add_subcommand("capture", "Filter packet metadata records into events");
    capture->add_option("--in", packets_in, "Packet metadata NDJSON")->required();
    capture->add_option("--catalog", capture_catalog, "Catalog file (defaults to the built-in deployment)");
    capture->add_option("--out", events_out, "Event NDJSON output")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExUsage;
    }

    try {
        if (*serve) return cmd_serve(config_path);
        if (*simulate) return cmd_simulate(kind, seed, sim_out, sim_catalog, start_ts);
        if (*classify) {
            return cmd_classify(in_path, catalog_path, out_path, format, lenient, report_path, thresholds_path);
        }
        if (*capture) return cmd_capture(packets_in, capture_catalog, events_out);
    } catch (const honeynet::OrderError& e) {
        spdlog::error("{}", e.what());
        return kExDataErr;
    } catch (const std::exception& e) {
        spdlog::error("{}", e.what());
        return 1;
    }
    return kExUsage;
}
