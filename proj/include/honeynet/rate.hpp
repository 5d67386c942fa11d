#pragma once

#include <cstdint>
#include <deque>
#include <span>

#include "honeynet/event.hpp"

namespace honeynet {

inline constexpr std::int64_t kDefaultRateWindowSecs = 60;

/// Request-rate features over the window (at - window, at].
/// Only application-layer events (HTTP accesses, web and SSH logins) count as requests;
/// packets are not requests.
struct RateFeatures {
    Millis window_start = 0;
    Millis window_end = 0;
    double requests_per_min = 0.0;
    double login_attempts_per_min = 0.0;
    double interarrival_mean_secs = 0.0;
    double interarrival_cv = 0.0;  // 0 with fewer than 3 gaps
    std::size_t interarrival_samples = 0;
};

bool is_request(const Event& e) noexcept;
bool is_login(const Event& e) noexcept;

/// Batch form: `events` are one source's events, sorted by ts.
RateFeatures rate_features(std::span<const Event> events, std::int64_t window_secs, Millis at);

/// Incremental form used by the pipeline: push requests in ts order, query at the latest ts.
class RateWindow {
public:
    explicit RateWindow(std::int64_t window_secs = kDefaultRateWindowSecs) : window_secs_(window_secs) {}

    void push(const Event& e);
    RateFeatures features(Millis at);

private:
    struct Entry {
        Millis ts;
        bool login;
    };

    void evict(Millis at);

    std::int64_t window_secs_;
    std::deque<Entry> entries_;
    std::size_t logins_ = 0;
    std::int64_t gap_sq_sum_ = 0;  // sum of squared consecutive gaps (ms^2) inside the window
};

}  // namespace honeynet
