#include "honeynet/rate.hpp"

#include <cmath>

namespace honeynet {
namespace {

// gap_sum and gap_sq_sum in ms and ms^2; exact integers so both forms agree bit for bit.
RateFeatures finish(std::int64_t window_secs, Millis at, std::size_t requests, std::size_t logins,
                    std::size_t gaps, std::int64_t gap_sum, std::int64_t gap_sq_sum) {
    RateFeatures f;
    f.window_end = at;
    f.window_start = at - window_secs * 1000;
    const double per_min = 60.0 / static_cast<double>(window_secs);
    f.requests_per_min = static_cast<double>(requests) * per_min;
    f.login_attempts_per_min = static_cast<double>(logins) * per_min;
    f.interarrival_samples = gaps;
    if (gaps == 0) return f;

    const double n = static_cast<double>(gaps);
    const double mean_ms = static_cast<double>(gap_sum) / n;
    f.interarrival_mean_secs = mean_ms / 1000.0;
    if (gaps >= 3 && mean_ms > 0.0) {
        const double var = std::max(0.0, static_cast<double>(gap_sq_sum) / n - mean_ms * mean_ms);
        f.interarrival_cv = std::sqrt(var) / mean_ms;
    }
    return f;
}

}  // namespace

bool is_request(const Event& e) noexcept {
    return e.is<HttpAccess>() || e.is<LoginAttempt>() || e.is<SshLoginAttempt>();
}

bool is_login(const Event& e) noexcept {
    return e.is<LoginAttempt>() || e.is<SshLoginAttempt>();
}

RateFeatures rate_features(std::span<const Event> events, std::int64_t window_secs, Millis at) {
    const Millis lo = at - window_secs * 1000;
    std::size_t requests = 0;
    std::size_t logins = 0;
    std::size_t gaps = 0;
    std::int64_t gap_sum = 0;
    std::int64_t gap_sq_sum = 0;
    Millis prev = 0;
    for (const auto& e : events) {
        if (e.ts <= lo || e.ts > at || !is_request(e)) continue;
        if (requests > 0) {
            const auto g = e.ts - prev;
            ++gaps;
            gap_sum += g;
            gap_sq_sum += g * g;
        }
        prev = e.ts;
        ++requests;
        if (is_login(e)) ++logins;
    }
    return finish(window_secs, at, requests, logins, gaps, gap_sum, gap_sq_sum);
}

void RateWindow::push(const Event& e) {
    if (!is_request(e)) return;
    if (!entries_.empty()) {
        const auto g = e.ts - entries_.back().ts;
        gap_sq_sum_ += g * g;
    }
    const bool login = is_login(e);
    entries_.push_back({e.ts, login});
    if (login) ++logins_;
}

void RateWindow::evict(Millis at) {
    const Millis lo = at - window_secs_ * 1000;
    while (!entries_.empty() && entries_.front().ts <= lo) {
        if (entries_.size() > 1) {
            const auto g = entries_[1].ts - entries_.front().ts;
            gap_sq_sum_ -= g * g;
        }
        if (entries_.front().login) --logins_;
        entries_.pop_front();
    }
}

RateFeatures RateWindow::features(Millis at) {
    evict(at);
    const std::size_t n = entries_.size();
    const std::size_t gaps = n > 1 ? n - 1 : 0;
    const std::int64_t gap_sum = n > 1 ? entries_.back().ts - entries_.front().ts : 0;
    return finish(window_secs_, at, n, logins_, gaps, gap_sum, gaps ? gap_sq_sum_ : 0);
}

}  // namespace honeynet
