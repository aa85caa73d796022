#pragma once

#include <cmath>
#include <optional>

#include "primegap/common.hpp"

namespace primegap {

// Closed interval [x, x + delta]. delta is either given directly or derived
// from an exponent A as floor(x / (ln x)^A); the A form remembers A so a
// report can echo how the window was specified.
struct IntervalSpec {
    u64 x = 2;
    u64 delta = 0;
    std::optional<double> log_power;

    static IntervalSpec with_delta(u64 x, u64 delta) {
        if (x == 0) throw std::invalid_argument("interval: x must be positive");
        if (delta > ~u64{0} - x) throw std::invalid_argument("interval: x + delta overflows");
        return IntervalSpec{x, delta, std::nullopt};
    }

    static IntervalSpec with_log_power(u64 x, double a) {
        if (x < 2) throw std::invalid_argument("interval: log-power form needs x >= 2");
        const double raw = std::floor(static_cast<double>(x) / std::pow(std::log(static_cast<double>(x)), a));
        if (!std::isfinite(raw) || raw < 0 || raw > 1.8e19)
            throw std::invalid_argument("interval: derived delta out of range");
        return IntervalSpec{x, static_cast<u64>(raw), a};
    }

    u64 lo() const { return x; }
    u64 hi() const { return x + delta; }
    u64 length() const { return delta + 1; }
};

}  // namespace primegap
