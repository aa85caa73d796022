#pragma once

#include <optional>

#include "primegap/common.hpp"

namespace primegap {

// Signed real stored as sign plus natural log of magnitude. Everything the
// sieve predictions need lives many thousands of orders of magnitude below
// double range, so products and quotients stay in log space and we only leave
// it at the rendering boundary.
struct LogReal {
    int sign = 0;       // -1, 0, +1
    double ln_mag = 0;  // ln |x|; meaningless when sign == 0 (kept at 0)

    static LogReal zero() { return LogReal{}; }
    static LogReal from_ln(double ln_value, int s = +1);
    static LogReal from_double(double v);

    bool is_zero() const { return sign == 0; }
    // Overflows to +/-inf or underflows to 0 outside double range.
    double to_double() const;

    LogReal operator-() const { return LogReal{-sign, ln_mag}; }
};

LogReal operator*(const LogReal& a, const LogReal& b);
LogReal operator/(const LogReal& a, const LogReal& b);  // throws on b == 0

// Stable log-sum-exp addition. When the operands have opposite signs and
// magnitudes within 1e-15 relatively, the digits feeding the result are
// exhausted by cancellation; *cancellation is set so callers can widen
// precision instead of trusting noise.
LogReal log_add(const LogReal& a, const LogReal& b, bool* cancellation = nullptr);

inline LogReal operator+(const LogReal& a, const LogReal& b) { return log_add(a, b); }
inline LogReal operator-(const LogReal& a, const LogReal& b) { return log_add(a, -b); }

int compare(const LogReal& a, const LogReal& b);  // -1, 0, +1

inline bool operator<(const LogReal& a, const LogReal& b) { return compare(a, b) < 0; }
inline bool operator==(const LogReal& a, const LogReal& b) { return compare(a, b) == 0; }

// ln((n-1)!). Exact log summation for n <= 32, Stirling's series with
// Bernoulli corrections above; good to well past 12 significant digits.
double log_gamma(u64 n);

// Cross-check mode: literal sum of ln k. Capped at n = 1e7 because it is
// linear-time and exists only to audit the series tail.
double log_gamma_exact(u64 n);

// ln C(n, k) via log_gamma differences.
double log_binomial(u64 n, u64 k);

// Parameter block for the sieve's leading constant. Defaults are the
// full-strength values; the kappas sit at their stated bounds exp(-1200) and
// 1e8*exp(-1200), far below every rendering threshold we use.
struct OmegaParams {
    u64 k0 = 3'500'000;
    u64 l0 = 180;
    Rational varpi{1, 1168};
    LogReal kappa1;
    LogReal kappa2;

    OmegaParams();
    OmegaParams(u64 k0_, u64 l0_, Rational varpi_);
};

// omega = 1/(k0+2l0)! * C(2l0,l0) * bracket, with
// bracket = 2(2l0+1)k0(1-kappa2)/((l0+1)(k0+2l0+1)) - 4(1+kappa1)/(1+4*varpi).
// The bracket is a ~3-digit cancellation of two O(4) terms, so it is computed
// at 4096 bits before taking logs; a kappa-free evaluation rides along so the
// insensitivity claim is checkable rather than assumed.
struct OmegaResult {
    LogReal omega;
    LogReal omega_no_kappa;
    double bracket = 0;           // bracket rounded to double, kappas included
    double bracket_no_kappa = 0;  // same with kappa1 = kappa2 = 0
};

OmegaResult omega_constant_detailed(const OmegaParams& params);
LogReal omega_constant(const OmegaParams& params);

// Strict comparison ln(omega) > ln_threshold; rejects nonpositive omega.
bool verify_omega_threshold(const LogReal& omega, double ln_threshold);

// Scientific-notation view of a nonzero LogReal: mantissa in [1, 10).
struct DecimalForm {
    double mantissa = 0;
    i64 exponent10 = 0;
};

DecimalForm render_decimal(const LogReal& x);

// "m.mmmme+EEE" with the given significant digits; for log files and JSON.
std::string format_decimal(const LogReal& x, int digits = 4);

}  // namespace primegap
