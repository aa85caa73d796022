#include "primegap/logreal.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdio>

#include "primegap/parallel.hpp"

namespace primegap {

LogReal LogReal::from_ln(double ln_value, int s) {
    if (s == 0) return zero();
    if (!std::isfinite(ln_value))
        throw std::invalid_argument("LogReal: ln magnitude must be finite");
    return LogReal{s > 0 ? +1 : -1, ln_value};
}

LogReal LogReal::from_double(double v) {
    if (v == 0.0) return zero();
    if (!std::isfinite(v)) throw std::invalid_argument("LogReal: value must be finite");
    return LogReal{v > 0 ? +1 : -1, std::log(std::fabs(v))};
}

double LogReal::to_double() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(ln_mag);
}

LogReal operator*(const LogReal& a, const LogReal& b) {
    if (a.sign == 0 || b.sign == 0) return LogReal::zero();
    return LogReal{a.sign * b.sign, a.ln_mag + b.ln_mag};
}

LogReal operator/(const LogReal& a, const LogReal& b) {
    if (b.sign == 0) throw std::domain_error("LogReal: division by zero");
    if (a.sign == 0) return LogReal::zero();
    return LogReal{a.sign * b.sign, a.ln_mag - b.ln_mag};
}

LogReal log_add(const LogReal& a, const LogReal& b, bool* cancellation) {
    if (cancellation) *cancellation = false;
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;

    // Order so |hi| >= |lo|; the exp argument is then <= 0 and cannot blow up.
    const LogReal& hi = (a.ln_mag >= b.ln_mag) ? a : b;
    const LogReal& lo = (a.ln_mag >= b.ln_mag) ? b : a;
    const double gap = lo.ln_mag - hi.ln_mag;  // <= 0

    if (hi.sign == lo.sign)
        return LogReal{hi.sign, hi.ln_mag + std::log1p(std::exp(gap))};

    if (gap == 0.0) return LogReal::zero();
    const double scale = std::max({std::fabs(hi.ln_mag), std::fabs(lo.ln_mag), 1.0});
    if (cancellation && -gap < 1e-15 * scale) *cancellation = true;
    return LogReal{hi.sign, hi.ln_mag + std::log1p(-std::exp(gap))};
}

int compare(const LogReal& a, const LogReal& b) {
    if (a.sign != b.sign) return a.sign < b.sign ? -1 : +1;
    if (a.sign == 0) return 0;
    if (a.ln_mag == b.ln_mag) return 0;
    const bool bigger = a.ln_mag > b.ln_mag;
    return (bigger == (a.sign > 0)) ? +1 : -1;
}

double log_gamma(u64 n) {
    if (n == 0) throw std::invalid_argument("log_gamma: n must be >= 1");
    if (n <= 32) {
        KahanSum s;
        for (u64 k = 2; k < n; ++k) s.add(std::log(static_cast<double>(k)));
        return s.value();
    }
    // Stirling: ln G(z) = (z - 1/2) ln z - z + ln(2 pi)/2 + sum B_{2j}/(2j(2j-1) z^{2j-1}).
    // Seven correction terms; the first omitted one is below 1e-24 at z = 33.
    static constexpr double kCoef[] = {
        1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680,
        1.0 / 1188, -691.0 / 360360, 1.0 / 156,
    };
    const double z = static_cast<double>(n);
    const double inv2 = 1.0 / (z * z);
    double corr = 0.0, power = 1.0 / z;
    for (double c : kCoef) {
        corr += c * power;
        power *= inv2;
    }
    constexpr double kHalfLn2Pi = 0.91893853320467274178;
    return (z - 0.5) * std::log(z) - z + kHalfLn2Pi + corr;
}

double log_gamma_exact(u64 n) {
    if (n == 0) throw std::invalid_argument("log_gamma_exact: n must be >= 1");
    if (n > 10'000'000)
        throw resource_error("log_gamma_exact: capped at n = 1e7 (use log_gamma)");
    if (n == 1) return 0.0;
    return chunked_sum(2, n - 1, [](u64 k) { return std::log(static_cast<double>(k)); });
}

double log_binomial(u64 n, u64 k) {
    if (k > n) throw std::invalid_argument("log_binomial: k must satisfy 0 <= k <= n");
    return log_gamma(n + 1) - log_gamma(k + 1) - log_gamma(n - k + 1);
}

OmegaParams::OmegaParams()
    : kappa1(LogReal::from_ln(-1200.0)),
      kappa2(LogReal::from_ln(8.0 * std::log(10.0) - 1200.0)) {}

OmegaParams::OmegaParams(u64 k0_, u64 l0_, Rational varpi_) : OmegaParams() {
    k0 = k0_;
    l0 = l0_;
    varpi = varpi_;
}

namespace {

constexpr mpfr_prec_t kOmegaPrec = 4096;

void set_logreal(mpfr_t rop, const LogReal& x) {
    if (x.sign == 0) {
        mpfr_set_zero(rop, +1);
        return;
    }
    mpfr_set_d(rop, x.ln_mag, MPFR_RNDN);
    mpfr_exp(rop, rop, MPFR_RNDN);
    if (x.sign < 0) mpfr_neg(rop, rop, MPFR_RNDN);
}

// bracket = 2(2l0+1)k0(1-kappa2)/((l0+1)(k0+2l0+1)) - 4(1+kappa1)q/(q+4p)
// for varpi = p/q. All integer products fit u64 comfortably for sane params.
void bracket_mpfr(mpfr_t out, const OmegaParams& P, bool with_kappa) {
    mpfr_t t1, t2, kap;
    mpfr_inits2(kOmegaPrec, t1, t2, kap, (mpfr_ptr) nullptr);

    mpfr_set_ui(t1, 2 * (2 * P.l0 + 1) * P.k0, MPFR_RNDN);
    if (with_kappa) {
        set_logreal(kap, P.kappa2);
        mpfr_ui_sub(kap, 1, kap, MPFR_RNDN);
        mpfr_mul(t1, t1, kap, MPFR_RNDN);
    }
    mpfr_div_ui(t1, t1, (P.l0 + 1) * (P.k0 + 2 * P.l0 + 1), MPFR_RNDN);

    if (!P.varpi.positive())
        throw std::invalid_argument("omega_constant: varpi must be positive");
    mpfr_set_ui(t2, 4, MPFR_RNDN);
    if (with_kappa) {
        set_logreal(kap, P.kappa1);
        mpfr_add_ui(kap, kap, 1, MPFR_RNDN);
        mpfr_mul(t2, t2, kap, MPFR_RNDN);
    }
    mpfr_mul_ui(t2, t2, static_cast<unsigned long>(P.varpi.den), MPFR_RNDN);
    mpfr_div_ui(t2, t2,
                static_cast<unsigned long>(P.varpi.den + 4 * P.varpi.num), MPFR_RNDN);

    mpfr_sub(out, t1, t2, MPFR_RNDN);
    mpfr_clears(t1, t2, kap, (mpfr_ptr) nullptr);
}

LogReal assemble_omega(mpfr_t bracket, const OmegaParams& P) {
    if (mpfr_zero_p(bracket)) return LogReal::zero();
    const int sign = mpfr_sgn(bracket) > 0 ? +1 : -1;
    mpfr_t ln_b;
    mpfr_init2(ln_b, kOmegaPrec);
    mpfr_abs(ln_b, bracket, MPFR_RNDN);
    mpfr_log(ln_b, ln_b, MPFR_RNDN);
    const double ln_bracket = mpfr_get_d(ln_b, MPFR_RNDN);
    mpfr_clear(ln_b);

    const double ln_mag =
        ln_bracket + log_binomial(2 * P.l0, P.l0) - log_gamma(P.k0 + 2 * P.l0 + 1);
    return LogReal::from_ln(ln_mag, sign);
}

}  // namespace

OmegaResult omega_constant_detailed(const OmegaParams& params) {
    if (params.k0 == 0) throw std::invalid_argument("omega_constant: k0 must be positive");
    OmegaResult out;
    mpfr_t b;
    mpfr_init2(b, kOmegaPrec);

    bracket_mpfr(b, params, /*with_kappa=*/true);
    out.bracket = mpfr_get_d(b, MPFR_RNDN);
    out.omega = assemble_omega(b, params);

    bracket_mpfr(b, params, /*with_kappa=*/false);
    out.bracket_no_kappa = mpfr_get_d(b, MPFR_RNDN);
    out.omega_no_kappa = assemble_omega(b, params);

    mpfr_clear(b);
    mpfr_free_cache();
    return out;
}

LogReal omega_constant(const OmegaParams& params) {
    return omega_constant_detailed(params).omega;
}

bool verify_omega_threshold(const LogReal& omega, double ln_threshold) {
    if (omega.sign <= 0)
        throw std::domain_error("verify_omega_threshold: omega must be positive");
    return omega.ln_mag > ln_threshold;
}

DecimalForm render_decimal(const LogReal& x) {
    if (x.sign == 0) throw std::domain_error("render_decimal: zero has no decimal form");
    constexpr double kLn10 = 2.302585092994045684;
    const double t = x.ln_mag / kLn10;
    double e = std::floor(t);
    double m = std::pow(10.0, t - e);
    if (m >= 10.0) {  // rounding pushed the fraction over the top
        m /= 10.0;
        e += 1.0;
    }
    return DecimalForm{x.sign * m, static_cast<i64>(e)};
}

std::string format_decimal(const LogReal& x, int digits) {
    if (x.is_zero()) return "0";
    DecimalForm d = render_decimal(x);
    // Pre-round so a mantissa like 9.99997 carries into the exponent instead
    // of printing as "10.000".
    const double scale = std::pow(10.0, digits - 1);
    if (std::round(std::fabs(d.mantissa) * scale) >= 10.0 * scale) {
        d.mantissa = std::copysign(1.0, d.mantissa);
        d.exponent10 += 1;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*fe%+lld", digits - 1, d.mantissa,
                  static_cast<long long>(d.exponent10));
    return buf;
}

}  // namespace primegap
