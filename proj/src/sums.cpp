#include "primegap/sums.hpp"

#include <cmath>
#include <ostream>

#include <json.hpp>

#include "primegap/parallel.hpp"

namespace primegap {

namespace {

void check_span(const IntervalSpec& interval, const AdmissibleTuple& tuple) {
    if (tuple.offsets().back() > ~u64{0} - interval.hi())
        throw std::invalid_argument("sums: interval plus tuple offsets overflows");
}

}  // namespace

double s1(const IntervalSpec& interval, const AdmissibleTuple& tuple, const SieveParams& params) {
    const WeightTable table = lambda_batch(interval, tuple, params);
    return chunked_sum(0, interval.length() - 1,
                       [&](u64 j) { return table.values[j] * table.values[j]; });
}

double s2(const IntervalSpec& interval, const AdmissibleTuple& tuple, const SieveParams& params) {
    check_span(interval, tuple);
    const WeightTable table = lambda_batch(interval, tuple, params);
    const u64 lo = interval.lo();
    const u64 mask_lo = lo + tuple.offsets().front();
    const u64 mask_hi = interval.hi() + tuple.offsets().back();
    const std::vector<std::uint8_t> mask = prime_mask(mask_lo, mask_hi);

    return chunked_sum(0, interval.length() - 1, [&](u64 j) {
        double theta = 0.0;
        for (u64 h : tuple.offsets()) {
            const u64 m = lo + j + h;
            if (mask[m - mask_lo]) theta += std::log(static_cast<double>(m));
        }
        return table.values[j] * table.values[j] * theta;
    });
}

PredictionOptions::PredictionOptions()
    : kappa1(LogReal::from_ln(-1200.0)),
      kappa2(LogReal::from_ln(8.0 * std::log(10.0) - 1200.0)) {}

Predictions bound_predictions(const IntervalSpec& interval, const SieveParams& params,
                              double ln_singular, const PredictionOptions& opt) {
    const u64 k0 = params.k0, l0 = params.l0;
    const LogReal one = LogReal::from_ln(0.0);
    const LogReal singular = LogReal::from_ln(ln_singular);
    const LogReal len = LogReal::from_double(static_cast<double>(
        opt.strict_paper_x ? interval.x : interval.delta));

    // (ln D)^m as a LogReal; collapses to zero when D <= 1 kills the logarithm.
    const double ln_d = std::log(static_cast<double>(params.big_d));
    auto ln_d_pow = [&](u64 m) {
        if (params.big_d <= 1) return LogReal::zero();
        return LogReal::from_ln(static_cast<double>(m) * std::log(ln_d));
    };

    Predictions out;
    out.s1_bound = (one + opt.kappa1) *
                   LogReal::from_ln(log_binomial(2 * l0, l0) - log_gamma(k0 + 2 * l0 + 1)) *
                   singular * len * ln_d_pow(k0 + 2 * l0);
    out.s2_bound = LogReal::from_double(static_cast<double>(k0)) * (one - opt.kappa2) *
                   LogReal::from_ln(log_binomial(2 * l0 + 2, l0 + 1) - log_gamma(k0 + 2 * l0 + 2)) *
                   singular * len * ln_d_pow(k0 + 2 * l0 + 1);

    OmegaParams op(k0, l0, params.varpi);
    op.kappa1 = opt.kappa1;
    op.kappa2 = opt.kappa2;
    out.omega_prediction = omega_constant(op) * singular * len * ln_d_pow(k0 + 2 * l0 + 1);
    return out;
}

SumReport lemma3_statistic(const IntervalSpec& interval, const AdmissibleTuple& tuple,
                           const SieveParams& params, const PredictionOptions& opt,
                           u64 singular_p_max) {
    SumReport r;
    r.interval = interval;
    r.params = params;
    r.s1 = s1(interval, tuple, params);
    r.s2 = s2(interval, tuple, params);
    r.statistic = r.s2 - std::log(3.0 * static_cast<double>(interval.x)) * r.s1;

    const SingularSeriesValue ss = singular_series(tuple, singular_p_max);
    r.singular_series_value = ss.value;
    const double ln_singular = ss.value > 0 ? std::log(ss.value) : 0.0;
    const Predictions p = bound_predictions(interval, params, ln_singular, opt);
    r.s1_bound = ss.value > 0 ? p.s1_bound : LogReal::zero();
    r.s2_bound = ss.value > 0 ? p.s2_bound : LogReal::zero();
    r.omega_prediction = ss.value > 0 ? p.omega_prediction : LogReal::zero();
    return r;
}

u64 count_weak_prime_pairs(const IntervalSpec& interval, u64 gap_bound) {
    if (gap_bound < 2) throw std::invalid_argument("count_weak_prime_pairs: gap_bound must be >= 2");
    const PrimeTable table = sieve_primes(interval.lo(), interval.hi());
    const std::vector<u64>& ps = table.primes;
    u64 pairs = 0;
    std::size_t w = 0;
    for (std::size_t j = 1; j < ps.size(); ++j) {
        while (ps[j] - ps[w] >= gap_bound) ++w;
        u64 in_window = j - w;
        if (in_window > 0 && ps[j] - ps[j - 1] == 1) --in_window;  // the (2,3) gap of 1
        pairs += in_window;
    }
    return pairs;
}

u64 count_two_prime_translates(const IntervalSpec& interval, const AdmissibleTuple& tuple) {
    if (!tuple.admissible())
        throw inadmissible_error(*tuple.witness(),
                                 "count_two_prime_translates: tuple is covered mod " +
                                     std::to_string(*tuple.witness()));
    check_span(interval, tuple);
    const u64 lo = interval.lo();
    const u64 mask_lo = lo + tuple.offsets().front();
    const std::vector<std::uint8_t> mask =
        prime_mask(mask_lo, interval.hi() + tuple.offsets().back());

    u64 count = 0;
    for (u64 n = lo; n <= interval.hi(); ++n) {
        int prime_hits = 0;
        for (u64 h : tuple.offsets()) {
            if (mask[n + h - mask_lo] && ++prime_hits == 2) {
                ++count;
                break;
            }
        }
    }
    return count;
}

namespace {

nlohmann::json log_field(const LogReal& v) {
    if (v.is_zero()) return nullptr;
    return v.ln_mag;
}

}  // namespace

void write_json(const SumReport& report, std::ostream& out) {
    nlohmann::json j;
    j["s1"] = report.s1;
    j["s2"] = report.s2;
    j["statistic"] = report.statistic;
    j["singular_series"] = report.singular_series_value;
    j["s1_bound_log"] = log_field(report.s1_bound);
    j["s2_bound_log"] = log_field(report.s2_bound);
    j["omega_prediction_log"] = log_field(report.omega_prediction);
    j["s1_bound"] = report.s1_bound.is_zero() ? "0" : format_decimal(report.s1_bound);
    j["s2_bound"] = report.s2_bound.is_zero() ? "0" : format_decimal(report.s2_bound);
    j["omega_prediction"] =
        report.omega_prediction.is_zero() ? "0" : format_decimal(report.omega_prediction);
    j["params"] = {
        {"k0", report.params.k0},
        {"l0", report.params.l0},
        {"varpi", std::to_string(report.params.varpi.num) + "/" +
                      std::to_string(report.params.varpi.den)},
        {"x", report.params.x},
        {"D", report.params.big_d},
        {"D1", report.params.d1},
    };
    j["interval"] = {{"x", report.interval.x}, {"delta", report.interval.delta}};
    out << j.dump(2) << '\n';
}

}  // namespace primegap
