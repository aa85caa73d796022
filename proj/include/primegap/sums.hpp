#pragma once

#include <iosfwd>

#include "primegap/admissible.hpp"
#include "primegap/interval.hpp"
#include "primegap/logreal.hpp"
#include "primegap/weights.hpp"

namespace primegap {

// Direct evaluation of the two short-interval sums: S1 = sum lambda(n)^2 and
// S2 = sum lambda(n)^2 * sum_i theta(n + h_i), both over the closed interval.
double s1(const IntervalSpec& interval, const AdmissibleTuple& tuple, const SieveParams& params);
double s2(const IntervalSpec& interval, const AdmissibleTuple& tuple, const SieveParams& params);

// Knobs for the asymptotic reference predictions. The upper prediction as
// printed carries a bare x where the surrounding argument wants the interval
// length; the default uses the length and strict_paper_x restores the printed
// form. Predictions drop o(1) terms: they are asymptotic references, not
// certified bounds at finite x.
struct PredictionOptions {
    bool strict_paper_x = false;
    LogReal kappa1;  // defaults exp(-1200)
    LogReal kappa2;  // defaults 1e8 * exp(-1200)

    PredictionOptions();
};

// The three log-space predictions:
//   s1_bound         (1+kappa1)/(k0+2l0)! C(2l0,l0)   S(H) len (ln D)^{k0+2l0}
//   s2_bound         k0(1-kappa2)/(k0+2l0+1)! C(2l0+2,l0+1) S(H) len (ln D)^{k0+2l0+1}
//   omega_prediction omega S(H) len (ln D)^{k0+2l0+1}
// ln_singular is ln S(H); with the full-strength parameters the tuple itself
// is out of reach, so the caller supplies it (0 = unit placeholder).
struct Predictions {
    LogReal s1_bound;
    LogReal s2_bound;
    LogReal omega_prediction;
};

Predictions bound_predictions(const IntervalSpec& interval, const SieveParams& params,
                              double ln_singular, const PredictionOptions& opt = {});

struct SumReport {
    IntervalSpec interval;
    SieveParams params;
    double s1 = 0;
    double s2 = 0;
    double statistic = 0;  // s2 - ln(3x) s1
    double singular_series_value = 0;
    LogReal s1_bound;
    LogReal s2_bound;
    LogReal omega_prediction;
};

// Full report: direct sums plus predictions. The singular series is evaluated
// at singular_p_max to feed the prediction terms.
SumReport lemma3_statistic(const IntervalSpec& interval, const AdmissibleTuple& tuple,
                           const SieveParams& params, const PredictionOptions& opt = {},
                           u64 singular_p_max = 100'000);

// Unordered pairs of primes p1 != p2 in the closed interval with
// 1 < |p1 - p2| < gap_bound.
u64 count_weak_prime_pairs(const IntervalSpec& interval, u64 gap_bound);

// Number of n in the closed interval with at least two of n + h_i prime.
u64 count_two_prime_translates(const IntervalSpec& interval, const AdmissibleTuple& tuple);

void write_json(const SumReport& report, std::ostream& out);

}  // namespace primegap
