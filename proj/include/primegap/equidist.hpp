#pragma once

#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

#include "primegap/admissible.hpp"
#include "primegap/interval.hpp"
#include "primegap/weights.hpp"

namespace primegap {

// Weight function gamma tabulated over a closed interval, plus its total.
// theta_table builds the one weight the estimates actually use (theta = ln p
// at primes); make_table admits any user-tabulated gamma.
struct IntervalThetaTable {
    IntervalSpec interval;
    std::vector<double> values;  // values[j] = gamma(lo + j)
    double total = 0;            // deterministic chunked sum of values
};

IntervalThetaTable theta_table(const IntervalSpec& interval);
IntervalThetaTable make_table(const IntervalSpec& interval,
                              const std::function<double(u64)>& gamma);

// Sum of gamma over n ≡ c (mod d) in the interval, in index order.
double class_sum(const IntervalThetaTable& table, u64 d, u64 c);

// Per-class sums for every residue mod d in one sweep (size-d vector).
std::vector<double> class_sums(const IntervalThetaTable& table, u64 d);

// Delta(gamma; d, c) = class sum minus total/phi(d). Requires gcd(c, d) = 1,
// 1 <= c <= d.
double discrepancy_delta(const IntervalThetaTable& table, u64 d, u64 c);

// Residues c in [1, d], coprime to d, with P(c - h_i) == 0 (mod d);
// per-prime roots c == h_i - h_j (omitting 0) joined by CRT. i is 1-based.
// d must be squarefree with all prime factors <= d1.
struct ResidueSet {
    u64 d = 1;
    u64 i = 1;
    std::vector<u64> residues;  // ascending
};

ResidueSet residue_set_Ci(u64 d, const AdmissibleTuple& tuple, u64 i, u64 d1);

// Ascending squarefree d1-smooth moduli below cap (d = 1 included). Loudly
// refuses to build more than 1e7 of them.
std::vector<u64> enumerate_smooth_moduli(u64 d1, u64 cap);

// Lemma-2-style aggregate: sum over squarefree D1-smooth d < d_cap of
// sum_{c in C_i(d)} |Delta(theta; d, c)|. d_cap defaults to D^2.
double bv_sum(u64 i, const IntervalSpec& interval, const AdmissibleTuple& tuple,
              const SieveParams& params, u64 d_cap = 0);

// E_i = sum tau3(d) rho2(d) sum_c |Delta|, together with the Cauchy-Schwarz
// right side sqrt(sum tau3^2 rho2^2 w) * sqrt(sum w) over the same weights
// w_d = sum_c |Delta|.
struct ErrorTerm {
    double e_i = 0;
    double cauchy_rhs = 0;
};

ErrorTerm error_term_Ei(u64 i, const IntervalSpec& interval, const AdmissibleTuple& tuple,
                        const SieveParams& params, u64 d_cap = 0);

// Full report for one designated index: per-modulus Delta detail, the bv
// aggregate for that index, E_i and the Cauchy-Schwarz side for every i, and
// the charted ratio bv_sum / (delta * (ln x)^{-B}). The unspecified constants
// in the asymptotic statement mean the ratio is reported, never judged.
struct DiscrepancyReport {
    IntervalSpec interval;
    u64 designated_i = 1;
    double b = 1.0;
    std::vector<std::pair<u64, std::vector<std::pair<u64, double>>>> per_modulus;
    double bv_sum = 0;
    std::vector<double> e_terms;     // index i-1
    std::vector<double> cauchy_rhs;  // index i-1
    double target = 0;               // delta * (ln x)^{-B}
    double ratio_at_b = 0;
};

DiscrepancyReport discrepancy_report(const IntervalSpec& interval, const AdmissibleTuple& tuple,
                                     const SieveParams& params, u64 designated_i = 1,
                                     u64 d_cap = 0, double b = 1.0);

void write_csv(const DiscrepancyReport& report, std::ostream& out);           // d,c,delta
void write_json_summary(const DiscrepancyReport& report, std::ostream& out);  // aggregates

}  // namespace primegap
