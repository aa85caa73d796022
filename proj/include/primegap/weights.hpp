#pragma once

#include <iosfwd>
#include <vector>

#include "primegap/admissible.hpp"
#include "primegap/arith.hpp"
#include "primegap/common.hpp"
#include "primegap/interval.hpp"

namespace primegap {

// Sieve parameter block (k0, l0, varpi, x) with the two derived cutoffs:
// D = floor(x^{varpi + 1/4}) bounds the divisors the weight sees, and
// D1 = floor(x^varpi) bounds the primes in the smooth modulus P. The
// explicit-cap factory exists because at desk x the full-strength varpi
// drives D1 to 1 and collapses every weight to g(1).
struct SieveParams {
    u64 k0 = 1;
    u64 l0 = 1;
    Rational varpi{1, 1168};
    u64 x = 2;
    u64 big_d = 1;  // D
    u64 d1 = 1;     // D1

    static SieveParams derive(u64 k0, u64 l0, Rational varpi, u64 x);
    static SieveParams with_caps(u64 k0, u64 l0, Rational varpi, u64 x, u64 big_d, u64 d1);

    u64 g_degree() const { return k0 + l0; }
};

// floor(x^{p/q}) computed exactly in integers (x^p then a truncated q-th
// root); the basis for both cutoffs above.
u64 floor_pow_rational(u64 x, const Rational& e);

// g(y) = (ln(D/y))^{k0+l0} / (k0+l0)! for y < D, else 0. Assembled in log
// space and exponentiated once.
double weight_g(double y, const SieveParams& params);

// lambda(n) = sum over squarefree D1-smooth d | P(n) of mu(d) g(d), by
// subset enumeration of the distinct primes p <= D1 dividing P(n) in
// ascending order, pruning once the partial product reaches D.
double lambda_weight(u64 n, const AdmissibleTuple& tuple, const SieveParams& params);

struct WeightTable {
    IntervalSpec interval;
    SieveParams params;
    std::vector<double> values;  // values[j] = lambda(lo + j)
    double max_abs = 0;

    double at(u64 n) const;
};

// Batch lambda over a closed interval: one residue-marking pass per prime
// p <= D1 collects each n's smooth prime set, then per-n subset sums run in
// deterministic chunks.
WeightTable lambda_batch(const IntervalSpec& interval, const AdmissibleTuple& tuple,
                         const SieveParams& params);

// Diagnostic check of max|lambda| against the crude envelope
// x^eps (ln D)^{k0+l0} / (k0+l0)!. Not a proof, just a sanity report.
struct SupReport {
    double max_abs = 0;
    double bound = 0;
    bool ok = false;
};

SupReport lambda_sup_report(const WeightTable& table, double epsilon);

// CSV with header "n,lambda", 17 significant digits.
void write_csv(const WeightTable& table, std::ostream& out);

}  // namespace primegap
