#include "primegap/weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "primegap/logreal.hpp"
#include "primegap/parallel.hpp"

namespace primegap {

namespace {

constexpr u64 kD1Cap = 100'000'000;       // prime sieve budget for the smooth modulus
constexpr u64 kBatchCap = u64{1} << 24;   // weight table entry budget
constexpr std::size_t kFactorCap = 64;    // distinct smooth primes per n

void check_common(u64 k0, u64 l0, const Rational& varpi, u64 x) {
    if (k0 == 0 || l0 == 0)
        throw std::invalid_argument("SieveParams: k0 and l0 must be >= 1");
    if (!varpi.positive() || !varpi.leq(1, 4))
        throw std::invalid_argument("SieveParams: varpi must lie in (0, 1/4]");
    if (x == 0) throw std::invalid_argument("SieveParams: x must be positive");
}

}  // namespace

u64 floor_pow_rational(u64 x, const Rational& e) {
    if (!e.positive()) throw std::invalid_argument("floor_pow_rational: exponent must be positive");
    if (e.num > 100'000) throw resource_error("floor_pow_rational: exponent numerator too large");
    if (x == 0) return 0;
    mpz_class xp;
    mpz_ui_pow_ui(xp.get_mpz_t(), static_cast<unsigned long>(x),
                  static_cast<unsigned long>(e.num));
    mpz_class root;
    mpz_root(root.get_mpz_t(), xp.get_mpz_t(), static_cast<unsigned long>(e.den));
    if (!root.fits_ulong_p()) throw resource_error("floor_pow_rational: result exceeds 64 bits");
    return root.get_ui();
}

SieveParams SieveParams::derive(u64 k0, u64 l0, Rational varpi, u64 x) {
    check_common(k0, l0, varpi, x);
    SieveParams p;
    p.k0 = k0;
    p.l0 = l0;
    p.varpi = varpi;
    p.x = x;
    const Rational quarter_plus(4 * varpi.num + varpi.den, 4 * varpi.den);
    p.big_d = floor_pow_rational(x, quarter_plus);
    p.d1 = floor_pow_rational(x, varpi);
    return p;
}

SieveParams SieveParams::with_caps(u64 k0, u64 l0, Rational varpi, u64 x, u64 big_d, u64 d1) {
    check_common(k0, l0, varpi, x);
    if (big_d == 0 || d1 == 0)
        throw std::invalid_argument("SieveParams: cutoffs must be positive");
    if (d1 > big_d) throw std::invalid_argument("SieveParams: D1 must not exceed D");
    SieveParams p;
    p.k0 = k0;
    p.l0 = l0;
    p.varpi = varpi;
    p.x = x;
    p.big_d = big_d;
    p.d1 = d1;
    return p;
}

double weight_g(double y, const SieveParams& params) {
    if (y < 1.0) throw std::invalid_argument("weight_g: y must be >= 1");
    const double edge = static_cast<double>(params.big_d);
    if (y >= edge) return 0.0;
    const double ln_ratio = std::log(edge / y);
    const u64 deg = params.g_degree();
    return std::exp(static_cast<double>(deg) * std::log(ln_ratio) - log_gamma(deg + 1));
}

namespace {

// mu(d) g(d) summed over squarefree products of the given ascending primes.
// Pruning is exact: primes ascend, so once a partial product reaches D every
// extension is also past the support of g.
double lambda_from_primes(std::span<const u64> primes, const SieveParams& params) {
    if (primes.size() > kFactorCap)
        throw resource_error("lambda: more than 64 distinct smooth prime factors");
    KahanSum acc;
    acc.add(weight_g(1.0, params));
    auto dfs = [&](auto&& self, std::size_t start, u64 prod, int sign) -> void {
        for (std::size_t j = start; j < primes.size(); ++j) {
            const u128 next = static_cast<u128>(prod) * primes[j];
            if (next >= static_cast<u128>(params.big_d)) break;
            const double g = weight_g(static_cast<double>(static_cast<u64>(next)), params);
            acc.add(sign > 0 ? g : -g);
            self(self, j + 1, static_cast<u64>(next), -sign);
        }
    };
    dfs(dfs, 0, 1, -1);
    return acc.value();
}

void check_lambda_inputs(const AdmissibleTuple& tuple, const SieveParams& params) {
    if (tuple.size() != params.k0)
        throw std::invalid_argument("lambda: tuple size must equal params.k0");
    if (params.d1 > kD1Cap)
        throw resource_error("lambda: D1 exceeds the smooth-prime sieve budget");
}

}  // namespace

double lambda_weight(u64 n, const AdmissibleTuple& tuple, const SieveParams& params) {
    if (n == 0) throw std::invalid_argument("lambda_weight: n must be >= 1");
    check_lambda_inputs(tuple, params);

    std::vector<u64> divisors;
    if (params.d1 >= 2) {
        const PrimeTable table = sieve_primes(2, params.d1);
        for (u64 p : table.primes) {
            for (u64 h : tuple.offsets()) {
                if ((n % p + h % p) % p == 0) {
                    divisors.push_back(p);
                    break;
                }
            }
        }
    }
    return lambda_from_primes(divisors, params);
}

double WeightTable::at(u64 n) const {
    if (n < interval.lo() || n > interval.hi())
        throw std::out_of_range("WeightTable: n outside the tabulated interval");
    return values[n - interval.lo()];
}

WeightTable lambda_batch(const IntervalSpec& interval, const AdmissibleTuple& tuple,
                         const SieveParams& params) {
    check_lambda_inputs(tuple, params);
    const u64 len = interval.length();
    if (len > kBatchCap)
        throw resource_error("lambda_batch: interval exceeds the 2^24-entry table budget");

    const u64 lo = interval.lo();

    // CSR layout of each n's smooth prime marks: count, prefix, fill. A prime
    // hitting several offsets of the same n lands adjacently, so consumers
    // dedupe by comparing neighbours.
    std::vector<std::uint32_t> counts(len, 0);
    PrimeTable table;
    if (params.d1 >= 2) table = sieve_primes(2, params.d1);

    auto for_each_mark = [&](auto&& visit) {
        for (u64 p : table.primes) {
            for (u64 h : tuple.offsets()) {
                const u64 residue = (lo % p + h % p) % p;
                u64 j = (p - residue) % p;  // first index with p | (lo + j + h)
                for (; j < len; j += p) visit(j, p);
            }
        }
    };
    for_each_mark([&](u64 j, u64) { ++counts[j]; });

    std::vector<u64> offsets(len + 1, 0);
    for (u64 j = 0; j < len; ++j) offsets[j + 1] = offsets[j] + counts[j];
    std::vector<u64> slots(offsets[len]);
    std::vector<u64> cursor(offsets.begin(), offsets.end() - 1);
    for_each_mark([&](u64 j, u64 p) { slots[cursor[j]++] = p; });

    WeightTable out;
    out.interval = interval;
    out.params = params;
    out.values.assign(len, 0.0);

    parallel_for_chunks(0, len - 1, [&](u64 chunk_lo, u64 chunk_hi, std::size_t) {
        std::vector<u64> distinct;
        for (u64 j = chunk_lo; j <= chunk_hi; ++j) {
            distinct.clear();
            for (u64 s = offsets[j]; s < offsets[j + 1]; ++s)
                if (distinct.empty() || distinct.back() != slots[s]) distinct.push_back(slots[s]);
            out.values[j] = lambda_from_primes(distinct, params);
        }
    });

    for (double v : out.values) out.max_abs = std::max(out.max_abs, std::fabs(v));
    return out;
}

SupReport lambda_sup_report(const WeightTable& table, double epsilon) {
    if (table.values.empty())
        throw std::invalid_argument("lambda_sup_report: weight table is empty");
    const SieveParams& p = table.params;
    const double ln_bound = epsilon * std::log(static_cast<double>(p.x)) +
                            static_cast<double>(p.g_degree()) *
                                std::log(std::log(static_cast<double>(p.big_d))) -
                            log_gamma(p.g_degree() + 1);
    SupReport r;
    r.max_abs = table.max_abs;
    r.bound = std::exp(ln_bound);
    r.ok = r.max_abs <= r.bound;
    return r;
}

void write_csv(const WeightTable& table, std::ostream& out) {
    out << "n,lambda\n";
    char buf[40];
    for (u64 j = 0; j < table.values.size(); ++j) {
        std::snprintf(buf, sizeof buf, "%.17g", table.values[j]);
        out << table.interval.lo() + j << ',' << buf << '\n';
    }
}

}  // namespace primegap
