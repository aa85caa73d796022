// Acceptance harness: nine independent end-to-end checks, one pass/fail line
// each. Run with --only N to select a single criterion; exit 0 iff every
// selected criterion passes. Expected values come from the bundled oracles or
// from fixed external reference constants named as such.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "primegap/admissible.hpp"
#include "primegap/equidist.hpp"
#include "primegap/logreal.hpp"
#include "primegap/sums.hpp"
#include "primegap/weights.hpp"

using namespace primegap;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* pattern, ...) {
    va_list args;
    va_start(args, pattern);
    char buf[512];
    std::vsnprintf(buf, sizeof buf, pattern, args);
    va_end(args);
    return buf;
}

bool rel_close(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * std::max({std::fabs(a), std::fabs(b), 1.0});
}

// 1. Reproduce the reference value of the leading constant omega at the
// full-strength parameters: mantissa 3.647 +/- 0.001 at decimal exponent
// -21385285, log10 within 1e-3, in under a second. The computed value is
// reported either way.
Outcome criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    const LogReal omega = omega_constant(OmegaParams{});
    const double elapsed = seconds_since(t0);

    constexpr double kRefMantissa = 3.647;
    constexpr double kRefExponent = -21385285.0;
    const double ref_log10 = std::log10(kRefMantissa) + kRefExponent;

    const DecimalForm d = render_decimal(omega);
    const double log10_omega = omega.ln_mag / std::log(10.0);

    const bool mantissa_ok = std::fabs(d.mantissa - kRefMantissa) <= 0.001;
    const bool exponent_ok = static_cast<double>(d.exponent10) == kRefExponent;
    const bool log_ok = std::fabs(log10_omega - ref_log10) <= 1e-3;
    const bool time_ok = elapsed < 1.0;

    return {mantissa_ok && exponent_ok && log_ok && time_ok,
            fmt("computed %.4fe%lld vs reference 3.647e-21385285 "
                "(log10 gap %.2f, %.3fs)",
                d.mantissa, static_cast<long long>(d.exponent10),
                log10_omega - ref_log10, elapsed)};
}

// 2. The positivity margin: omega exceeds exp(-5e7).
Outcome criterion2() {
    const LogReal omega = omega_constant(OmegaParams{});
    const bool ok = omega.sign > 0 && verify_omega_threshold(omega, -5e7);
    return {ok, fmt("ln omega = %.2f vs threshold -5e7", omega.ln_mag)};
}

// 3. Three-way lambda equivalence: direct evaluation, batch tabulation, and
// the subset-enumeration oracle agree to 1e-9 relative on 1000 random n
// spread over five parameter settings, within 30 seconds.
Outcome criterion3() {
    const auto t0 = std::chrono::steady_clock::now();
    struct Config {
        SieveParams params;
        AdmissibleTuple tuple;
    };
    const std::array<Config, 5> configs = {{
        {SieveParams::with_caps(2, 1, Rational(1, 4), 10'000, 100, 10), AdmissibleTuple({0, 2})},
        {SieveParams::with_caps(3, 2, Rational(1, 4), 100'000, 300, 17),
         AdmissibleTuple({0, 2, 6})},
        {SieveParams::with_caps(4, 1, Rational(1, 4), 1'000'000, 1000, 31),
         AdmissibleTuple({0, 2, 6, 8})},
        {SieveParams::with_caps(5, 2, Rational(1, 5), 1'000'000, 200, 15),
         AdmissibleTuple({0, 2, 6, 8, 12})},
        {SieveParams::with_caps(6, 3, Rational(1, 4), 1'000'000, 2000, 31),
         AdmissibleTuple({0, 4, 6, 10, 12, 16})},
    }};

    std::mt19937_64 rng(20260823);
    u64 checked = 0;
    double worst = 0.0;
    for (const Config& c : configs) {
        const u64 lo = c.params.x / 2;
        const IntervalSpec window = IntervalSpec::with_delta(lo, 40'000);
        const WeightTable table = lambda_batch(window, c.tuple, c.params);
        std::uniform_int_distribution<u64> pick(window.lo(), window.hi());
        for (int trial = 0; trial < 200; ++trial) {
            const u64 n = pick(rng);
            const double direct = lambda_weight(n, c.tuple, c.params);
            const double batch = table.at(n);
            const double reference = oracle::lambda(n, c.tuple.offsets(), c.params.g_degree(),
                                                    c.params.big_d, c.params.d1);
            if (!rel_close(direct, batch, 1e-9) || !rel_close(direct, reference, 1e-9) ||
                !rel_close(batch, reference, 1e-9))
                return {false, fmt("mismatch at n=%llu: direct %.17g batch %.17g oracle %.17g",
                                   static_cast<unsigned long long>(n), direct, batch, reference)};
            worst = std::max(worst, std::fabs(direct - reference) /
                                        std::max({std::fabs(reference), 1.0}));
            ++checked;
        }
    }
    const double elapsed = seconds_since(t0);
    return {checked == 1000 && elapsed < 30.0,
            fmt("%llu values, 5 configs, worst relative gap %.2e, %.1fs",
                static_cast<unsigned long long>(checked), worst, elapsed)};
}

// 4. Admissibility: the short prime scan agrees with the exhaustive scan on
// every increasing tuple with k <= 4 and offsets <= 20, and no admissible
// 5-tuple fits in width < 12 (so 0,2,6,8,12 is width-minimal).
Outcome criterion4() {
    u64 agree = 0;
    std::vector<std::vector<u64>> stack;
    for (u64 a = 0; a <= 20; ++a) stack.push_back({a});
    while (!stack.empty()) {
        const std::vector<u64> t = std::move(stack.back());
        stack.pop_back();
        const AdmissibilityCheck quick = check_admissible(t);
        const AdmissibilityCheck full = check_admissible_full(t);
        if (quick.admissible != full.admissible || quick.witness_prime != full.witness_prime)
            return {false, "scan disagreement on a tuple with offsets <= 20"};
        ++agree;
        if (t.size() < 4)
            for (u64 next = t.back() + 1; next <= 20; ++next) {
                std::vector<u64> ext = t;
                ext.push_back(next);
                stack.push_back(std::move(ext));
            }
    }

    u64 candidates = 0;
    for (u64 a = 0; a <= 7; ++a)
        for (u64 b = a + 1; b <= 8; ++b)
            for (u64 c = b + 1; c <= 9; ++c)
                for (u64 d = c + 1; d <= 10; ++d)
                    for (u64 e = d + 1; e <= 11; ++e) {
                        ++candidates;
                        if (check_admissible_full({a, b, c, d, e}).admissible)
                            return {false,
                                    fmt("admissible 5-tuple of width %llu found below 12",
                                        static_cast<unsigned long long>(e - a))};
                    }
    const bool classic = AdmissibleTuple({0, 2, 6, 8, 12}).admissible();
    return {classic && candidates == 792,
            fmt("%llu tuples cross-checked; none of %llu width<12 candidates admissible",
                static_cast<unsigned long long>(agree),
                static_cast<unsigned long long>(candidates))};
}

// 5. Telescoping identity: over random intervals, summing the discrepancy
// over the coprime classes of every d <= 500 leaves exactly minus the log
// mass of the primes dividing d, to 1e-9 absolute.
Outcome criterion5() {
    std::mt19937_64 rng(5771);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const u64 lo = std::uniform_int_distribution<u64>(2, 1'000'000)(rng);
        const u64 len = std::uniform_int_distribution<u64>(10'000, 100'000)(rng);
        const IntervalSpec window = IntervalSpec::with_delta(lo, len - 1);
        const IntervalThetaTable table = theta_table(window);
        for (u64 d = 1; d <= 500; ++d) {
            const std::vector<double> sums = class_sums(table, d);
            const double per_class = table.total / static_cast<double>(euler_phi(d));
            KahanSum lhs;
            for (u64 c = 1; c <= d; ++c)
                if (std::gcd(c, d) == 1) lhs.add(sums[c % d] - per_class);
            double rhs = 0.0;
            for (const auto& [p, e] : factorize(d).factors)
                if (p >= window.lo() && p <= window.hi())
                    rhs -= std::log(static_cast<double>(p));
            const double gap = std::fabs(lhs.value() - rhs);
            worst = std::max(worst, gap);
            if (gap > 1e-9)
                return {false, fmt("d=%llu interval [%llu, %llu]: |lhs-rhs| = %.3e",
                                   static_cast<unsigned long long>(d),
                                   static_cast<unsigned long long>(window.lo()),
                                   static_cast<unsigned long long>(window.hi()), gap)};
        }
    }
    return {true, fmt("10 intervals x 500 moduli, worst |lhs-rhs| = %.2e", worst)};
}

// 6. Cauchy-Schwarz: E_i never exceeds its right side on desk-scale runs,
// and a run with a single surviving modulus attains equality to 1e-12.
Outcome criterion6() {
    struct Run {
        SieveParams params;
        AdmissibleTuple tuple;
        IntervalSpec window;
        u64 d_cap;
    };
    const std::vector<Run> runs = {
        {SieveParams::with_caps(2, 1, Rational(1, 4), 1000, 10, 3), AdmissibleTuple({0, 2}),
         IntervalSpec::with_delta(500, 400), 0},
        {SieveParams::derive(3, 1, Rational(1, 4), 100'000), AdmissibleTuple({0, 2, 6}),
         IntervalSpec::with_delta(100'000, 5000), 0},
        {SieveParams::derive(4, 1, Rational(1, 4), 1'000'000), AdmissibleTuple({0, 2, 6, 8}),
         IntervalSpec::with_delta(1'000'000, 8000), 50'000},
        {SieveParams::with_caps(5, 2, Rational(1, 5), 1'000'000, 200, 15),
         AdmissibleTuple({0, 2, 6, 8, 12}), IntervalSpec::with_delta(1'000'000, 6000), 0},
    };
    u64 checks = 0;
    for (const Run& r : runs) {
        for (u64 i = 1; i <= r.tuple.size(); ++i) {
            const ErrorTerm e = error_term_Ei(i, r.window, r.tuple, r.params, r.d_cap);
            if (e.e_i > e.cauchy_rhs * (1 + 1e-9))
                return {false, fmt("E_%llu = %.6g exceeds rhs %.6g",
                                   static_cast<unsigned long long>(i), e.e_i, e.cauchy_rhs)};
            ++checks;
        }
    }

    // d1 = 3, cap 4: moduli 1, 2, 3; d = 1 has zero discrepancy and the even
    // modulus has an empty residue set, so one weight survives.
    const ErrorTerm single =
        error_term_Ei(1, IntervalSpec::with_delta(500, 400), AdmissibleTuple({0, 2}),
                      SieveParams::with_caps(2, 1, Rational(1, 4), 1000, 10, 3), 4);
    if (!rel_close(single.e_i, single.cauchy_rhs, 1e-12) || single.e_i <= 0)
        return {false, fmt("single-modulus equality broke: E = %.17g vs rhs = %.17g",
                           single.e_i, single.cauchy_rhs)};
    return {true, fmt("%llu inequality checks across 4 runs; equality gap %.2e",
                      static_cast<unsigned long long>(checks),
                      std::fabs(single.e_i - single.cauchy_rhs) / single.e_i)};
}

// 7. Weak prime pair counts match the all-pairs oracle on 20 random windows.
Outcome criterion7() {
    std::mt19937_64 rng(1729);
    for (int trial = 0; trial < 20; ++trial) {
        const u64 len = std::uniform_int_distribution<u64>(100, 10'000)(rng);
        const u64 lo = std::uniform_int_distribution<u64>(1'000, 10'000'000 - len)(rng);
        const u64 gap = std::uniform_int_distribution<u64>(2, 50)(rng);
        const u64 engine = count_weak_prime_pairs(IntervalSpec::with_delta(lo, len), gap);
        const u64 reference = oracle::weak_prime_pairs(lo, lo + len, gap);
        if (engine != reference)
            return {false,
                    fmt("[%llu, %llu] gap<%llu: engine %llu vs oracle %llu",
                        static_cast<unsigned long long>(lo),
                        static_cast<unsigned long long>(lo + len),
                        static_cast<unsigned long long>(gap),
                        static_cast<unsigned long long>(engine),
                        static_cast<unsigned long long>(reference))};
    }
    return {true, "20 random windows in [1e3, 1e7] agree with the all-pairs count"};
}

// 8. Twin singular series: the truncated product at p <= 1e6 lands in
// [1.3195, 1.3215] and has stabilized to within 1e-4 of the p <= 1e4 value.
Outcome criterion8() {
    const AdmissibleTuple twin({0, 2});
    const double fine = singular_series(twin, 1'000'000).value;
    const double coarse = singular_series(twin, 10'000).value;
    const bool in_window = fine > 1.3195 && fine < 1.3215;
    const bool stable = std::fabs(fine - coarse) < 1e-4;
    return {in_window && stable,
            fmt("S(0,2) = %.6f at p<=1e6, moved %.2e since p<=1e4", fine,
                std::fabs(fine - coarse))};
}

// 9. Scope statement plus the one chart the asymptotic story supports at desk
// scale: the discrepancy aggregate against delta/ln x shrinks as x grows.
Outcome criterion9() {
    std::puts(
        "  note: the full-strength configuration (k0 = 3500000, l0 = 180, varpi = 1/1168)\n"
        "  concerns intervals near values of x so large that no direct computation can\n"
        "  reach them; nothing here reproduces that asymptotic claim. This build checks\n"
        "  finite-scale surrogates and reports the trend below.");
    const AdmissibleTuple tuple({0, 4, 6, 10, 12, 16});
    double previous = 0.0;
    bool decreasing = true;
    std::string chart;
    for (const u64 x : {100'000ULL, 1'000'000ULL, 10'000'000ULL}) {
        const SieveParams params = SieveParams::with_caps(6, 1, Rational(1, 4), x, 100, 10);
        const IntervalSpec window = IntervalSpec::with_log_power(x, 1.0);
        const double bv = bv_sum(1, window, tuple, params, 100);
        const double target = static_cast<double>(window.delta) /
                              std::log(static_cast<double>(x));
        const double ratio = bv / target;
        std::printf("  x = %.0e  delta = %llu  bv = %10.2f  bv/(delta/ln x) = %.5f\n",
                    static_cast<double>(x), static_cast<unsigned long long>(window.delta),
                    bv, ratio);
        chart += fmt("%.5f ", ratio);
        if (previous > 0 && ratio >= previous) decreasing = false;
        previous = ratio;
    }
    return {decreasing, "ratio sequence " + chart + (decreasing ? "is decreasing" : "does not decrease")};
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int a = 1; a < argc; ++a) {
        if (std::strcmp(argv[a], "--only") == 0 && a + 1 < argc) {
            only = std::atoi(argv[++a]);
        } else {
            std::fprintf(stderr, "usage: %s [--only N]\n", argv[0]);
            return 2;
        }
    }
    if (only < 0 || only > 9) {
        std::fprintf(stderr, "criterion number must be 1..9\n");
        return 2;
    }

    const std::array<Outcome (*)(), 9> criteria = {
        criterion1, criterion2, criterion3, criterion4, criterion5,
        criterion6, criterion7, criterion8, criterion9,
    };

    bool all_pass = true;
    for (int n = 1; n <= 9; ++n) {
        if (only != 0 && n != only) continue;
        Outcome o;
        try {
            o = criteria[static_cast<std::size_t>(n - 1)]();
        } catch (const std::exception& e) {
            o = {false, std::string("unexpected exception: ") + e.what()};
        }
        std::printf("criterion %d: %s - %s\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        all_pass = all_pass && o.pass;
    }
    return all_pass ? 0 : 1;
}
