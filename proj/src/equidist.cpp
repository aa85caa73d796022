#include "primegap/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include <json.hpp>

#include "primegap/parallel.hpp"

namespace primegap {

namespace {

constexpr u64 kModulusCap = 10'000'000;   // enumerate_smooth_moduli budget
constexpr u64 kDetailCap = 1'000'000;     // per-modulus detail rows in a report
constexpr u64 kResidueCap = 1'000'000;    // residues per C_i(d)

u64 pow_mod(u64 base, u64 exp, u64 mod) {
    u64 r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) r = static_cast<u64>(static_cast<u128>(r) * base % mod);
        base = static_cast<u64>(static_cast<u128>(base) * base % mod);
        exp >>= 1;
    }
    return r;
}

}  // namespace

IntervalThetaTable make_table(const IntervalSpec& interval,
                              const std::function<double(u64)>& gamma) {
    IntervalThetaTable t;
    t.interval = interval;
    t.values.resize(interval.length());
    const u64 lo = interval.lo();
    parallel_for_chunks(0, interval.length() - 1, [&](u64 a, u64 b, std::size_t) {
        for (u64 j = a; j <= b; ++j) t.values[j] = gamma(lo + j);
    });
    // Summed in the same order class_sum uses for d = 1, so Delta(gamma;1,1)
    // is exactly zero rather than a few ulps of reduction skew.
    KahanSum total;
    for (double v : t.values) total.add(v);
    t.total = total.value();
    return t;
}

IntervalThetaTable theta_table(const IntervalSpec& interval) {
    const std::vector<std::uint8_t> mask = prime_mask(interval.lo(), interval.hi());
    const u64 lo = interval.lo();
    return make_table(interval, [&](u64 n) {
        return mask[n - lo] ? std::log(static_cast<double>(n)) : 0.0;
    });
}

double class_sum(const IntervalThetaTable& table, u64 d, u64 c) {
    if (d == 0) throw std::invalid_argument("class_sum: d must be positive");
    const u64 lo = table.interval.lo();
    const u64 len = table.interval.length();
    KahanSum acc;
    for (u64 j = (c % d + d - lo % d) % d; j < len; j += d) acc.add(table.values[j]);
    return acc.value();
}

std::vector<double> class_sums(const IntervalThetaTable& table, u64 d) {
    if (d == 0) throw std::invalid_argument("class_sums: d must be positive");
    std::vector<KahanSum> acc(d);
    const u64 lo = table.interval.lo();
    u64 r = lo % d;
    for (u64 j = 0; j < table.interval.length(); ++j) {
        acc[r].add(table.values[j]);
        if (++r == d) r = 0;
    }
    std::vector<double> out(d);
    for (u64 c = 0; c < d; ++c) out[c] = acc[c].value();
    return out;
}

double discrepancy_delta(const IntervalThetaTable& table, u64 d, u64 c) {
    if (c < 1 || c > d) throw std::invalid_argument("discrepancy_delta: need 1 <= c <= d");
    if (std::gcd(c, d) != 1)
        throw std::invalid_argument("discrepancy_delta: c must be coprime to d");
    return class_sum(table, d, c) -
           table.total / static_cast<double>(euler_phi(d));
}

ResidueSet residue_set_Ci(u64 d, const AdmissibleTuple& tuple, u64 i, u64 d1) {
    if (i < 1 || i > tuple.size())
        throw std::invalid_argument("residue_set_Ci: index i out of range");
    if (d == 0) throw std::invalid_argument("residue_set_Ci: d must be positive");

    ResidueSet out;
    out.d = d;
    out.i = i;
    if (d == 1) {
        out.residues = {1};
        return out;
    }

    const Factorization f = factorize(d);
    for (const auto& [p, e] : f.factors) {
        if (e > 1) throw std::invalid_argument("residue_set_Ci: d must be squarefree");
        if (p > d1) throw std::invalid_argument("residue_set_Ci: d has a prime factor above D1");
    }

    const u64 hi_off = tuple.offsets()[i - 1];
    std::vector<u64> residues{0};
    u64 m = 1;
    for (const auto& [p, e] : f.factors) {
        // Roots of P(c - h_i) mod p with c nonzero: c == h_i - h_j, j = 1..k.
        std::vector<u64> roots;
        for (u64 h : tuple.offsets()) {
            const u64 r = (hi_off % p + p - h % p) % p;
            if (r != 0) roots.push_back(r);
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

        if (static_cast<u128>(residues.size()) * roots.size() > kResidueCap)
            throw resource_error("residue_set_Ci: residue set exceeds 1e6 entries");
        std::vector<u64> merged;
        merged.reserve(residues.size() * roots.size());
        const u64 m_inv = pow_mod(m % p, p - 2, p);  // p prime, p does not divide m
        for (u64 r : residues) {
            for (u64 a : roots) {
                const u64 t = static_cast<u64>(
                    static_cast<u128>((a + p - r % p) % p) * m_inv % p);
                merged.push_back(r + m * t);
            }
        }
        residues = std::move(merged);
        m *= p;
    }
    std::sort(residues.begin(), residues.end());
    out.residues = std::move(residues);
    return out;
}

std::vector<u64> enumerate_smooth_moduli(u64 d1, u64 cap) {
    std::vector<u64> out{1};
    if (cap <= 1) {
        out.clear();
        return out;
    }
    if (d1 >= 2) {
        const PrimeTable table = sieve_primes(2, d1);
        auto dfs = [&](auto&& self, std::size_t start, u64 prod) -> void {
            for (std::size_t j = start; j < table.primes.size(); ++j) {
                const u128 next = static_cast<u128>(prod) * table.primes[j];
                if (next >= cap) break;
                if (out.size() >= kModulusCap)
                    throw resource_error("enumerate_smooth_moduli: more than 1e7 moduli");
                out.push_back(static_cast<u64>(next));
                self(self, j + 1, static_cast<u64>(next));
            }
        };
        dfs(dfs, 0, 1);
        std::sort(out.begin(), out.end());
    }
    return out;
}

namespace {

u64 default_cap(const SieveParams& params, u64 d_cap) {
    const u128 d2 = static_cast<u128>(params.big_d) * params.big_d;
    if (d_cap == 0)
        return d2 > static_cast<u128>(~u64{0}) ? ~u64{0} : static_cast<u64>(d2);
    if (static_cast<u128>(d_cap) > d2)
        throw std::invalid_argument("bv: d_cap must not exceed D^2");
    return d_cap;
}

// Shared core: per-modulus weights w_d = sum_{c in C_i(d)} |Delta(theta;d,c)|
// folded by any caller-chosen accumulator. Moduli are processed in ascending
// order through the deterministic chunked reducer.
double fold_moduli(u64 i, const IntervalSpec& interval, const AdmissibleTuple& tuple,
                   const SieveParams& params, u64 d_cap,
                   const std::function<double(u64 d, double w)>& weight_of) {
    const std::vector<u64> moduli = enumerate_smooth_moduli(params.d1, d_cap);
    if (moduli.empty()) return 0.0;
    const IntervalThetaTable table = theta_table(interval);
    return chunked_sum(0, moduli.size() - 1, [&](u64 idx) {
        const u64 d = moduli[idx];
        const ResidueSet set = residue_set_Ci(d, tuple, i, params.d1);
        const double per_class = table.total / static_cast<double>(euler_phi(d));
        KahanSum w;
        for (u64 c : set.residues) w.add(std::fabs(class_sum(table, d, c) - per_class));
        return weight_of(d, w.value());
    });
}

}  // namespace

double bv_sum(u64 i, const IntervalSpec& interval, const AdmissibleTuple& tuple,
              const SieveParams& params, u64 d_cap) {
    return fold_moduli(i, interval, tuple, params, default_cap(params, d_cap),
                       [](u64, double w) { return w; });
}

ErrorTerm error_term_Ei(u64 i, const IntervalSpec& interval, const AdmissibleTuple& tuple,
                        const SieveParams& params, u64 d_cap) {
    const u64 cap = default_cap(params, d_cap);
    ErrorTerm out;
    out.e_i = fold_moduli(i, interval, tuple, params, cap, [&](u64 d, double w) {
        return static_cast<double>(tau3(d)) * static_cast<double>(rho2(d, tuple.offsets())) * w;
    });
    const double sq = fold_moduli(i, interval, tuple, params, cap, [&](u64 d, double w) {
        const double t = static_cast<double>(tau3(d)) * static_cast<double>(rho2(d, tuple.offsets()));
        return t * t * w;
    });
    const double plain = fold_moduli(i, interval, tuple, params, cap,
                                     [](u64, double w) { return w; });
    out.cauchy_rhs = std::sqrt(sq) * std::sqrt(plain);
    return out;
}

DiscrepancyReport discrepancy_report(const IntervalSpec& interval, const AdmissibleTuple& tuple,
                                     const SieveParams& params, u64 designated_i, u64 d_cap,
                                     double b) {
    const u64 cap = default_cap(params, d_cap);
    const std::vector<u64> moduli = enumerate_smooth_moduli(params.d1, cap);
    if (moduli.size() > kDetailCap)
        throw resource_error("discrepancy_report: per-modulus detail capped at 1e6 moduli");

    DiscrepancyReport r;
    r.interval = interval;
    r.designated_i = designated_i;
    r.b = b;

    const IntervalThetaTable table = theta_table(interval);
    KahanSum bv;
    for (u64 d : moduli) {
        const ResidueSet set = residue_set_Ci(d, tuple, designated_i, params.d1);
        const double per_class = table.total / static_cast<double>(euler_phi(d));
        std::vector<std::pair<u64, double>> rows;
        rows.reserve(set.residues.size());
        for (u64 c : set.residues) {
            const double delta = class_sum(table, d, c) - per_class;
            rows.emplace_back(c, delta);
            bv.add(std::fabs(delta));
        }
        r.per_modulus.emplace_back(d, std::move(rows));
    }
    r.bv_sum = bv.value();

    for (u64 i = 1; i <= tuple.size(); ++i) {
        const ErrorTerm e = error_term_Ei(i, interval, tuple, params, cap);
        r.e_terms.push_back(e.e_i);
        r.cauchy_rhs.push_back(e.cauchy_rhs);
    }

    const double lnx = std::log(static_cast<double>(interval.x));
    r.target = static_cast<double>(interval.delta) * std::pow(lnx, -b);
    r.ratio_at_b = r.target > 0 ? r.bv_sum / r.target : 0.0;
    return r;
}

void write_csv(const DiscrepancyReport& report, std::ostream& out) {
    out << "d,c,delta\n";
    char buf[40];
    for (const auto& [d, rows] : report.per_modulus) {
        for (const auto& [c, delta] : rows) {
            std::snprintf(buf, sizeof buf, "%.17g", delta);
            out << d << ',' << c << ',' << buf << '\n';
        }
    }
}

void write_json_summary(const DiscrepancyReport& report, std::ostream& out) {
    nlohmann::json j;
    j["bv_sum"] = report.bv_sum;
    j["e_terms"] = report.e_terms;
    j["cauchy_rhs"] = report.cauchy_rhs;
    j["target"] = report.target;
    j["ratio_at_B"] = report.ratio_at_b;
    j["B"] = report.b;
    j["designated_i"] = report.designated_i;
    j["interval"] = {{"x", report.interval.x}, {"delta", report.interval.delta}};
    out << j.dump(2) << '\n';
}

}  // namespace primegap
