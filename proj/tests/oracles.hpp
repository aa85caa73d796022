#pragma once

// Reference implementations for the test suite. Everything here favors the
// most obvious possible formulation over speed and shares no code with the
// library: trial division instead of sieves, literal divisor scans instead of
// subset pruning, exact GMP rationals instead of log-space doubles. Expected
// values in the tests come from these, never the other way around.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<u64> primes_in(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 n = lo; n <= hi && n >= lo; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

inline int mobius(u64 n) {
    int factors = 0;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++factors;
        }
    }
    if (n > 1) ++factors;
    return factors % 2 == 0 ? 1 : -1;
}

inline u64 phi(u64 n) {
    u64 count = 0;
    for (u64 c = 1; c <= n; ++c)
        if (std::gcd(c, n) == 1) ++count;
    return count;
}

// Ordered triples (a, b, c) with a*b*c = n, by literal double divisor scan.
inline u64 tau3(u64 n) {
    u64 count = 0;
    for (u64 a = 1; a <= n; ++a) {
        if (n % a) continue;
        const u64 m = n / a;
        for (u64 b = 1; b <= m; ++b)
            if (m % b == 0) ++count;
    }
    return count;
}

inline mpz_class poly_p(i64 n, const std::vector<u64>& offsets) {
    mpz_class prod = 1;
    for (u64 h : offsets) prod *= mpz_class(static_cast<long>(n) + static_cast<long>(h));
    return prod;
}

// Residues c mod d with P(c) == 0 (mod d), counted one by one.
inline u64 rho2(u64 d, const std::vector<u64>& offsets) {
    u64 count = 0;
    for (u64 c = 0; c < d; ++c) {
        u64 prod = 1 % d;
        for (u64 h : offsets) prod = (prod * ((c + h) % d)) % d;
        if (prod == 0) ++count;
    }
    return count;
}

// C_i(d) by scanning every residue: coprime to d and P(c - h_i) == 0 (mod d).
inline std::vector<u64> ci_set(u64 d, const std::vector<u64>& offsets, u64 i) {
    std::vector<u64> out;
    const i64 hi = static_cast<i64>(offsets[i - 1]);
    const i64 dd = static_cast<i64>(d);
    for (u64 c = 1; c <= d; ++c) {
        if (std::gcd(c, d) != 1) continue;
        i64 prod = 1 % dd;
        for (u64 h : offsets) {
            i64 f = ((static_cast<i64>(c) - hi + static_cast<i64>(h)) % dd + dd) % dd;
            prod = (prod * f) % dd;
        }
        if (prod == 0) out.push_back(c);
    }
    return out;
}

inline double factorial(u64 n) {
    double f = 1.0;
    for (u64 k = 2; k <= n; ++k) f *= static_cast<double>(k);
    return f;
}

// g(y) directly: pow and a double factorial, no log-space assembly.
inline double weight_g(double y, u64 degree, u64 big_d) {
    if (y >= static_cast<double>(big_d)) return 0.0;
    return std::pow(std::log(static_cast<double>(big_d) / y), static_cast<double>(degree)) /
           factorial(degree);
}

// lambda(n) the long way: gcd(P(n), product of primes <= D1), factored by
// trial division, every squarefree divisor enumerated by bit mask.
inline double lambda(u64 n, const std::vector<u64>& offsets, u64 degree, u64 big_d, u64 d1) {
    mpz_class smooth_part = 1;
    for (u64 p = 2; p <= d1; ++p)
        if (is_prime(p)) smooth_part *= mpz_class(static_cast<unsigned long>(p));
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), poly_p(static_cast<i64>(n), offsets).get_mpz_t(),
            smooth_part.get_mpz_t());

    std::vector<u64> primes;
    for (u64 p = 2; p <= d1; ++p)
        if (is_prime(p) && mpz_divisible_ui_p(g.get_mpz_t(), static_cast<unsigned long>(p)))
            primes.push_back(p);

    double sum = 0.0;
    for (u64 mask = 0; mask < (u64{1} << primes.size()); ++mask) {
        u64 d = 1;
        int bits = 0;
        for (std::size_t j = 0; j < primes.size(); ++j)
            if (mask >> j & 1) {
                d *= primes[j];
                ++bits;
            }
        const double term = weight_g(static_cast<double>(d), degree, big_d);
        sum += (bits % 2 == 0) ? term : -term;
    }
    return sum;
}

inline double s1(u64 lo, u64 hi, const std::vector<u64>& offsets, u64 degree, u64 big_d,
                 u64 d1) {
    double sum = 0.0;
    for (u64 n = lo; n <= hi; ++n) {
        const double l = lambda(n, offsets, degree, big_d, d1);
        sum += l * l;
    }
    return sum;
}

inline double s2(u64 lo, u64 hi, const std::vector<u64>& offsets, u64 degree, u64 big_d,
                 u64 d1) {
    double sum = 0.0;
    for (u64 n = lo; n <= hi; ++n) {
        const double l = lambda(n, offsets, degree, big_d, d1);
        double theta = 0.0;
        for (u64 h : offsets)
            if (is_prime(n + h)) theta += std::log(static_cast<double>(n + h));
        sum += l * l * theta;
    }
    return sum;
}

// Unordered prime pairs with 1 < |p1 - p2| < gap_bound, every pair inspected.
inline u64 weak_prime_pairs(u64 lo, u64 hi, u64 gap_bound) {
    const std::vector<u64> ps = primes_in(lo, hi);
    u64 count = 0;
    for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b = a + 1; b < ps.size(); ++b) {
            const u64 gap = ps[b] - ps[a];
            if (gap > 1 && gap < gap_bound) ++count;
        }
    return count;
}

inline u64 two_prime_translates(u64 lo, u64 hi, const std::vector<u64>& offsets) {
    u64 count = 0;
    for (u64 n = lo; n <= hi; ++n) {
        int hits = 0;
        for (u64 h : offsets)
            if (is_prime(n + h)) ++hits;
        if (hits >= 2) ++count;
    }
    return count;
}

// Delta(theta; d, c) from the definition, every n visited once.
inline double discrepancy_theta(u64 d, u64 c, u64 lo, u64 hi) {
    double class_part = 0.0, total = 0.0;
    for (u64 n = lo; n <= hi; ++n) {
        if (!is_prime(n)) continue;
        const double t = std::log(static_cast<double>(n));
        total += t;
        if (n % d == c % d) class_part += t;
    }
    return class_part - total / static_cast<double>(phi(d));
}

// Truncated singular series by direct per-prime counting.
inline double singular_series(const std::vector<u64>& offsets, u64 p_max) {
    const u64 k = offsets.size();
    double prod = 1.0;
    for (u64 p = 2; p <= p_max; ++p) {
        if (!is_prime(p)) continue;
        std::vector<bool> seen(p, false);
        u64 nu = 0;
        for (u64 h : offsets)
            if (!seen[h % p]) {
                seen[h % p] = true;
                ++nu;
            }
        prod *= (1.0 - static_cast<double>(nu) / static_cast<double>(p)) /
                std::pow(1.0 - 1.0 / static_cast<double>(p), static_cast<double>(k));
    }
    return prod;
}

inline mpz_class factorial_exact(u64 n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

inline mpz_class binomial_exact(u64 n, u64 k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

// omega with kappa1 = kappa2 = 0 as an exact rational, rendered to the same
// "m.mmm...e+E" shape the engine's formatter emits.
inline std::string omega_rational(u64 k0, u64 l0, i64 vp, i64 vq, int digits) {
    mpq_class bracket(2 * (2 * l0 + 1) * k0, (l0 + 1) * (k0 + 2 * l0 + 1));
    bracket.canonicalize();
    mpq_class second(4 * vq, vq + 4 * vp);
    second.canonicalize();
    bracket -= second;
    mpq_class omega = bracket * mpq_class(binomial_exact(2 * l0, l0)) /
                      mpq_class(factorial_exact(k0 + 2 * l0));
    omega.canonicalize();

    mpf_class f(omega, 256);
    mp_exp_t exp10 = 0;
    const std::string digits_str =
        f.get_str(exp10, 10, static_cast<std::size_t>(digits));
    std::string body = digits_str;
    std::string sign;
    if (!body.empty() && body[0] == '-') {
        sign = "-";
        body.erase(0, 1);
    }
    while (static_cast<int>(body.size()) < digits) body += '0';
    std::string out = sign + body.substr(0, 1) + "." + body.substr(1) + "e";
    const long e = static_cast<long>(exp10) - 1;
    out += (e < 0 ? "-" : "+") + std::to_string(e < 0 ? -e : e);
    return out;
}

}  // namespace oracle
