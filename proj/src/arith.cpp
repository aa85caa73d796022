#include "primegap/arith.hpp"

#include <algorithm>
#include <cmath>

namespace primegap {

bool PrimeTable::contains(u64 n) const {
    return std::binary_search(primes.begin(), primes.end(), n);
}

namespace {

// Odd-only simple sieve for the base primes up to limit.
std::vector<u64> small_primes_upto(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    out.push_back(2);
    const u64 m = (limit - 1) / 2;  // index i <-> odd 2i+1, i >= 1
    std::vector<std::uint8_t> comp(m + 1, 0);
    for (u64 i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
        if (comp[i]) continue;
        const u64 p = 2 * i + 1;
        for (u64 j = (p * p - 1) / 2; j <= m; j += p) comp[j] = 1;
    }
    for (u64 i = 1; i <= m; ++i)
        if (!comp[i]) out.push_back(2 * i + 1);
    return out;
}

template <typename Emit>
void sieve_range(u64 lo, u64 hi, std::size_t segment_size, Emit&& emit) {
    if (lo > hi) throw std::invalid_argument("sieve_primes: range is inverted");
    if (segment_size == 0) throw std::invalid_argument("sieve_primes: zero segment size");
    if (hi < 2) return;
    lo = std::max<u64>(lo, 2);

    const u64 root = static_cast<u64>(std::sqrt(static_cast<long double>(hi))) + 1;
    const std::vector<u64> base = small_primes_upto(root);

    std::vector<std::uint8_t> seg(segment_size);
    for (u64 seg_lo = lo; seg_lo <= hi; ) {
        const u64 seg_hi = std::min(hi, seg_lo + static_cast<u64>(segment_size) - 1);
        std::fill(seg.begin(), seg.end(), 1);
        for (u64 p : base) {
            if (p * p > seg_hi) break;
            u64 start = std::max(p * p, ((seg_lo + p - 1) / p) * p);
            for (u64 m = start; m <= seg_hi; m += p) seg[m - seg_lo] = 0;
        }
        for (u64 n = seg_lo; n <= seg_hi; ++n)
            if (seg[n - seg_lo]) emit(n);
        if (seg_hi == hi) break;
        seg_lo = seg_hi + 1;
    }
}

}  // namespace

PrimeTable sieve_primes(u64 lo, u64 hi, std::size_t segment_size) {
    PrimeTable t;
    t.range_lo = lo;
    t.range_hi = hi;
    sieve_range(lo, hi, segment_size, [&](u64 p) { t.primes.push_back(p); });
    return t;
}

std::vector<std::uint8_t> prime_mask(u64 lo, u64 hi, std::size_t segment_size) {
    if (lo > hi) throw std::invalid_argument("prime_mask: range is inverted");
    std::vector<std::uint8_t> mask(hi - lo + 1, 0);
    sieve_range(lo, hi, segment_size, [&](u64 p) { mask[p - lo] = 1; });
    return mask;
}

Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    auto strip = [&](u64 p) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e > 0) f.factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (u64 p = 5; p * p <= n; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (u64 p = 5; p * p <= n; p += 6)
        if (n % p == 0 || n % (p + 2) == 0) return false;
    return true;
}

int mobius(u64 n) {
    const Factorization f = factorize(n);
    int sign = 1;
    for (const auto& [p, e] : f.factors) {
        (void)p;
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

u64 euler_phi(u64 n) {
    const Factorization f = factorize(n);
    u64 r = 1;
    for (const auto& [p, e] : f.factors) {
        r *= p - 1;
        for (int i = 1; i < e; ++i) r *= p;
    }
    return r;
}

u64 tau3(u64 n) {
    const Factorization f = factorize(n);
    u64 r = 1;
    for (const auto& [p, e] : f.factors) {
        (void)p;
        r *= static_cast<u64>(e + 1) * static_cast<u64>(e + 2) / 2;
    }
    return r;
}

double theta_chebyshev(u64 n) {
    if (n == 0) throw std::invalid_argument("theta_chebyshev: n must be positive");
    return is_prime(n) ? std::log(static_cast<double>(n)) : 0.0;
}

mpz_class poly_P(i64 n, std::span<const u64> offsets) {
    mpz_class prod = 1;
    for (u64 h : offsets) {
        const i64 factor = n + static_cast<i64>(h);
        if (factor <= 0)
            throw std::invalid_argument("poly_P: n + h must be positive for every offset");
        prod *= factor;
    }
    return prod;
}

u64 rho2(u64 d, std::span<const u64> offsets) {
    if (d == 0) throw std::invalid_argument("rho2: d must be positive");
    const Factorization f = factorize(d);
    u64 r = 1;
    for (const auto& [p, e] : f.factors) {
        if (e > 1) throw std::invalid_argument("rho2: d must be squarefree");
        std::vector<u64> res;
        res.reserve(offsets.size());
        for (u64 h : offsets) res.push_back(h % p);
        std::sort(res.begin(), res.end());
        res.erase(std::unique(res.begin(), res.end()), res.end());
        r *= res.size();
    }
    return r;
}

}  // namespace primegap
