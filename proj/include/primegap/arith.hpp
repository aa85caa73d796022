#pragma once

#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "primegap/common.hpp"

namespace primegap {

// Ascending primes in [range_lo, range_hi], both ends inclusive.
struct PrimeTable {
    u64 range_lo = 0;
    u64 range_hi = 0;
    std::vector<u64> primes;

    bool contains(u64 n) const;
};

inline constexpr std::size_t kDefaultSegmentSize = std::size_t{1} << 18;

// Segmented sieve of Eratosthenes. Memory is O(sqrt(hi) + segment_size);
// the result does not depend on segment_size.
PrimeTable sieve_primes(u64 lo, u64 hi, std::size_t segment_size = kDefaultSegmentSize);

// Byte mask over [lo, hi]: mask[n - lo] != 0 iff n is prime. Backs the
// interval scans in the sum and discrepancy modules.
std::vector<std::uint8_t> prime_mask(u64 lo, u64 hi,
                                     std::size_t segment_size = kDefaultSegmentSize);

struct Factorization {
    u64 n = 1;
    std::vector<std::pair<u64, int>> factors;  // (prime, exponent), ascending
};

Factorization factorize(u64 n);
bool is_prime(u64 n);

// mu(n): 0 on a squared factor, else (-1)^(number of prime factors).
int mobius(u64 n);

// Euler totient.
u64 euler_phi(u64 n);

// Ordered triples (a,b,c) with abc = n; multiplicative, C(e+2,2) per prime
// power p^e.
u64 tau3(u64 n);

// log n at primes, 0 elsewhere.
double theta_chebyshev(u64 n);

// Exact product of (n + h) over the tuple offsets; every factor must be
// positive.
mpz_class poly_P(i64 n, std::span<const u64> offsets);

// Number of residues c mod d with prod(c + h) == 0 (mod d), for squarefree d.
// Multiplicative; the per-prime root count is the number of distinct offset
// residues mod p.
u64 rho2(u64 d, std::span<const u64> offsets);

}  // namespace primegap
