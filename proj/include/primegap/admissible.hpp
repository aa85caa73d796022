#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primegap/arith.hpp"
#include "primegap/common.hpp"

namespace primegap {

struct AdmissibilityCheck {
    bool admissible = false;
    std::optional<u64> witness_prime;  // least prime whose classes are all covered
};

// Covered-classes test over primes p <= k. Primes above k can never be
// covered because only k residues are occupied.
AdmissibilityCheck check_admissible(const std::vector<u64>& offsets);

// Reference form of the same test over primes p <= width + 1.
AdmissibilityCheck check_admissible_full(const std::vector<u64>& offsets);

// Strictly increasing nonnegative offsets h_1 < ... < h_k. Construction
// validates monotonicity only; admissibility is computed once on demand so
// inadmissible inputs can still be carried to the operations that report on
// them.
class AdmissibleTuple {
  public:
    explicit AdmissibleTuple(std::vector<u64> offsets);

    const std::vector<u64>& offsets() const { return offsets_; }
    std::size_t size() const { return offsets_.size(); }
    u64 width() const { return offsets_.back() - offsets_.front(); }
    bool canonical() const { return offsets_.front() == 0; }

    bool admissible() const;
    std::optional<u64> witness() const;  // set iff inadmissible

    AdmissibleTuple canonicalized() const;  // shifted so h_1 = 0
    AdmissibleTuple translated(i64 c) const;

    std::string to_text() const;  // "0,2,6,8,12"
    // Parses the comma-separated format. Non-canonical input (h_1 != 0) is
    // rejected unless normalize is set, in which case it is shifted.
    static AdmissibleTuple parse(const std::string& text, bool normalize = false);

  private:
    std::vector<u64> offsets_;
    mutable std::optional<AdmissibilityCheck> check_;
};

// nu_p: number of distinct residue classes mod p hit by the offsets.
u64 residue_coverage(const AdmissibleTuple& tuple, u64 p);

// Offsets of k consecutive primes p_{m+1}, ..., p_{m+k} rebased to the first
// one (indices 1-based, so m = 0 starts at 2). Throws inadmissible_error when
// the resulting tuple is covered unless auto_shift is set, in which case m is
// incremented to the first admissible shift.
AdmissibleTuple prime_tuple_construct(u64 k, u64 m, bool auto_shift = false);

// Greedy narrow tuple: sieve [0, search_width] by one residue class per
// prime p <= k (the class with the fewest surviving candidates, ties to the
// smallest residue), then take the first k survivors. Returns nothing when
// fewer than k candidates survive.
std::optional<AdmissibleTuple> greedy_narrow(u64 k, u64 search_width);

struct SingularSeriesValue {
    double value = 0.0;
    u64 p_max = 0;
    // Bound on |prod_{p > p_max} factor - 1|, from nu_p = k beyond
    // max(p_max, h_k) and crude per-prime bounds in between.
    double tail_bound = 0.0;
    std::optional<u64> witness_prime;  // set (with value 0) for inadmissible input
};

// Truncated Hardy-Littlewood product prod_{p <= p_max} (1 - nu_p/p)(1 - 1/p)^{-k}.
SingularSeriesValue singular_series(const AdmissibleTuple& tuple, u64 p_max);

}  // namespace primegap
