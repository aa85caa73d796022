#include "primegap/admissible.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <sstream>

namespace primegap {

namespace {

void require_increasing(const std::vector<u64>& offsets, const char* who) {
    if (offsets.empty())
        throw std::invalid_argument(std::string(who) + ": empty offset list");
    for (std::size_t i = 1; i < offsets.size(); ++i)
        if (offsets[i] <= offsets[i - 1])
            throw std::invalid_argument(std::string(who) + ": offsets must be strictly increasing");
}

u64 coverage(const std::vector<u64>& offsets, u64 p) {
    std::vector<std::uint8_t> seen(p, 0);
    u64 distinct = 0;
    for (u64 h : offsets) {
        const u64 r = h % p;
        if (!seen[r]) { seen[r] = 1; ++distinct; }
    }
    return distinct;
}

AdmissibilityCheck check_upto(const std::vector<u64>& offsets, u64 prime_limit) {
    require_increasing(offsets, "is_admissible");
    AdmissibilityCheck out;
    for (u64 p = 2; p <= prime_limit; ++p) {
        if (!is_prime(p)) continue;
        if (coverage(offsets, p) == p) {
            out.admissible = false;
            out.witness_prime = p;
            return out;
        }
    }
    out.admissible = true;
    return out;
}

}  // namespace

AdmissibilityCheck check_admissible(const std::vector<u64>& offsets) {
    return check_upto(offsets, offsets.size());
}

AdmissibilityCheck check_admissible_full(const std::vector<u64>& offsets) {
    require_increasing(offsets, "is_admissible");
    return check_upto(offsets, offsets.back() - offsets.front() + 1);
}

AdmissibleTuple::AdmissibleTuple(std::vector<u64> offsets) : offsets_(std::move(offsets)) {
    require_increasing(offsets_, "AdmissibleTuple");
}

bool AdmissibleTuple::admissible() const {
    if (!check_) check_ = check_admissible(offsets_);
    return check_->admissible;
}

std::optional<u64> AdmissibleTuple::witness() const {
    if (!check_) check_ = check_admissible(offsets_);
    return check_->witness_prime;
}

AdmissibleTuple AdmissibleTuple::canonicalized() const {
    std::vector<u64> shifted = offsets_;
    const u64 h1 = shifted.front();
    for (u64& h : shifted) h -= h1;
    return AdmissibleTuple(std::move(shifted));
}

AdmissibleTuple AdmissibleTuple::translated(i64 c) const {
    std::vector<u64> shifted;
    shifted.reserve(offsets_.size());
    for (u64 h : offsets_) {
        const i64 v = static_cast<i64>(h) + c;
        if (v < 0) throw std::invalid_argument("translated: shift makes an offset negative");
        shifted.push_back(static_cast<u64>(v));
    }
    return AdmissibleTuple(std::move(shifted));
}

std::string AdmissibleTuple::to_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < offsets_.size(); ++i) {
        if (i) os << ',';
        os << offsets_[i];
    }
    return os.str();
}

AdmissibleTuple AdmissibleTuple::parse(const std::string& text, bool normalize) {
    std::vector<u64> offsets;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        while (first < last && *first == ' ') ++first;
        while (last > first && *(last - 1) == ' ') --last;
        u64 value = 0;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last)
            throw std::invalid_argument("tuple parse: expected comma-separated integers");
        offsets.push_back(value);
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    AdmissibleTuple t(std::move(offsets));
    if (t.offsets().front() != 0) {
        if (!normalize)
            throw std::invalid_argument("tuple parse: first offset must be 0 (pass normalize to shift)");
        return t.canonicalized();
    }
    return t;
}

u64 residue_coverage(const AdmissibleTuple& tuple, u64 p) {
    if (!is_prime(p)) throw std::invalid_argument("residue_coverage: p must be prime");
    return coverage(tuple.offsets(), p);
}

AdmissibleTuple prime_tuple_construct(u64 k, u64 m, bool auto_shift) {
    if (k == 0) throw std::invalid_argument("prime_tuple_construct: k must be positive");
    for (;;) {
        const u64 need = m + k;
        // p_n < n (ln n + ln ln n) for n >= 6; pad generously for small n.
        u64 bound = 32;
        if (need >= 6) {
            const double nd = static_cast<double>(need);
            bound = static_cast<u64>(nd * (std::log(nd) + std::log(std::log(nd)))) + 16;
        }
        PrimeTable table = sieve_primes(2, bound);
        while (table.primes.size() < need) {
            bound *= 2;
            table = sieve_primes(2, bound);
        }
        std::vector<u64> offsets;
        offsets.reserve(k);
        const u64 base = table.primes[m];
        for (u64 j = 0; j < k; ++j) offsets.push_back(table.primes[m + j] - base);
        AdmissibleTuple t(std::move(offsets));
        if (t.admissible()) return t;
        if (!auto_shift)
            throw inadmissible_error(*t.witness(),
                                     "prime_tuple_construct: tuple at shift m=" + std::to_string(m) +
                                         " is covered mod " + std::to_string(*t.witness()));
        ++m;
    }
}

std::optional<AdmissibleTuple> greedy_narrow(u64 k, u64 search_width) {
    if (k == 0) throw std::invalid_argument("greedy_narrow: k must be positive");
    std::vector<std::uint8_t> alive(search_width + 1, 1);
    for (u64 p = 2; p <= k; ++p) {
        if (!is_prime(p)) continue;
        std::vector<u64> count(p, 0);
        for (u64 n = 0; n <= search_width; ++n)
            if (alive[n]) ++count[n % p];
        u64 best = 0;
        for (u64 r = 1; r < p; ++r)
            if (count[r] < count[best]) best = r;
        for (u64 n = best; n <= search_width; n += p) alive[n] = 0;
    }
    std::vector<u64> survivors;
    for (u64 n = 0; n <= search_width && survivors.size() < k; ++n)
        if (alive[n]) survivors.push_back(n);
    if (survivors.size() < k) return std::nullopt;
    const u64 first = survivors.front();
    for (u64& n : survivors) n -= first;
    AdmissibleTuple t(std::move(survivors));
    // One full class per prime p <= k was removed, so this cannot fail.
    if (!t.admissible()) throw std::logic_error("greedy_narrow: sieve produced a covered tuple");
    return t;
}

SingularSeriesValue singular_series(const AdmissibleTuple& tuple, u64 p_max) {
    const u64 k = tuple.size();
    if (p_max < k) throw std::invalid_argument("singular_series: p_max must be at least k");

    SingularSeriesValue out;
    out.p_max = p_max;
    if (!tuple.admissible()) {
        out.value = 0.0;
        out.witness_prime = tuple.witness();
        return out;
    }

    const PrimeTable table = sieve_primes(2, p_max);
    const double kd = static_cast<double>(k);
    KahanSum ln_prod;
    for (u64 p : table.primes) {
        const double pd = static_cast<double>(p);
        const double nu = static_cast<double>(coverage(tuple.offsets(), p));
        ln_prod.add(std::log1p(-nu / pd) - kd * std::log1p(-1.0 / pd));
    }
    out.value = std::exp(ln_prod.value());

    // Tail: exact per-prime magnitudes out to E = max(p_max, width, 2k), then
    // nu_p = k and |ln factor| <= k^2/p^2 beyond, summing to at most k^2/E.
    const u64 edge = std::max({p_max, tuple.width(), 2 * k});
    KahanSum tail_ln;
    if (edge > p_max) {
        const PrimeTable gap = sieve_primes(p_max + 1, edge);
        for (u64 p : gap.primes) {
            const double pd = static_cast<double>(p);
            const double nu = static_cast<double>(coverage(tuple.offsets(), p));
            tail_ln.add(std::fabs(std::log1p(-nu / pd) - kd * std::log1p(-1.0 / pd)));
        }
    }
    tail_ln.add(kd * kd / static_cast<double>(edge));
    out.tail_bound = std::expm1(tail_ln.value());
    return out;
}

}  // namespace primegap
