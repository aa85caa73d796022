#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace primegap {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Raised when a computation would blow past a configured cap (batch memory
// budget, modulus enumeration cap, smooth-factor cap). The message names the
// cap that was hit.
class resource_error : public std::runtime_error {
  public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Inadmissibility reported as an error; carries the least covering prime.
class inadmissible_error : public std::domain_error {
  public:
    inadmissible_error(u64 witness_prime, const std::string& msg)
        : std::domain_error(msg), witness(witness_prime) {}
    u64 witness;
};

// Compensated (Kahan) accumulator. Every aggregate in this library is summed
// through one of these in a fixed order, so results depend only on the input
// sequence, not on thread count.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

// Reduced fraction with 64-bit parts; holds exponent parameters like 1/1168.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n, i64 d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool positive() const { return num > 0; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }

    // a <= p/q without overflow for the small operands used here.
    bool leq(i64 p, i64 q) const {
        return static_cast<__int128>(num) * q <= static_cast<__int128>(p) * den;
    }

    // Best rational approximation with denominator <= max_den (continued
    // fractions); used to back-derive an exponent from explicit caps.
    static Rational approximate(double value, i64 max_den);
};

}  // namespace primegap
