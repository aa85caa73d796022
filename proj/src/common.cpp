#include "primegap/common.hpp"

#include <cmath>

namespace primegap {

Rational Rational::approximate(double value, i64 max_den) {
    if (max_den < 1) throw std::invalid_argument("Rational::approximate: max_den must be >= 1");
    if (!std::isfinite(value)) throw std::invalid_argument("Rational::approximate: value must be finite");

    const bool neg = value < 0;
    double f = std::fabs(value);

    // Continued-fraction convergents p/q until the denominator cap; then try
    // the best semiconvergent between the last two.
    i64 p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        const double fa = std::floor(f);
        if (fa > 9.0e18) break;
        const i64 a = static_cast<i64>(fa);
        if (q1 > 0 && (a > (max_den - q0) / q1)) {
            const i64 cut = (max_den - q0) / q1;  // largest multiplier still under the cap
            if (cut > 0) {
                const Rational semi(neg ? -(cut * p1 + p0) : (cut * p1 + p0), cut * q1 + q0);
                const Rational conv(neg ? -p1 : p1, q1);
                return std::fabs(semi.to_double() - value) < std::fabs(conv.to_double() - value)
                           ? semi
                           : conv;
            }
            break;
        }
        const i64 p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const double rem = f - fa;
        if (rem < 1e-15) break;
        f = 1.0 / rem;
    }
    if (q1 == 0) return Rational(0, 1);
    return Rational(neg ? -p1 : p1, q1);
}

}  // namespace primegap
