#pragma once

#include <cmath>

// Overflow-safe evaluation of the hyperbolic ratios this library is built on.
//
// Every quantity of interest here is a ratio of sinh/cosh values whose
// arguments may reach several hundred (shape parameters up to ~700 must not
// overflow even though sinh(700) alone would).  All ratios are therefore
// rewritten in terms of exp of a *non-positive* argument:
//
//   sinh(a) = exp(a) * (1 - exp(-2a)) / 2,   a >= 0
//   cosh(a) = exp(a) * (1 + exp(-2a)) / 2,   a >= 0
//
// so that the exp factors combine into exp(a - b) <= 1 whenever a <= b.
// The (1 - exp(-2a)) factors are computed with expm1 to keep full relative
// accuracy for small arguments.

namespace bbk {

/// sinh(a)/sinh(b) for b > 0, without overflow for arguments up to ~1e15.
/// Exact 1.0 when a and b are bitwise equal.
inline double sinh_ratio(double a, double b) {
    if (a == 0.0) return 0.0;
    double sign = 1.0;
    if (a < 0.0) {
        sign = -1.0;
        a = -a;
    }
    return sign * std::exp(a - b) * (std::expm1(-2.0 * a) / std::expm1(-2.0 * b));
}

/// cosh(a)/cosh(b); both arguments may have either sign.
inline double cosh_ratio(double a, double b) {
    a = std::abs(a);
    b = std::abs(b);
    return std::exp(a - b) * ((1.0 + std::exp(-2.0 * a)) / (1.0 + std::exp(-2.0 * b)));
}

/// sinh(a)*sinh(b)/sinh(c) for a, b >= 0 and c > 0 with a + b <= c
/// (up to roundoff), the regime in which the result cannot overflow.
inline double sinh_prod_ratio(double a, double b, double c) {
    if (a == 0.0 || b == 0.0) return 0.0;
    return 0.5 * std::exp(a + b - c) *
           (std::expm1(-2.0 * a) * std::expm1(-2.0 * b) / (-std::expm1(-2.0 * c)));
}

}  // namespace bbk
