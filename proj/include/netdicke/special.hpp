#pragma once

#include <cmath>

// Small numeric helpers shared by the self-consistency and free-energy code.
// All of these are written to stay finite for arguments up to beta ~ 1e5 and
// gaps up to ~1e3, where the naive expressions overflow or lose all digits.

namespace netdicke {

// tanh with an early out: for |y| > 20 the result is +/-1 to machine
// precision and tanh() itself is the hot-path cost in degree integrals.
inline double tanh_fast(double y) {
    if (y > 20.0) return 1.0;
    if (y < -20.0) return -1.0;
    return std::tanh(y);
}

// tanh(y)/y, continuous through y = 0.
inline double tanhc(double y) {
    double a = std::abs(y);
    if (a < 1e-4) {
        double y2 = y * y;
        return 1.0 - y2 / 3.0 + 2.0 * y2 * y2 / 15.0;
    }
    return tanh_fast(y) / y;
}

// ln(2 cosh(y)) without overflow: |y| + ln(1 + e^{-2|y|}).
inline double ln_2cosh(double y) {
    double a = std::abs(y);
    return a + std::log1p(std::exp(-2.0 * a));
}

// ln(2 cosh(y1)) - ln(2 cosh(y2)) for y1, y2 >= 0, computed without
// cancellation between two large magnitudes.
inline double ln_2cosh_diff(double y1, double y2) {
    return (y1 - y2) + std::log1p(std::exp(-2.0 * y1)) -
           std::log1p(std::exp(-2.0 * y2));
}

}  // namespace netdicke
