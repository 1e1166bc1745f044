#pragma once

#include <cmath>
#include <cstdlib>

namespace eulersum {

/// A floating-point value paired with a non-negative absolute error bound
/// estimate. Arithmetic propagates bounds conservatively: add/sub add them,
/// mul/div use first-order propagation.
struct RealWithError {
    double value = 0.0;
    double err = 0.0;

    RealWithError() = default;
    RealWithError(double v, double e = 0.0) : value(v), err(std::abs(e)) {}

    static RealWithError exact(double v) { return {v, 0.0}; }

    RealWithError operator-() const { return {-value, err}; }

    friend RealWithError operator+(const RealWithError& a, const RealWithError& b) {
        return {a.value + b.value, a.err + b.err};
    }
    friend RealWithError operator-(const RealWithError& a, const RealWithError& b) {
        return {a.value - b.value, a.err + b.err};
    }
    friend RealWithError operator*(const RealWithError& a, const RealWithError& b) {
        return {a.value * b.value, std::abs(a.value) * b.err + std::abs(b.value) * a.err + a.err * b.err};
    }
    friend RealWithError operator/(const RealWithError& a, const RealWithError& b) {
        const double v = a.value / b.value;
        return {v, (a.err + std::abs(v) * b.err) / std::abs(b.value)};
    }

    friend RealWithError operator*(double s, const RealWithError& a) { return {s * a.value, std::abs(s) * a.err}; }
    friend RealWithError operator*(const RealWithError& a, double s) { return s * a; }
    friend RealWithError operator+(const RealWithError& a, double s) { return {a.value + s, a.err}; }
    friend RealWithError operator+(double s, const RealWithError& a) { return a + s; }
    friend RealWithError operator-(const RealWithError& a, double s) { return {a.value - s, a.err}; }
    friend RealWithError operator-(double s, const RealWithError& a) { return {s - a.value, a.err}; }
    friend RealWithError operator/(const RealWithError& a, double s) { return {a.value / s, a.err / std::abs(s)}; }

    RealWithError& operator+=(const RealWithError& o) { return *this = *this + o; }
    RealWithError& operator-=(const RealWithError& o) { return *this = *this - o; }
};

}  // namespace eulersum
