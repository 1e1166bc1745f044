#pragma once

#include "eulersum/rational.hpp"
#include "eulersum/real_with_error.hpp"

namespace eulersum::constants {

/// Cache key for the closed-form constants appearing on the catalogued
/// identities' right-hand sides.
struct ConstantKey {
    enum class Kind { zeta, alt_zeta, polylog, ln2, euler_gamma };
    Kind kind = Kind::zeta;
    int s_or_p = 0;
    Rational x{0};  // polylog only

    friend bool operator<(const ConstantKey& a, const ConstantKey& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.s_or_p != b.s_or_p) return a.s_or_p < b.s_or_p;
        return cmp(a.x, b.x) < 0;
    }
};

/// Riemann zeta at integer s >= 2. Truncated p-series plus Euler-Maclaurin
/// correction through the n^{-s-5} term; |err| <= 1e-13. Cached.
RealWithError zeta(int s);

/// Alternating zeta; s = 1 gives ln 2, s >= 2 uses (1 - 2^{1-s}) zeta(s).
RealWithError alt_zeta(int s);

/// Li_p(x) for exact rational |x| <= 1, (p, x) != (1, 1). Cached.
RealWithError polylog(int p, const Rational& x);

RealWithError euler_gamma();
RealWithError ln2();

/// Li_p at a double argument in [-1, 1]; used by quadrature integrands where
/// x comes from a quadrature node. Direct series away from the endpoints,
/// the ln(x)-expansion near x = 1, and the square identity
/// Li_p(x) + Li_p(-x) = 2^{1-p} Li_p(x^2) near x = -1.
double polylog_real(int p, double x);

}  // namespace eulersum::constants
