#pragma once

#include "eulersum/rational.hpp"
#include "eulersum/real_with_error.hpp"

namespace eulersum::combinatorics {

/// Generalized harmonic number: sum_{j<=n} j^{-m}, exact. harmonic(n,1) = H_n,
/// harmonic(0,m) = 0.
Rational harmonic(long n, int m);

/// Alternating harmonic number: sum_{j<=n} (-1)^{j-1} j^{-m}, exact.
Rational alt_harmonic(long n, int m);

/// Partial polylogarithm sum: sum_{k<=n} x^k / k^l, exact rational.
Rational partial_polylog(long n, int l, const Rational& x);

/// Complete exponential Bell polynomial value Y_k(n) at the harmonic-number
/// arguments, by the recurrence Y_k(n) = k sum_{m<=n} Y_{k-1}(m)/m with
/// Y_0 = 1, memoized. Y_k(0) = 0 for k >= 1.
Rational bell_Y(int k, long n);

/// Y_k(n) from the explicit polynomial formulas in harmonic numbers,
/// available for k = 1..4. Must equal bell_Y(k, n) exactly.
Rational bell_Y_explicit(int k, long n);

/// Unsigned Stirling number of the first kind, triangular recurrence
/// S(n+1,k) = S(n,k-1) + n S(n,k), S(1,1) = 1, memoized. Out-of-range k
/// (k <= 0 for n >= 1, or k > n) returns 0.
BigInt stirling_first(long n, long k);

/// S(n,k) from the closed forms in harmonic numbers, k = 1..5. The result is
/// integral and equals stirling_first(n,k).
Rational stirling_via_harmonics(long n, int k);

/// Truncated generating-function residual:
/// (-1)^p p! sum_{n=p}^{N} S(n,p) x^n/n!  -  ln^p(1-x), |x| < 1.
/// The series part is computed exactly; callers assert smallness.
RealWithError genfun_check(int p, const Rational& x, int N);

}  // namespace eulersum::combinatorics
