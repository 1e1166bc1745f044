#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "eulersum/combinatorics.hpp"

using namespace eulersum;
namespace comb = eulersum::combinatorics;

namespace {

// Independent oracle for Y_k(n): coefficient extraction from
// exp(sum_m x_m t^m/m!) with x_m = (m-1)! zeta_n(m), all in exact rationals.
Rational bell_by_generating_function(int k, long n) {
    std::vector<Rational> s(k + 1, Rational(0));
    for (int m = 1; m <= k; ++m) s[m] = comb::harmonic(n, m) / m;  // x_m t^m/m! coefficient
    std::vector<Rational> e(k + 1, Rational(0));
    e[0] = 1;
    std::vector<Rational> pw(k + 1, Rational(0));
    pw[0] = 1;
    Rational ifact(1);
    for (int i = 1; i <= k; ++i) {
        // pw *= s, truncated at degree k
        std::vector<Rational> nxt(k + 1, Rational(0));
        for (int a = 0; a <= k; ++a) {
            if (pw[a] == 0) continue;
            for (int b = 1; a + b <= k; ++b) nxt[a + b] += pw[a] * s[b];
        }
        pw = std::move(nxt);
        ifact *= i;
        for (int d = 0; d <= k; ++d) e[d] += pw[d] / ifact;
    }
    Rational kfact(1);
    for (int i = 2; i <= k; ++i) kfact *= i;
    return kfact * e[k];
}

}  // namespace

TEST_CASE("harmonic numbers") {
    CHECK(comb::harmonic(4, 1) == make_rational(25, 12));
    CHECK(comb::harmonic(0, 3) == 0);
    CHECK(comb::harmonic(3, 2) == make_rational(49, 36));
    CHECK_THROWS(comb::harmonic(3, 0));

    for (long n : {1L, 2L, 17L, 100L})
        for (int m : {1, 2, 3})
            CHECK(comb::harmonic(n, m) - comb::harmonic(n - 1, m) == 1 / pow_rational(Rational(n), m));
}

TEST_CASE("alternating harmonic numbers") {
    CHECK(comb::alt_harmonic(2, 1) == make_rational(1, 2));
    CHECK(comb::alt_harmonic(3, 1) == make_rational(5, 6));
    CHECK(comb::alt_harmonic(4, 2) == make_rational(115, 144));
    CHECK(comb::alt_harmonic(0, 1) == 0);
}

TEST_CASE("partial polylog sums") {
    CHECK(comb::partial_polylog(2, 1, make_rational(1, 2)) == make_rational(5, 8));
    for (long n : {0L, 1L, 7L, 40L})
        for (int l : {1, 2, 3}) {
            CHECK(comb::partial_polylog(n, l, Rational(1)) == comb::harmonic(n, l));
            CHECK(comb::partial_polylog(n, l, Rational(-1)) == -comb::alt_harmonic(n, l));
        }
}

TEST_CASE("bell polynomial recurrence values") {
    CHECK(comb::bell_Y(1, 4) == make_rational(25, 12));
    CHECK(comb::bell_Y(2, 2) == make_rational(7, 2));
    CHECK(comb::bell_Y(3, 2) == make_rational(45, 4));
    CHECK(comb::bell_Y(0, 10) == 1);
    CHECK(comb::bell_Y(3, 0) == 0);
}

TEST_CASE("explicit bell formulas match the recurrence exactly") {
    CHECK(comb::bell_Y_explicit(2, 3) == make_rational(85, 18));
    CHECK(comb::bell_Y_explicit(4, 1) == 24);
    CHECK(comb::bell_Y_explicit(3, 2) == make_rational(45, 4));
    CHECK_THROWS_WITH(comb::bell_Y_explicit(5, 3), "no explicit formula");

    for (long n = 0; n <= 60; ++n)
        for (int k = 1; k <= 4; ++k) CHECK(comb::bell_Y(k, n) == comb::bell_Y_explicit(k, n));
}

TEST_CASE("bell recurrence equals generating-function coefficient extraction") {
    for (long n = 0; n <= 60; n += (n < 12 ? 1 : 7))
        for (int k = 1; k <= 6; ++k) CHECK(comb::bell_Y(k, n) == bell_by_generating_function(k, n));
}

TEST_CASE("stirling numbers of the first kind") {
    CHECK(comb::stirling_first(4, 2) == 11);
    CHECK(comb::stirling_first(5, 3) == 35);
    CHECK(comb::stirling_first(6, 3) == 225);
    for (long n = 1; n <= 8; ++n) CHECK(comb::stirling_first(n, 1) == factorial(n - 1));
    CHECK(comb::stirling_first(4, 7) == 0);
    CHECK(comb::stirling_first(4, 0) == 0);

    // row sums: sum_k S(n,k) = n!
    for (long n = 1; n <= 20; ++n) {
        BigInt row(0);
        for (long k = 1; k <= n; ++k) row += comb::stirling_first(n, k);
        CHECK(row == factorial(n));
    }
}

TEST_CASE("stirling closed forms in harmonic numbers") {
    CHECK(comb::stirling_via_harmonics(4, 4) == 1);
    CHECK(comb::stirling_via_harmonics(5, 5) == 1);
    CHECK(comb::stirling_via_harmonics(6, 3) == 225);
    CHECK_THROWS_WITH(comb::stirling_via_harmonics(8, 6), "no closed form");

    for (long n = 1; n <= 30; ++n)
        for (int k = 1; k <= 5; ++k) {
            const Rational v = comb::stirling_via_harmonics(n, k);
            CHECK(is_integer(v));
            CHECK(v == Rational(comb::stirling_first(n, k)));
        }
}

TEST_CASE("generating function truncation residuals") {
    CHECK(std::abs(comb::genfun_check(1, make_rational(1, 2), 60).value) < 1e-15);
    CHECK(std::abs(comb::genfun_check(3, make_rational(1, 2), 80).value) < 1e-12);
    CHECK(comb::genfun_check(2, Rational(0), 5).value == 0.0);
    CHECK(std::abs(comb::genfun_check(2, make_rational(-1, 2), 60).value) < 1e-15);
    CHECK_THROWS(comb::genfun_check(2, Rational(1), 10));
}
