#include "eulersum/combinatorics.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace eulersum::combinatorics {

namespace {

void require_order(int m) {
    if (m <= 0) throw std::invalid_argument("harmonic order must be >= 1");
}

std::mutex g_bell_mutex;
std::mutex g_stirling_mutex;

// bell rows: rows[k][n] = Y_k(n); row 0 is constant 1 and not stored.
std::vector<std::vector<Rational>>& bell_rows() {
    static std::vector<std::vector<Rational>> rows;
    return rows;
}

// triangular table: table[n][k] = S(n, k) for 1 <= k <= n, n >= 1.
std::vector<std::vector<BigInt>>& stirling_table() {
    static std::vector<std::vector<BigInt>> t{{}, {BigInt(0), BigInt(1)}};
    return t;
}

}  // namespace

Rational harmonic(long n, int m) {
    require_order(m);
    if (n < 0) throw std::invalid_argument("negative harmonic index");
    Rational acc(0);
    for (long j = 1; j <= n; ++j) acc += 1 / pow_rational(Rational(j), m);
    return acc;
}

Rational alt_harmonic(long n, int m) {
    require_order(m);
    if (n < 0) throw std::invalid_argument("negative harmonic index");
    Rational acc(0);
    for (long j = 1; j <= n; ++j) {
        const Rational t = 1 / pow_rational(Rational(j), m);
        acc += (j % 2 == 1) ? t : -t;
    }
    return acc;
}

Rational partial_polylog(long n, int l, const Rational& x) {
    require_order(l);
    if (n < 0) throw std::invalid_argument("negative index");
    Rational acc(0), xk(1);
    for (long k = 1; k <= n; ++k) {
        xk *= x;
        acc += xk / pow_rational(Rational(k), l);
    }
    return acc;
}

Rational bell_Y(int k, long n) {
    if (k < 0 || n < 0) throw std::invalid_argument("bell_Y arguments must be >= 0");
    if (k == 0) return Rational(1);
    if (n == 0) return Rational(0);
    std::lock_guard<std::mutex> lock(g_bell_mutex);
    auto& rows = bell_rows();
    if (static_cast<int>(rows.size()) < k) rows.resize(k);
    for (int q = 1; q <= k; ++q) {
        auto& row = rows[q - 1];
        if (row.empty()) row.push_back(Rational(0));  // Y_q(0) = 0
        Rational acc = row.back() / q;                // sum_{m<=|row|-1} Y_{q-1}(m)/m
        for (long m = static_cast<long>(row.size()); m <= n; ++m) {
            const Rational prev = q == 1 ? Rational(1) : rows[q - 2][m];
            acc += prev / m;
            row.push_back(q * acc);
        }
    }
    return rows[k - 1][n];
}

Rational bell_Y_explicit(int k, long n) {
    if (k < 1 || k > 4) throw std::invalid_argument("no explicit formula");
    if (n < 0) throw std::invalid_argument("negative index");
    const Rational h = harmonic(n, 1);
    const Rational z2 = harmonic(n, 2);
    const Rational z3 = harmonic(n, 3);
    const Rational z4 = harmonic(n, 4);
    switch (k) {
        case 1:
            return h;
        case 2:
            return h * h + z2;
        case 3:
            return h * h * h + 3 * h * z2 + 2 * z3;
        default:
            return pow_rational(h, 4) + 8 * h * z3 + 6 * h * h * z2 + 3 * z2 * z2 + 6 * z4;
    }
}

BigInt stirling_first(long n, long k) {
    if (n < 1) throw std::invalid_argument("stirling_first requires n >= 1");
    if (k < 1 || k > n) return BigInt(0);
    std::lock_guard<std::mutex> lock(g_stirling_mutex);
    auto& t = stirling_table();
    for (long m = static_cast<long>(t.size()); m <= n; ++m) {
        std::vector<BigInt> row(m + 1);
        row[0] = 0;
        for (long j = 1; j <= m; ++j) {
            BigInt v = (j >= 2) ? t[m - 1][j - 1] : BigInt(0);
            if (j <= m - 1) v += (m - 1) * t[m - 1][j];
            row[j] = v;
        }
        t.push_back(std::move(row));
    }
    return t[n][k];
}

Rational stirling_via_harmonics(long n, int k) {
    if (k < 1 || k > 5) throw std::invalid_argument("no closed form");
    if (n < 1) throw std::invalid_argument("requires n >= 1");
    if (k > n) return Rational(0);
    const Rational h = harmonic(n - 1, 1);
    const Rational z2 = harmonic(n - 1, 2);
    const Rational z3 = harmonic(n - 1, 3);
    const Rational z4 = harmonic(n - 1, 4);
    const Rational f(factorial(n - 1));
    switch (k) {
        case 1:
            return f;
        case 2:
            return f * h;
        case 3:
            return f / 2 * (h * h - z2);
        case 4:
            return f / 6 * (h * h * h - 3 * h * z2 + 2 * z3);
        default:
            return f / 24 * (pow_rational(h, 4) - 6 * z4 - 6 * h * h * z2 + 3 * z2 * z2 + 8 * h * z3);
    }
}

RealWithError genfun_check(int p, const Rational& x, int N) {
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    if (cmp(abs(x), Rational(1)) >= 0) throw std::invalid_argument("|x| must be < 1");
    Rational series(0), xn(1);
    BigInt nfact(1);
    for (long n = 1; n <= N; ++n) {
        xn *= x;
        nfact *= n;
        if (n < p) continue;
        series += Rational(stirling_first(n, p)) / Rational(nfact) * xn;
    }
    const double sign = (p % 2 == 0) ? 1.0 : -1.0;
    double pfact = 1.0;
    for (int i = 2; i <= p; ++i) pfact *= i;
    const double truncated = sign * pfact * to_double(series);
    const double exact = std::pow(std::log(1.0 - to_double(x)), p);
    return {truncated - exact, 1e-15 * (std::abs(truncated) + std::abs(exact)) + 1e-16};
}

}  // namespace eulersum::combinatorics
