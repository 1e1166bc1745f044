#include "eulersum/constants.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "eulersum/summation.hpp"

namespace eulersum::constants {

namespace {

std::mutex g_cache_mutex;
std::map<ConstantKey, RealWithError>& cache() {
    static std::map<ConstantKey, RealWithError> c;
    return c;
}

template <typename F>
RealWithError cached(const ConstantKey& key, F compute) {
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        if (auto it = cache().find(key); it != cache().end()) return it->second;
    }
    // Compute outside the lock: polylog at the endpoints delegates back into
    // zeta/alt_zeta, and a held mutex would self-deadlock. Insertion is
    // idempotent (first value wins), and compute() is deterministic, so
    // repeated calls stay bit-identical.
    const RealWithError v = compute();
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return cache().emplace(key, v).first->second;
}

RealWithError zeta_uncached(int s) {
    if (s < 2) throw std::invalid_argument("divergent zeta argument");
    if (s > 55) {
        // 2^{-s} already below 3e-17: a handful of terms is exact.
        CompensatedSum acc;
        for (int n = 9; n >= 1; --n) acc.add(std::pow(n, -static_cast<double>(s)));
        return {acc.value(), 4e-16};
    }
    constexpr long N = 10000;
    CompensatedSum acc;
    for (long n = N; n >= 1; --n) acc.add(std::pow(static_cast<double>(n), -static_cast<double>(s)));
    const double sd = s;
    const double Nf = N;
    double tail = std::pow(Nf, 1.0 - sd) / (sd - 1.0);
    tail -= 0.5 * std::pow(Nf, -sd);
    tail += sd / 12.0 * std::pow(Nf, -sd - 1.0);
    tail -= sd * (sd + 1.0) * (sd + 2.0) / 720.0 * std::pow(Nf, -sd - 3.0);
    tail += sd * (sd + 1.0) * (sd + 2.0) * (sd + 3.0) * (sd + 4.0) / 30240.0 * std::pow(Nf, -sd - 5.0);
    const double omitted =
        sd * (sd + 1) * (sd + 2) * (sd + 3) * (sd + 4) * (sd + 5) * (sd + 6) / 1209600.0 * std::pow(Nf, -sd - 7.0);
    return {acc.value() + tail, std::abs(omitted) + 6e-15};
}

// Hot path for the polylog expansions: table of zeta(2..95), filled once.
double zeta_d(int s) {
    constexpr int kMax = 96;
    static const std::array<double, kMax> table = [] {
        std::array<double, kMax> t{};
        for (int i = 2; i < kMax; ++i) t[i] = zeta_uncached(i).value;
        return t;
    }();
    return s < kMax ? table[s] : 1.0 + std::pow(2.0, -static_cast<double>(s));
}

// B_{2k} via zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!).
double bernoulli_2k(int k) {
    constexpr int kMax = 48;
    static const std::array<double, kMax> table = [] {
        std::array<double, kMax> t{};
        for (int kk = 1; kk < kMax; ++kk) {
            double fact = 1.0;
            for (int i = 2; i <= 2 * kk; ++i) fact *= i;
            const double sign = (kk % 2 == 0) ? -1.0 : 1.0;
            t[kk] = sign * 2.0 * fact * zeta_d(2 * kk) / std::pow(2.0 * M_PI, 2 * kk);
        }
        return t;
    }();
    if (k >= kMax) throw std::invalid_argument("Bernoulli index out of table range");
    return table[k];
}

// zeta at integer arguments <= 0 (trivial zeros and -B_{2k}/(2k)).
double zeta_nonpositive(int s) {
    if (s == 0) return -0.5;
    const int k = -s;  // zeta(-k)
    if (k % 2 == 0) return 0.0;
    return -bernoulli_2k((k + 1) / 2) / (k + 1);
}

double powi(double b, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

double polylog_series(int p, double x) {
    CompensatedSum acc;
    double xn = 1.0;
    for (int n = 1; n <= 2000; ++n) {
        xn *= x;
        const double t = xn * powi(1.0 / n, p);
        acc.add(t);
        if (std::abs(t) < 1e-18 * std::max(1.0, std::abs(acc.value())) && n > 4) break;
    }
    return acc.value();
}

// Li_p(e^mu) = sum_{j>=0, j != p-1} zeta(p-j) mu^j/j! + mu^{p-1}/(p-1)! (H_{p-1} - ln(-mu))
double polylog_log_expansion(int p, double x) {
    const double mu = std::log(x);  // in (-ln 2, 0)
    CompensatedSum acc;
    double mu_pow = 1.0, fact = 1.0;
    for (int j = 0; j <= 90; ++j) {
        if (j > 0) {
            mu_pow *= mu;
            fact *= j;
        }
        if (j == p - 1) continue;
        const int arg = p - j;
        const double z = arg >= 2 ? zeta_d(arg) : zeta_nonpositive(arg);
        if (z != 0.0) {
            const double t = z * mu_pow / fact;
            acc.add(t);
            if (j > p + 4 && std::abs(t) < 1e-19 * std::max(1.0, std::abs(acc.value()))) break;
        }
    }
    double h = 0.0, f = 1.0;
    for (int i = 1; i <= p - 1; ++i) {
        h += 1.0 / i;
        f *= i;
    }
    acc.add(std::pow(mu, p - 1) / f * (h - std::log(-mu)));
    return acc.value();
}

}  // namespace

double polylog_real(int p, double x) {
    if (p < 1) throw std::invalid_argument("polylog order must be >= 1");
    if (std::abs(x) > 1.0) throw std::invalid_argument("polylog argument outside [-1, 1]");
    if (p == 1) {
        if (x == 1.0) throw std::invalid_argument("divergent");
        return -std::log1p(-x);
    }
    if (x == 1.0) return zeta_d(p);
    if (x == 0.0) return 0.0;
    if (x <= -0.5) return std::pow(2.0, 1 - p) * polylog_real(p, x * x) - polylog_real(p, -x);
    if (x >= 0.5) return polylog_log_expansion(p, x);
    return polylog_series(p, x);
}

RealWithError zeta(int s) {
    if (s < 2) throw std::invalid_argument("divergent zeta argument");
    return cached({ConstantKey::Kind::zeta, s, Rational(0)}, [&] { return zeta_uncached(s); });
}

RealWithError alt_zeta(int s) {
    if (s < 1) throw std::invalid_argument("divergent alternating zeta argument");
    return cached({ConstantKey::Kind::alt_zeta, s, Rational(0)}, [&]() -> RealWithError {
        if (s == 1) return {M_LN2, 4e-17};
        const RealWithError z = zeta_uncached(s);
        const double f = 1.0 - std::pow(2.0, 1.0 - s);
        return {f * z.value, f * z.err + 2e-16};
    });
}

RealWithError polylog(int p, const Rational& x) {
    if (p < 1) throw std::invalid_argument("polylog order must be >= 1");
    if (cmp(abs(x), Rational(1)) > 0) throw std::invalid_argument("polylog argument outside [-1, 1]");
    if (p == 1 && x == 1) throw std::invalid_argument("divergent");
    return cached({ConstantKey::Kind::polylog, p, x}, [&]() -> RealWithError {
        if (x == 1) return zeta_uncached(p);
        if (x == -1) {
            const RealWithError a = alt_zeta(p);
            return {-a.value, a.err};
        }
        return {polylog_real(p, to_double(x)), 1e-15};
    });
}

RealWithError euler_gamma() {
    return cached({ConstantKey::Kind::euler_gamma, 0, Rational(0)}, []() -> RealWithError {
        constexpr long N = 1000000;
        CompensatedSum h;
        for (long n = N; n >= 1; --n) h.add(1.0 / static_cast<double>(n));
        const double Nf = N;
        const double g = h.value() - std::log(Nf) - 0.5 / Nf + 1.0 / (12.0 * Nf * Nf) -
                         1.0 / (120.0 * Nf * Nf * Nf * Nf);
        return {g, 1e-14};
    });
}

RealWithError ln2() {
    return cached({ConstantKey::Kind::ln2, 0, Rational(0)}, []() -> RealWithError {
        return {M_LN2, 2e-17};
    });
}

}  // namespace eulersum::constants
