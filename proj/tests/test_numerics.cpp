#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "eulersum/combinatorics.hpp"
#include "eulersum/constants.hpp"
#include "eulersum/quadrature.hpp"
#include "eulersum/summation.hpp"

using namespace eulersum;

namespace {
constexpr double kZeta2 = 1.6449340668482264;
constexpr double kZeta3 = 1.2020569031595943;
}  // namespace

TEST_CASE("compensated_sum basics") {
    CHECK(compensated_sum({}) == 0.0);
    const std::vector<double> cancel{1.0, -1.0, 1e-16};
    CHECK(compensated_sum(cancel) == 1e-16);

    const std::vector<double> big_small{1e100, 1.0, -1e100};
    CHECK(compensated_sum(big_small) == 1.0);

    const std::vector<double> bad{1.0, std::numeric_limits<double>::infinity()};
    CHECK_THROWS_WITH(compensated_sum(bad), "non-finite term");
}

TEST_CASE("compensated_sum matches the exact rational partial sum") {
    std::vector<double> terms;
    for (long k = 1; k <= 10000; ++k) terms.push_back(1.0 / (static_cast<double>(k) * k));
    const double exact = to_double(combinatorics::harmonic(10000, 2));
    CHECK(std::abs(compensated_sum(terms) - exact) < 1e-14);
}

TEST_CASE("sum_with_tail: 1/n^2 with power_log tail hits zeta(2)") {
    const long N = 100000;
    const auto r = sum_with_tail([](long n) { return 1.0 / (static_cast<double>(n) * n); }, 1, N,
                                 TailModel::power_log(2, 0));
    // independent oracle: Euler-Maclaurin tail 1/N - 1/(2N^2) + 1/(6N^3) on the raw partial sum
    std::vector<double> terms;
    for (long n = 1; n <= N; ++n) terms.push_back(1.0 / (static_cast<double>(n) * n));
    const double Nf = N;
    const double em = compensated_sum(terms) + 1.0 / Nf - 0.5 / (Nf * Nf) + 1.0 / (6.0 * Nf * Nf * Nf);
    CHECK(std::abs(r.value - em) < 1e-10);
    CHECK(std::abs(r.value - kZeta2) < 1e-10);
    CHECK(r.err < 1e-10);
}

TEST_CASE("sum_with_tail: zero series") {
    const auto r = sum_with_tail([](long) { return 0.0; }, 1, 1000, TailModel::power_log(2, 0));
    CHECK(r.value == 0.0);
    CHECK(r.err == 0.0);
}

TEST_CASE("sum_with_tail: H_n/(n(n+1)) converges to zeta(2)") {
    double h = 0.0;
    const auto term = [&h](long n) {
        h += 1.0 / static_cast<double>(n);
        return h / (static_cast<double>(n) * (n + 1));
    };
    const auto r = sum_with_tail(term, 1, 1000000, TailModel::power_log(2, 1));
    CHECK(std::abs(r.value - kZeta2) < 1e-8);

    // brute force at 1e7 without a tail model leaves the ~ln(N)/N remainder
    double h2 = 0.0;
    const auto term2 = [&h2](long n) {
        h2 += 1.0 / static_cast<double>(n);
        return h2 / (static_cast<double>(n) * (n + 1));
    };
    const auto brute = sum_with_tail(term2, 1, 10000000, TailModel::none());
    CHECK(std::abs(brute.value - kZeta2) < 2e-6);
    CHECK(std::abs(r.value - kZeta2) < std::abs(brute.value - kZeta2));
}

TEST_CASE("sum_with_tail error paths") {
    CHECK_THROWS_WITH(sum_with_tail([](long) { return 1.0; }, 5, 4, TailModel::none()), "empty range");
    CHECK_THROWS_WITH(
        sum_with_tail([](long n) { return 1.0 / static_cast<double>(n); }, 1, 100000, TailModel::none()),
        "no convergence");
    CHECK_THROWS(TailModel::power_log(1, 0));
}

TEST_CASE("alternating_sum: Mercator series") {
    const auto term = [](long n) { return (n % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(n); };
    const auto r = alternating_sum(term, 1, 100000);
    CHECK(std::abs(r.value - constants::ln2().value) < 1e-9);
    CHECK(std::abs(r.value - constants::ln2().value) <= 5.0 * r.err);
}

TEST_CASE("alternating_sum: zero series and sign check") {
    const auto r = alternating_sum([](long) { return 0.0; }, 1, 1000);
    CHECK(r.value == 0.0);
    CHECK_THROWS_WITH(alternating_sum([](long n) { return 1.0 / (static_cast<double>(n) * n); }, 1, 10000),
                      "not alternating");
}

TEST_CASE("alternating_sum: alternating linear sum of H_n/n^3 hits the closed form") {
    double h = 0.0;
    const auto term = [&h](long n) {
        h += 1.0 / static_cast<double>(n);
        const double n3 = static_cast<double>(n) * n * n;
        return (n % 2 == 1 ? 1.0 : -1.0) * h / n3;
    };
    const auto r = alternating_sum(term, 1, 100000, TailModel::power_log(4, 1));
    const double ln2 = constants::ln2().value;
    const double closed = -2.0 * constants::polylog(4, make_rational(1, 2)).value +
                          2.75 * constants::zeta(4).value + 0.5 * constants::zeta(2).value * ln2 * ln2 -
                          std::pow(ln2, 4) / 12.0 - 1.75 * constants::zeta(3).value * ln2;
    CHECK(std::abs(r.value - closed) < 1e-9);
}

TEST_CASE("alternating_sum agrees with plain summation on absolutely convergent input") {
    const auto term = [](long n) {
        const double n3 = static_cast<double>(n) * n * n;
        return (n % 2 == 1 ? 1.0 : -1.0) / n3;
    };
    const auto a = alternating_sum(term, 1, 200000, TailModel::power_log(4, 0));
    const auto b = sum_with_tail(term, 1, 200000, TailModel::none());
    CHECK(std::abs(a.value - b.value) <= 5.0 * (a.err + b.err));
}

TEST_CASE("monotone improvement towards known limits") {
    const auto run = [](long N) {
        return sum_with_tail([](long n) { return 1.0 / (static_cast<double>(n) * n); }, 1, N,
                             TailModel::power_log(2, 0))
            .value;
    };
    const double r1 = std::abs(run(10000) - kZeta2);
    const double r2 = std::abs(run(20000) - kZeta2);
    CHECK((r2 <= r1 || r2 < 1e-13));

    const auto run3 = [](long N) {
        return sum_with_tail([](long n) { return 1.0 / (static_cast<double>(n) * n * n); }, 1, N,
                             TailModel::power_log(3, 0))
            .value;
    };
    const double s1 = std::abs(run3(10000) - kZeta3);
    const double s2 = std::abs(run3(20000) - kZeta3);
    CHECK((s2 <= s1 || s2 < 1e-13));
}

TEST_CASE("error bound honesty on the known set") {
    const auto z2 = sum_with_tail([](long n) { return 1.0 / (static_cast<double>(n) * n); }, 1, 100000,
                                  TailModel::power_log(2, 0));
    CHECK(std::abs(z2.value - kZeta2) <= 5.0 * z2.err);
    const auto z3 = sum_with_tail([](long n) { return 1.0 / (static_cast<double>(n) * n * n); }, 1, 10000,
                                  TailModel::power_log(3, 0));
    CHECK(std::abs(z3.value - kZeta3) <= 5.0 * z3.err);
    double h = 0.0;
    const auto k1 = sum_with_tail(
        [&h](long n) {
            h += 1.0 / static_cast<double>(n);
            return h / (static_cast<double>(n) * (n + 1));
        },
        1, 100000, TailModel::power_log(2, 1));
    CHECK(std::abs(k1.value - kZeta2) <= 5.0 * k1.err);
}

TEST_CASE("quad_tanh_sinh basics") {
    const auto one = quad_tanh_sinh([](double) { return 1.0; }, 0.0, 1.0, 1e-12);
    CHECK(std::abs(one.value - 1.0) < 1e-12);

    const auto lg = quad_tanh_sinh([](double t) { return std::log(1.0 - t); }, 0.0, 1.0, 1e-12);
    CHECK(std::abs(lg.value + 1.0) < 1e-12);

    // t ln^2(1-t) integrates to Y_2(2)/2
    const auto y22 = quad_tanh_sinh([](double t) {
        const double l = std::log(1.0 - t);
        return t * l * l;
    }, 0.0, 1.0, 1e-12);
    const double expected = to_double(combinatorics::bell_Y(2, 2)) / 2.0;
    CHECK(expected == doctest::Approx(1.75).epsilon(1e-14));
    CHECK(std::abs(y22.value - expected) < 1e-10);
}

TEST_CASE("quad_tanh_sinh is exact on low-degree polynomials") {
    // integral over (0,1) of x^d = 1/(d+1)
    for (int d = 0; d <= 10; ++d) {
        const auto r = quad_tanh_sinh([d](double x) {
            double v = 1.0;
            for (int i = 0; i < d; ++i) v *= x;
            return v;
        }, 0.0, 1.0, 1e-12);
        CHECK(std::abs(r.value - 1.0 / (d + 1)) < 1e-13);
    }
    // a mixed polynomial on a shifted interval
    const auto r = quad_tanh_sinh([](double x) { return ((3.0 * x - 2.0) * x + 0.5) * x - 1.0; }, -1.0, 2.0, 1e-12);
    // antiderivative: 3/4 x^4 - 2/3 x^3 + 1/4 x^2 - x
    const auto F = [](double x) { return 0.75 * x * x * x * x - 2.0 / 3.0 * x * x * x + 0.25 * x * x - x; };
    CHECK(std::abs(r.value - (F(2.0) - F(-1.0))) < 1e-13);
}

TEST_CASE("quad_tanh_sinh reports interior singularities and flips orientation") {
    CHECK_THROWS_WITH((void)quad_tanh_sinh([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0, 1e-10),
                      "interior singularity");
    const auto fwd = quad_tanh_sinh([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
    const auto rev = quad_tanh_sinh([](double x) { return x * x; }, 1.0, 0.0, 1e-12);
    CHECK(fwd.value == doctest::Approx(-rev.value).epsilon(1e-14));
}
