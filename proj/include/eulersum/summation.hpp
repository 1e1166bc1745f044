#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "eulersum/real_with_error.hpp"

namespace eulersum {

/// Kahan-Babuska-Neumaier compensated accumulator. Drop-in for a plain
/// `double sum; sum += x;` loop, with error O(eps * sum |x|) independent of
/// the number of terms to first order.
struct CompensatedSum {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            compensation += (sum - t) + v;
        else
            compensation += (v - t) + sum;
        sum = t;
    }
    CompensatedSum& operator+=(double v) {
        add(v);
        return *this;
    }
    double value() const { return sum + compensation; }
};

/// Sum a finite sequence with compensation. Throws on non-finite input.
double compensated_sum(std::span<const double> terms);

/// Asymptotic model for the truncated part of a series: terms behave like
/// P(ln n)/n^power with deg P = log_degree. `none` means no correction.
struct TailModel {
    enum class Kind { none, power_log };
    Kind kind = Kind::none;
    int power = 2;       // >= 2
    int log_degree = 0;  // >= 0

    static TailModel none() { return {}; }
    static TailModel power_log(int power, int log_degree = 0);
};

/// Sum term(start..N) and add a fitted closed-form tail correction for n > N.
/// term is invoked once per index in ascending order. With TailModel::none the
/// partial sums must look Cauchy, otherwise "no convergence" is thrown.
RealWithError sum_with_tail(const std::function<double(long)>& term, long start, long N, const TailModel& tail);

/// Sum a (conditionally convergent) alternating series; term includes its sign
/// (-1)^{n-1}. Consecutive terms are paired into an absolutely convergent
/// series which is then handed to sum_with_tail. `pair_tail` describes the
/// paired series (its power is the original decay plus one).
RealWithError alternating_sum(const std::function<double(long)>& term, long start, long N,
                              const TailModel& pair_tail = TailModel::power_log(2, 0));

namespace detail {

/// Streaming tail fitter shared by sum_with_tail and the series oracle.
/// Feed term values for n = start..N in order; finish() returns the full
/// compensated sum plus the tail correction integral and an error estimate.
class TailFitter {
  public:
    TailFitter(long start, long N, TailModel model, bool even_checkpoints);

    void feed(long n, double value);
    RealWithError finish() const;

    long checkpoints_needed() const { return static_cast<long>(want_.size()); }

  private:
    long start_;
    long N_;
    TailModel model_;
    CompensatedSum sum_;
    CompensatedSum abs_sum_;
    std::vector<long> want_;     // ascending checkpoint indices
    std::vector<double> got_;    // term values at checkpoints
    std::size_t next_ = 0;
    double last_term_ = 0.0;
    double delta_recent_ = 0.0;  // S(N) - S(N/2)
    double delta_prev_ = 0.0;    // S(N/2) - S(N/4)
    long half_ = 0, quarter_ = 0;
};

}  // namespace detail

}  // namespace eulersum
