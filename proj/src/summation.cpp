#include "eulersum/summation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <vector>

namespace eulersum {

double compensated_sum(std::span<const double> terms) {
    CompensatedSum acc;
    for (double t : terms) {
        if (!std::isfinite(t)) throw std::invalid_argument("non-finite term");
        acc.add(t);
    }
    return acc.value();
}

TailModel TailModel::power_log(int power, int log_degree) {
    if (power < 2) throw std::invalid_argument("tail power must be >= 2");
    if (log_degree < 0) throw std::invalid_argument("negative log degree");
    TailModel m;
    m.kind = Kind::power_log;
    m.power = power;
    m.log_degree = log_degree;
    return m;
}

namespace detail {

namespace {

// Basis element ln^j(x/N) * x^{-q} as a sparse coefficient map keyed (j, q).
using CoefMap = std::map<std::pair<int, int>, double>;

CoefMap differentiate(const CoefMap& f) {
    CoefMap out;
    for (const auto& [key, c] : f) {
        const auto [j, q] = key;
        if (j > 0) out[{j - 1, q + 1}] += c * j;
        out[{j, q + 1}] -= c * q;
    }
    return out;
}

// Evaluate a coefficient map at x = N, where ln(x/N) = 0.
double eval_at_anchor(const CoefMap& f, double N) {
    double v = 0.0;
    for (const auto& [key, c] : f)
        if (key.first == 0) v += c * std::pow(N, -static_cast<double>(key.second));
    return v;
}

// Solve the small least-squares problem A c = g via normal equations.
std::vector<double> least_squares(const std::vector<std::vector<double>>& A, const std::vector<double>& g) {
    const std::size_t rows = A.size(), cols = A[0].size();
    std::vector<std::vector<double>> M(cols, std::vector<double>(cols + 1, 0.0));
    for (std::size_t i = 0; i < cols; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t r = 0; r < rows; ++r) M[i][j] += A[r][i] * A[r][j];
        for (std::size_t r = 0; r < rows; ++r) M[i][cols] += A[r][i] * g[r];
    }
    // Gaussian elimination with partial pivoting; the system is tiny.
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < cols; ++r)
            if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
        std::swap(M[col], M[piv]);
        if (M[col][col] == 0.0) continue;
        for (std::size_t r = col + 1; r < cols; ++r) {
            const double f = M[r][col] / M[col][col];
            for (std::size_t j = col; j <= cols; ++j) M[r][j] -= f * M[col][j];
        }
    }
    std::vector<double> c(cols, 0.0);
    for (std::size_t i = cols; i-- > 0;) {
        double acc = M[i][cols];
        for (std::size_t j = i + 1; j < cols; ++j) acc -= M[i][j] * c[j];
        c[i] = M[i][i] != 0.0 ? acc / M[i][i] : 0.0;
    }
    return c;
}

std::vector<long> pick_checkpoints(long start, long N, int degree, bool even) {
    const int K = std::max(10, 4 * (degree + 1));
    std::vector<long> pts;
    const double lo = std::max<double>(start, N / 2.0);
    for (int i = 0; i < K; ++i) {
        double x = N * std::exp(-std::log(static_cast<double>(N) / lo) * (K - 1 - i) / (K - 1));
        long idx = std::lround(x);
        if (even && idx % 2 != 0) idx += (idx + 1 <= N) ? 1 : -1;
        idx = std::clamp(idx, start, N);
        pts.push_back(idx);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

TailFitter::TailFitter(long start, long N, TailModel model, bool even_checkpoints)
    : start_(start), N_(N), model_(model) {
    if (N < start) throw std::invalid_argument("empty range");
    if (model_.kind == TailModel::Kind::power_log)
        want_ = pick_checkpoints(start, N, model_.log_degree, even_checkpoints);
    half_ = N / 2;
    quarter_ = N / 4;
}

void TailFitter::feed(long n, double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("non-finite term");
    sum_.add(value);
    abs_sum_.add(std::abs(value));
    last_term_ = value;
    if (n > half_)
        delta_recent_ += value;
    else if (n > quarter_)
        delta_prev_ += value;
    while (next_ < want_.size() && want_[next_] == n) {
        got_.push_back(value);
        ++next_;
    }
}

RealWithError TailFitter::finish() const {
    const double eps_floor = 8.0 * 2.220446049250313e-16 * abs_sum_.value();
    if (model_.kind == TailModel::Kind::none) {
        // Honest convergence check on the partial sums: the mass added per
        // doubling must shrink.
        if (std::abs(delta_recent_) > 0.75 * std::abs(delta_prev_) &&
            std::abs(delta_recent_) > 1e3 * eps_floor && N_ > 8 + start_)
            throw std::runtime_error("no convergence");
        return {sum_.value(), std::abs(delta_recent_) + eps_floor};
    }

    const int q = model_.power;
    int d = model_.log_degree;
    const std::size_t pts = got_.size();
    if (pts < 3) {
        // Not enough room to fit anything; report the raw sum with a crude bound.
        return {sum_.value(), std::abs(last_term_) * static_cast<double>(N_) + eps_floor};
    }
    d = std::min<int>(d, static_cast<int>(pts) - 2);

    // Fit g(n) = t(n) n^q against polynomials in v = ln(n/N)/h, h = |ln(n_0/N)|.
    const double Nf = static_cast<double>(N_);
    const double h = std::max(1e-12, -std::log(static_cast<double>(want_.front()) / Nf));

    struct Fit {
        std::vector<double> c;  // coefficients over u^j
        double rms = 0.0;
        double tail = 0.0;      // Euler-Maclaurin corrected tail sum over n > N
        double em_err = 0.0;
    };
    const auto fit_window = [&](std::size_t count) -> Fit {
        const int dd = std::min<int>(d, static_cast<int>(count) - 2);
        std::vector<std::vector<double>> A(count, std::vector<double>(dd + 1));
        std::vector<double> g(count);
        for (std::size_t i = 0; i < count; ++i) {
            const double n = static_cast<double>(want_[i]);
            const double v = std::log(n / Nf) / h;
            double pw = 1.0;
            for (int j = 0; j <= dd; ++j) {
                A[i][j] = pw;
                pw *= v;
            }
            g[i] = got_[i] * std::pow(n, q);
        }
        Fit fit;
        const std::vector<double> cs = least_squares(A, g);
        double rss = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            double pred = 0.0;
            for (int j = 0; j <= dd; ++j) pred += cs[j] * A[i][j];
            rss += (g[i] - pred) * (g[i] - pred);
        }
        fit.rms = std::sqrt(rss / static_cast<double>(count));
        fit.c.assign(dd + 1, 0.0);
        for (int j = 0; j <= dd; ++j) fit.c[j] = cs[j] / std::pow(h, j);

        // integral_N^inf u^j x^{-q} dx = N^{1-q} j! / (q-1)^{j+1}
        double integral = 0.0;
        double fact = 1.0;
        for (int j = 0; j <= dd; ++j) {
            if (j > 0) fact *= j;
            integral += fit.c[j] * fact / std::pow(q - 1.0, j + 1);
        }
        integral *= std::pow(Nf, 1.0 - q);

        CoefMap f;
        for (int j = 0; j <= dd; ++j) f[{j, q}] = fit.c[j];
        const CoefMap f1 = differentiate(f);
        const CoefMap f3 = differentiate(differentiate(f1));
        const CoefMap f5 = differentiate(differentiate(f3));
        // Euler-Maclaurin: sum_{n>N} f = int_N f - f(N)/2 - f'(N)/12 + f'''(N)/720 - f^(5)(N)/30240 ...
        fit.tail = integral - eval_at_anchor(f, Nf) / 2.0 - eval_at_anchor(f1, Nf) / 12.0 +
                   eval_at_anchor(f3, Nf) / 720.0;
        fit.em_err = std::abs(eval_at_anchor(f5, Nf)) / 30240.0;
        return fit;
    };

    const Fit full = fit_window(pts);
    // The ln-polynomial model omits the n^{-q-1} corrections; refitting on the
    // far half of the window shifts the extrapolation by about that model
    // error, which gives an honest bound for it.
    double model_err = 0.0;
    if (pts >= 6) {
        const Fit half = fit_window((pts * 3) / 5);
        model_err = 2.0 * std::abs(full.tail - half.tail);
    }
    const double fit_err = 12.0 * full.rms * std::pow(Nf, 1.0 - q) / std::max(1, q - 1);
    return {sum_.value() + full.tail, full.em_err + fit_err + model_err + eps_floor};
}

}  // namespace detail

RealWithError sum_with_tail(const std::function<double(long)>& term, long start, long N, const TailModel& tail) {
    if (N < start) throw std::invalid_argument("empty range");
    detail::TailFitter fitter(start, N, tail, /*even_checkpoints=*/true);
    for (long n = start; n <= N; ++n) fitter.feed(n, term(n));
    return fitter.finish();
}

RealWithError alternating_sum(const std::function<double(long)>& term, long start, long N,
                              const TailModel& pair_tail) {
    if (N < start) throw std::invalid_argument("empty range");
    const long pairs = (N - start + 1) / 2;
    if (pairs < 1) {
        const double t = term(start);
        return {t, std::abs(t)};
    }
    detail::TailFitter fitter(1, pairs, pair_tail, /*even_checkpoints=*/false);
    long bad_sign = 0;
    long n = start;
    double last_pair = 0.0;
    for (long j = 1; j <= pairs; ++j) {
        const double a = term(n++);
        const double b = term(n++);
        if (a != 0.0 && b != 0.0 && std::signbit(a) == std::signbit(b)) ++bad_sign;
        last_pair = a + b;
        fitter.feed(j, last_pair);
    }
    // Zeros are tolerated; a run of same-sign neighbours is not.
    if (bad_sign > pairs / 16 + 2) throw std::runtime_error("not alternating");
    RealWithError r = fitter.finish();
    r.err += std::abs(last_pair);  // bounds the first omitted pair
    // Leftover odd term, if any, folded in with its magnitude in the bound.
    if ((N - start + 1) % 2 != 0) {
        const double t = term(n);
        r.value += t;
        r.err += std::abs(t);
    }
    return r;
}

}  // namespace eulersum
