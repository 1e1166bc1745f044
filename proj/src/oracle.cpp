#include "eulersum/oracle.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "eulersum/combinatorics.hpp"
#include "eulersum/constants.hpp"
#include "eulersum/quadrature.hpp"

namespace eulersum::oracle {

namespace {

double powi(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

/// Incremental state for one factor; advance() must be called for n = 1, 2, ...
struct FactorState {
    Factor f;
    double xd = 1.0;  // double weight argument
    CompensatedSum acc;
    double xn = 1.0;              // x^n for partial_polylog / inner
    CompensatedSum inner_pl;      // zeta_n(l, x) feeding inner_harmonic
    std::vector<CompensatedSum> rec;  // bell / stirling column states

    explicit FactorState(const Factor& factor) : f(factor) {
        xd = to_double(f.x);
        if (f.kind == Factor::Kind::bell_y) {
            rec.resize(f.order + 1);
        } else if (f.kind == Factor::Kind::stirling_weight) {
            rec.resize(f.order + 1);
            if (f.order >= 1) rec[1].add(1.0);  // w_1(0) = S(1,1)/0! = 1
        }
    }

    void advance(long n) {
        const double inv = 1.0 / static_cast<double>(n);
        switch (f.kind) {
            case Factor::Kind::zeta_n:
                acc.add(powi(inv, f.order));
                break;
            case Factor::Kind::alt_zeta_n:
                acc.add((n % 2 == 1 ? 1.0 : -1.0) * powi(inv, f.order));
                break;
            case Factor::Kind::partial_polylog:
                xn *= xd;
                acc.add(xn * powi(inv, f.order));
                break;
            case Factor::Kind::inner_harmonic:
                xn *= xd;
                inner_pl.add(xn * powi(inv, f.inner_l));
                acc.add(inner_pl.value() * powi(inv, f.order));
                break;
            case Factor::Kind::bell_y:
                // Y_q(n) = Y_q(n-1) + q Y_{q-1}(n)/n, ascending q.
                for (int q = 1; q <= f.order; ++q) {
                    const double prev = q == 1 ? 1.0 : rec[q - 1].value();
                    rec[q].add(q * prev * inv);
                }
                break;
            case Factor::Kind::stirling_weight:
                // w_q(n) = w_q(n-1) + w_{q-1}(n-1)/n, descending q.
                for (int q = f.order; q >= 2; --q) rec[q].add(rec[q - 1].value() * inv);
                break;
        }
    }

    double value() const {
        switch (f.kind) {
            case Factor::Kind::bell_y:
                return f.order == 0 ? 1.0 : rec[f.order].value();
            case Factor::Kind::stirling_weight:
                return f.order == 1 ? 1.0 : rec[f.order].value();
            default:
                return acc.value();
        }
    }
};

struct TermStream {
    std::vector<FactorState> states;
    const SumDescriptor& desc;
    double wn = 1.0;
    double wd = 1.0;
    long next_n = 1;

    explicit TermStream(const SumDescriptor& d) : desc(d) {
        for (const auto& f : d.factors) states.emplace_back(f);
        wd = to_double(d.weight);
    }

    // Raw summand without the alternating sign.
    double raw(long n) {
        if (n != next_n++) throw std::logic_error("term stream must advance sequentially");
        double t = 1.0;
        for (auto& s : states) {
            s.advance(n);
            t *= powi(s.value(), s.f.exponent);
        }
        if (wd != 1.0) {
            wn *= wd;
            t *= wn;
        }
        const double nf = static_cast<double>(n);
        if (const auto* ker = std::get_if<Kernel>(&desc.outer))
            t /= (nf + ker->r) * (nf + ker->k);
        else if (const auto* sh = std::get_if<Shifted>(&desc.outer))
            t *= powi(1.0 / (nf + sh->k), static_cast<int>(sh->p));
        else
            t *= powi(1.0 / nf, static_cast<int>(std::get<long>(desc.outer)));
        return t;
    }
};

}  // namespace

int SumDescriptor::log_degree() const {
    int d = 0;
    for (const auto& f : factors) {
        switch (f.kind) {
            case Factor::Kind::zeta_n:
                if (f.order == 1) d += f.exponent;
                break;
            case Factor::Kind::partial_polylog:
                if (f.order == 1 && f.x == 1) d += f.exponent;
                break;
            case Factor::Kind::bell_y:
                d += f.order;
                break;
            case Factor::Kind::stirling_weight:
                d += f.order - 1;
                break;
            case Factor::Kind::inner_harmonic:
                if (f.order == 1) d += (f.inner_l == 1 && f.x == 1) ? 2 : 1;
                break;
            case Factor::Kind::alt_zeta_n:
                break;
        }
    }
    return d;
}

long SumDescriptor::power() const {
    if (has_kernel()) return 2;
    if (const auto* sh = std::get_if<Shifted>(&outer)) return sh->p;
    return std::get<long>(outer);
}

bool SumDescriptor::convergent() const {
    if (has_kernel()) return true;
    if (cmp(abs(weight), Rational(1)) < 0) return true;
    const long p = power();
    const bool alt = alternating != (weight == -1);  // weight -1 flips parity
    return alt ? p >= 1 : p >= 2;
}

std::string SumDescriptor::key() const {
    std::ostringstream os;
    for (const auto& f : factors) {
        os << static_cast<int>(f.kind) << ':' << f.order << '^' << f.exponent;
        if (f.kind == Factor::Kind::partial_polylog || f.kind == Factor::Kind::inner_harmonic)
            os << '@' << to_string(f.x) << ',' << f.inner_l;
        os << '*';
    }
    if (has_kernel())
        os << "|ker" << std::get<Kernel>(outer).r << ',' << std::get<Kernel>(outer).k;
    else if (const auto* sh = std::get_if<Shifted>(&outer))
        os << "|sh" << sh->k << '^' << sh->p;
    else
        os << "|p" << std::get<long>(outer);
    if (alternating) os << "|alt";
    if (weight != 1) os << "|w" << to_string(weight);
    return os.str();
}

std::string EvalConfig::key() const {
    std::ostringstream os;
    os << base_N;
    return os.str();
}

SumDescriptor S(std::vector<Factor> factors, long p, bool bar, Rational weight) {
    SumDescriptor d;
    d.factors = std::move(factors);
    d.outer = p;
    d.alternating = bar;
    d.weight = std::move(weight);
    return d;
}

SumDescriptor K(std::vector<Factor> factors, long r, long k, bool bar) {
    if (!(0 <= r && r < k)) throw std::invalid_argument("kernel requires 0 <= r < k");
    SumDescriptor d;
    d.factors = std::move(factors);
    d.outer = Kernel{r, k};
    d.alternating = bar;
    return d;
}

SumDescriptor Sh(std::vector<Factor> factors, long k, bool bar) {
    if (k < 0) throw std::invalid_argument("shift must be >= 0");
    SumDescriptor d;
    d.factors = std::move(factors);
    d.outer = Shifted{k, 1};
    d.alternating = bar;
    return d;
}

RealWithError Oracle::evaluate(const SumDescriptor& desc_in, const EvalConfig& cfg) {
    if (!desc_in.convergent()) throw std::invalid_argument("divergent sum");

    // Fold weight = -1 into the alternating flag: w^n = (-1)^n = -(-1)^{n-1}.
    SumDescriptor desc = desc_in;
    double flip = 1.0;
    if (desc.weight == -1) {
        desc.weight = 1;
        desc.alternating = !desc.alternating;
        flip = -1.0;
    }

    const std::string key = desc.key() + "#" + cfg.key();
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) {
            RealWithError r = it->second;
            r.value *= flip;
            return r;
        }
    }

    RealWithError result;
    TermStream stream(desc);
    const int d = desc.log_degree();
    const long p_eff = desc.power();

    if (cmp(abs(desc.weight), Rational(1)) < 0 && desc.weight != 0) {
        // Geometric decay: sum adaptively, no tail model needed.
        const double q = std::abs(to_double(desc.weight));
        CompensatedSum acc, abs_acc;
        double t = 0.0;
        long n = 1;
        for (; n <= 400000; ++n) {
            t = stream.raw(n);
            if (desc.alternating && n % 2 == 0) t = -t;
            acc.add(t);
            abs_acc.add(std::abs(t));
            if (n > 32 && std::abs(t) < 1e-18 * std::max(1.0, std::abs(acc.value()))) break;
        }
        result = {acc.value(), std::abs(t) / (1.0 - q) + 4e-16 * abs_acc.value()};
    } else if (desc.weight == 0) {
        result = {0.0, 0.0};
    } else if (desc.alternating) {
        const long pairs = cfg.alt_pairs();
        detail::TailFitter fitter(1, pairs, TailModel::power_log(static_cast<int>(p_eff) + 1, d), false);
        double last_pair = 0.0;
        for (long j = 1; j <= pairs; ++j) {
            const double a = stream.raw(2 * j - 1);
            const double b = stream.raw(2 * j);
            last_pair = a - b;
            fitter.feed(j, last_pair);
        }
        result = fitter.finish();
        result.err += std::abs(last_pair);
    } else {
        const long N = cfg.plain_N(p_eff);
        detail::TailFitter fitter(1, N, TailModel::power_log(static_cast<int>(p_eff), d), true);
        for (long n = 1; n <= N; ++n) fitter.feed(n, stream.raw(n));
        result = fitter.finish();
    }

    {
        std::lock_guard<std::mutex> lock(mutex_);
        cache_.emplace(key, result);
    }
    result.value *= flip;
    return result;
}

std::size_t Oracle::cache_size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.size();
}

Rational term_exact(const SumDescriptor& desc, long n) {
    namespace comb = eulersum::combinatorics;
    Rational t(1);
    for (const auto& f : desc.factors) {
        Rational v;
        switch (f.kind) {
            case Factor::Kind::zeta_n:
                v = comb::harmonic(n, f.order);
                break;
            case Factor::Kind::alt_zeta_n:
                v = comb::alt_harmonic(n, f.order);
                break;
            case Factor::Kind::partial_polylog:
                v = comb::partial_polylog(n, f.order, f.x);
                break;
            case Factor::Kind::bell_y:
                v = comb::bell_Y(f.order, n);
                break;
            case Factor::Kind::stirling_weight:
                v = Rational(comb::stirling_first(n + 1, f.order)) / Rational(factorial(n));
                break;
            case Factor::Kind::inner_harmonic: {
                v = 0;
                for (long k = 1; k <= n; ++k)
                    v += comb::partial_polylog(k, f.inner_l, f.x) / pow_rational(Rational(k), f.order);
                break;
            }
        }
        t *= pow_rational(v, f.exponent);
    }
    t *= pow_rational(desc.weight, n);
    if (desc.alternating && n % 2 == 0) t = -t;
    if (desc.has_kernel()) {
        const auto ker = std::get<Kernel>(desc.outer);
        t /= Rational((n + ker.r) * (n + ker.k));
    } else if (const auto* sh = std::get_if<Shifted>(&desc.outer)) {
        t /= pow_rational(Rational(n + sh->k), sh->p);
    } else {
        t /= pow_rational(Rational(n), std::get<long>(desc.outer));
    }
    return t;
}

std::vector<double> term_prefix(const SumDescriptor& desc_in, long count) {
    SumDescriptor desc = desc_in;
    double flip = 1.0;
    if (desc.weight == -1) {
        desc.weight = 1;
        desc.alternating = !desc.alternating;
        flip = -1.0;
    }
    TermStream stream(desc);
    std::vector<double> out;
    out.reserve(count);
    for (long n = 1; n <= count; ++n) {
        double t = stream.raw(n);
        if (desc.alternating && n % 2 == 0) t = -t;
        out.push_back(flip * t);
    }
    return out;
}

std::vector<PartialFractionTerm> kernel_partial_fraction(long k, long p, long n) {
    if (k < 1 || p < 1 || n < 1) throw std::invalid_argument("arguments must be >= 1");
    std::vector<PartialFractionTerm> terms;
    for (long i = 1; i <= p - 1; ++i) {
        Rational c = 1 / pow_rational(Rational(n), i);
        if (i % 2 == 0) c = -c;
        terms.push_back({c, static_cast<int>(p + 1 - i)});
    }
    Rational c = 1 / pow_rational(Rational(n), p - 1);
    if (p % 2 == 0) c = -c;
    terms.push_back({c, 0});
    return terms;
}

double nested_inner(long n, int m) {
    if (n < 0 || m < 1) throw std::invalid_argument("nested_inner requires n >= 0, m >= 1");
    CompensatedSum h, acc;
    for (long k = 1; k <= n; ++k) {
        h.add(1.0 / static_cast<double>(k));
        acc.add(h.value() * powi(1.0 / static_cast<double>(k), m));
    }
    return acc.value();
}

namespace {

long geti(const std::map<std::string, Rational>& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end()) throw std::invalid_argument("missing parameter: " + name);
    if (!is_integer(it->second)) throw std::invalid_argument("parameter must be an integer: " + name);
    return it->second.get_num().get_si();
}

Rational getq(const std::map<std::string, Rational>& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end()) throw std::invalid_argument("missing parameter: " + name);
    return it->second;
}

}  // namespace

IntegralCheck integral_identity_check(IntegralId id, const std::map<std::string, Rational>& params,
                                      const EvalConfig& cfg, Oracle& oracle, double tol) {
    namespace cons = eulersum::constants;
    IntegralCheck out;
    switch (id) {
        case IntegralId::eq2_5: {
            const long m = geti(params, "m"), r = geti(params, "r"), k = geti(params, "k");
            if (!(0 <= r && r < k)) throw std::invalid_argument("requires 0 <= r < k");
            out.integral = quad_tanh_sinh(
                [&](double x) {
                    return (std::pow(x, r - 1.0) - std::pow(x, k - 1.0)) * cons::polylog_real(m, x) / (1.0 - x);
                },
                0.0, 1.0, cfg.quad_tol);
            out.closed_form = static_cast<double>(k - r) * oracle.evaluate(K({zf(static_cast<int>(m))}, r, k), cfg);
            break;
        }
        case IntegralId::eq2_6: {
            const long m = geti(params, "m"), r = geti(params, "r"), k = geti(params, "k");
            if (!(0 <= r && r < k)) throw std::invalid_argument("requires 0 <= r < k");
            out.integral = quad_tanh_sinh(
                [&](double x) {
                    return (std::pow(x, k - 1.0) - std::pow(x, r - 1.0)) * cons::polylog_real(m, -x) / (1.0 - x);
                },
                0.0, 1.0, cfg.quad_tol);
            out.closed_form = static_cast<double>(k - r) * oracle.evaluate(K({lf(static_cast<int>(m))}, r, k), cfg);
            break;
        }
        case IntegralId::eq2_9: {
            const long n = geti(params, "n"), q = geti(params, "q");
            const double x = to_double(getq(params, "x"));
            if (!(0.0 < x && x < 1.0)) throw std::invalid_argument("requires x in (0,1)");
            out.integral = quad_tanh_sinh(
                [&](double t) { return std::pow(t, n - 1.0) * cons::polylog_real(static_cast<int>(q), t); }, 0.0, x,
                cfg.quad_tol);
            double closed = 0.0;
            for (long i = 1; i <= q - 1; ++i)
                closed += (i % 2 == 1 ? 1.0 : -1.0) * std::pow(x, static_cast<double>(n)) /
                          std::pow(static_cast<double>(n), static_cast<double>(i)) *
                          cons::polylog_real(static_cast<int>(q + 1 - i), x);
            const double sq = q % 2 == 0 ? 1.0 : -1.0;
            closed += sq / std::pow(static_cast<double>(n), static_cast<double>(q)) * std::log(1.0 - x) *
                      (std::pow(x, static_cast<double>(n)) - 1.0);
            closed -= sq / std::pow(static_cast<double>(n), static_cast<double>(q)) *
                      to_double(combinatorics::partial_polylog(n, 1, getq(params, "x")));
            out.closed_form = {closed, 1e-14 * std::abs(closed)};
            break;
        }
        case IntegralId::eq2_14: {
            const long n = geti(params, "n"), k = geti(params, "k");
            if (n < 1 || k < 0) throw std::invalid_argument("requires n >= 1, k >= 0");
            out.integral = quad_tanh_sinh(
                [&](double t) { return std::pow(t, n - 1.0) * powi(std::log(1.0 - t), static_cast<int>(k)); }, 0.0,
                1.0, cfg.quad_tol);
            const Rational y = combinatorics::bell_Y(static_cast<int>(k), n);
            const double closed = (k % 2 == 0 ? 1.0 : -1.0) * to_double(y) / static_cast<double>(n);
            out.closed_form = {closed, 1e-15 * std::abs(closed)};
            break;
        }
        case IntegralId::eq2_24: {
            const long p = geti(params, "p"), r = geti(params, "r"), k = geti(params, "k");
            if (p < 2) throw std::invalid_argument("requires p >= 2");
            if (!(0 <= r && r < k)) throw std::invalid_argument("requires 0 <= r < k");
            out.integral = quad_tanh_sinh(
                [&](double x) {
                    return powi(std::log(1.0 - x), static_cast<int>(p - 1)) / (1.0 - x) *
                           (std::pow(x, r - 1.0) - std::pow(x, k - 1.0));
                },
                0.0, 1.0, cfg.quad_tol);
            double pf = 1.0;
            for (long i = 2; i <= p - 1; ++i) pf *= i;
            out.closed_form = ((p % 2 == 1 ? 1.0 : -1.0) * pf * static_cast<double>(k - r)) *
                              oracle.evaluate(K({wf(static_cast<int>(p))}, r, k), cfg);
            break;
        }
        case IntegralId::eq2_26: {
            const long p = geti(params, "p");
            if (p < 2) throw std::invalid_argument("requires p >= 2");
            out.integral = quad_tanh_sinh(
                [&](double x) { return powi(std::log(1.0 - x), static_cast<int>(p - 1)) / x; }, 0.0, 1.0,
                cfg.quad_tol);
            double pf = 1.0;
            for (long i = 2; i <= p - 1; ++i) pf *= i;
            out.closed_form = ((p % 2 == 1 ? 1.0 : -1.0) * pf) * cons::zeta(static_cast<int>(p));
            break;
        }
    }
    out.residual = std::abs(out.integral.value - out.closed_form.value);
    out.pass = out.residual <= std::max(tol, 5.0 * (out.integral.err + out.closed_form.err));
    return out;
}

}  // namespace eulersum::oracle
