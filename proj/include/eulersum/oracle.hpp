#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eulersum/rational.hpp"
#include "eulersum/real_with_error.hpp"
#include "eulersum/summation.hpp"

namespace eulersum::oracle {

/// One multiplicative factor of an Euler-type summand, of index n.
struct Factor {
    enum class Kind {
        zeta_n,           // zeta_n(order)
        alt_zeta_n,       // L_n(order)
        partial_polylog,  // zeta_n(order, x)
        bell_y,           // Y_order(n)
        stirling_weight,  // S(n+1, order) / n!
        inner_harmonic,   // sum_{k<=n} zeta_k(inner_l, x) / k^order
    };
    Kind kind = Kind::zeta_n;
    int order = 1;
    int exponent = 1;
    Rational x{1};
    int inner_l = 1;
};

inline Factor zf(int m, int e = 1) { return {Factor::Kind::zeta_n, m, e}; }
inline Factor lf(int m, int e = 1) { return {Factor::Kind::alt_zeta_n, m, e}; }
inline Factor plf(int l, Rational x, int e = 1) { return {Factor::Kind::partial_polylog, l, e, std::move(x)}; }
inline Factor yf(int p) { return {Factor::Kind::bell_y, p}; }
inline Factor wf(int p) { return {Factor::Kind::stirling_weight, p}; }
inline Factor innerf(int m, Rational x = Rational(1), int l = 1) {
    return {Factor::Kind::inner_harmonic, m, 1, std::move(x), l};
}

/// Outer denominator (n+r)(n+k), 0 <= r < k.
struct Kernel {
    long r = 0;
    long k = 1;
};

/// Outer denominator (n+k)^p (used with p = 1 for the alternating shifted sums).
struct Shifted {
    long k = 0;
    long p = 1;
};

/// Symbolic description of one Euler-type sum: product of factors times
/// weight^n times (-1)^{n-1} (if alternating), over n^p, (n+r)(n+k) or (n+k)^p.
struct SumDescriptor {
    std::vector<Factor> factors;
    std::variant<long, Kernel, Shifted> outer = 2L;
    bool alternating = false;
    Rational weight{1};

    bool has_kernel() const { return std::holds_alternative<Kernel>(outer); }
    long power() const;
    /// Degree of the ln(n) polynomial in the term asymptotics.
    int log_degree() const;
    bool convergent() const;
    std::string key() const;
};

// Convenience builders for the common families.
SumDescriptor S(std::vector<Factor> factors, long p, bool bar = false, Rational weight = Rational(1));
SumDescriptor K(std::vector<Factor> factors, long r, long k, bool bar = false);
SumDescriptor Sh(std::vector<Factor> factors, long k, bool bar = true);

/// Truncation settings. base_N scales every family: plain power-2 and kernel
/// sums run to base_N, faster-decaying sums to base_N/10, alternating sums to
/// base_N/50 pairs; |weight| < 1 sums are summed adaptively.
struct EvalConfig {
    long base_N = 1'000'000;
    double quad_tol = 1e-11;

    long plain_N(long power) const { return power >= 3 ? std::max<long>(2000, base_N / 10) : std::max<long>(2000, base_N); }
    long alt_pairs() const { return std::max<long>(1000, base_N / 50); }
    std::string key() const;
};

/// Evaluates sum descriptors numerically with incremental factor updates,
/// caching results keyed by (descriptor, config).
class Oracle {
  public:
    RealWithError evaluate(const SumDescriptor& desc, const EvalConfig& cfg);
    std::size_t cache_size() const;

  private:
    mutable std::mutex mutex_;
    std::map<std::string, RealWithError> cache_;
};

/// Raw n-th summand of a descriptor (weight and sign included), computed from
/// scratch with exact rational arithmetic. Test oracle for the incremental path.
Rational term_exact(const SumDescriptor& desc, long n);

/// First `count` summands from the incremental evaluation path (weight and
/// sign included), for cross-checking against term_exact.
std::vector<double> term_prefix(const SumDescriptor& desc, long count);

/// Partial fraction expansion of 1/(k^p (n+k)): powers of 1/k against 1/n^i,
/// plus the trailing kernel term. Summed exactly it reproduces the original.
struct PartialFractionTerm {
    Rational coefficient;  // includes the 1/n^i part
    int k_power = 0;       // 1/k^{k_power}; 0 marks the 1/(k(n+k)) kernel term
};
std::vector<PartialFractionTerm> kernel_partial_fraction(long k, long p, long n);

/// Floating-point inner sum sum_{k<=n} H_k/k^m, incrementally updated.
double nested_inner(long n, int m);

/// Quadrature-vs-series checks for the integral identities.
enum class IntegralId { eq2_5, eq2_6, eq2_9, eq2_14, eq2_24, eq2_26 };

struct IntegralCheck {
    RealWithError integral;
    RealWithError closed_form;
    double residual = 0.0;
    bool pass = false;
};

IntegralCheck integral_identity_check(IntegralId id, const std::map<std::string, Rational>& params,
                                      const EvalConfig& cfg, Oracle& oracle, double tol = 1e-9);

}  // namespace eulersum::oracle
