#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eulersum {

// Exact arithmetic carriers. mpq_class keeps gcd(num,den)=1 and den>0 as long
// as values are built through arithmetic or canonicalized construction.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parse "3", "-1/2", "5/8" into an exact rational.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(text, 10) != 0 || sgn(q.get_den()) <= 0)
        throw std::invalid_argument("bad rational literal: " + text);
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(const BigInt& z) { return z.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative");
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

inline Rational pow_rational(const Rational& x, long e) {
    if (e < 0) {
        if (sgn(x) == 0) throw std::invalid_argument("0 to a negative power");
        return 1 / pow_rational(x, -e);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;  // x canonical => x^e canonical
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace eulersum
