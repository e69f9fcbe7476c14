#pragma once

#include <gmpxx.h>

#include <string>

namespace horadam {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

inline Integer integer_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer integer_pow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

inline bool divides(const Integer& d, const Integer& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer exact_quotient(const Integer& n, const Integer& d) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace horadam
