#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace fibnet {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Canonicalized rational n/d.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline BigInt pow_int(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Rational pow_rational(const Rational& base, unsigned long exp) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
    return r;  // base canonical => power canonical
}

/// Base-2 logarithm of a positive integer, accurate over any magnitude.
inline double log2_of(const BigInt& v) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return static_cast<double>(exp) + std::log2(mant);
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

/// "p/q" for non-integers, plain decimal otherwise.
inline std::string to_decimal(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace fibnet
