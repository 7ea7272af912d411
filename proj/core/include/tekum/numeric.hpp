#pragma once

#include <gmpxx.h>

#include <cstddef>

namespace tekum {

/// Arbitrary-precision signed integer. Exponent and bias arithmetic reaches
/// magnitudes around 3^200, far beyond any machine word.
using BigInt = mpz_class;

/// Exact rational, always kept canonical (lowest terms, positive denominator).
using Rational = mpq_class;

inline BigInt pow3(std::size_t exponent) {
    BigInt result;
    mpz_ui_pow_ui(result.get_mpz_t(), 3, exponent);
    return result;
}

inline BigInt pow10(std::size_t exponent) {
    BigInt result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
    return result;
}

/// Largest integer representable in `length` balanced ternary trits,
/// (3^length - 1) / 2. The representable range is symmetric around zero.
inline BigInt max_trit_integer(std::size_t length) {
    return (pow3(length) - 1) / 2;
}

/// Integer value of the alternating string 1T1T...1T of even length,
/// (3^length - 1) / 4. This is the anchor offset: the encoding of 1.
inline BigInt anchor_offset(std::size_t even_length) {
    return (pow3(even_length) - 1) / 4;
}

inline int sign_of(const BigInt& v) noexcept { return mpz_sgn(v.get_mpz_t()); }

inline Rational make_rational(BigInt numerator, BigInt denominator) {
    Rational q(std::move(numerator), std::move(denominator));
    q.canonicalize();
    return q;
}

} // namespace tekum
