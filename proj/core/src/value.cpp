#include <tekum/value.hpp>

#include <tekum/codec.hpp>

#include <cassert>

namespace tekum {

std::strong_ordering total_compare(const Value& a, const Value& b) {
    // NaR sits below and infinity above every other value; reals by magnitude.
    const auto rank = [](const Value& v) {
        switch (v.kind()) {
        case Value::Kind::nar: return 0;
        case Value::Kind::zero:
        case Value::Kind::finite: return 1;
        case Value::Kind::infinity: return 2;
        }
        return 1;
    };
    if (rank(a) != rank(b)) return rank(a) <=> rank(b);
    if (!a.is_real()) return std::strong_ordering::equal;
    const int c = cmp(a.numeric(), b.numeric());
    return c <=> 0;
}

namespace {

Value wheel_neg(const Value& a) {
    switch (a.kind()) {
    case Value::Kind::nar: return Value::nar();
    case Value::Kind::zero: return Value::zero();
    case Value::Kind::infinity: return Value::infinity(); // single projective infinity
    case Value::Kind::finite: return Value::finite(-a.rational());
    }
    return Value::nar();
}

Value wheel_inv(const Value& a) {
    switch (a.kind()) {
    case Value::Kind::nar: return Value::nar();
    case Value::Kind::zero: return Value::infinity();
    case Value::Kind::infinity: return Value::zero();
    case Value::Kind::finite: return Value::finite(1 / a.rational());
    }
    return Value::nar();
}

Value wheel_add(const Value& a, const Value& b) {
    if (a.is_infinity() && b.is_infinity()) return Value::nar();
    if (a.is_infinity() || b.is_infinity()) return Value::infinity();
    return Value::finite(a.numeric() + b.numeric());
}

Value wheel_mul(const Value& a, const Value& b) {
    if (a.is_infinity() || b.is_infinity()) {
        if (a.is_zero() || b.is_zero()) return Value::nar();
        return Value::infinity();
    }
    return Value::finite(a.numeric() * b.numeric());
}

} // namespace

Value wheel_apply(WheelOp op, const Value& a, const Value& b) {
    const bool unary = op == WheelOp::inv || op == WheelOp::neg;
    if (a.is_nar() || (!unary && b.is_nar())) return Value::nar();
    switch (op) {
    case WheelOp::neg: return wheel_neg(a);
    case WheelOp::inv: return wheel_inv(a);
    case WheelOp::add: return wheel_add(a, b);
    case WheelOp::sub: return wheel_add(a, wheel_neg(b));
    case WheelOp::mul: return wheel_mul(a, b);
    case WheelOp::div: return wheel_mul(a, wheel_inv(b));
    }
    return Value::nar();
}

TritString rounded_apply(WheelOp op, const TritString& t, const TritString& u,
                         std::size_t width) {
    return encode(wheel_apply(op, decode(t), decode(u)), width);
}

namespace {

/// floor(log10(x)) for a positive rational, exact.
long floor_log10(const Rational& x) {
    assert(sgn(x) > 0);
    const BigInt& num = x.get_num();
    const BigInt& den = x.get_den();
    long estimate = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
                    static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
    const auto at_least = [&](long k) {
        // x >= 10^k  <=>  num * 10^max(0,-k) >= den * 10^max(0,k)
        BigInt lhs = num, rhs = den;
        if (k >= 0) {
            rhs *= pow10(static_cast<std::size_t>(k));
        } else {
            lhs *= pow10(static_cast<std::size_t>(-k));
        }
        return lhs >= rhs;
    };
    while (!at_least(estimate)) --estimate;
    while (at_least(estimate + 1)) ++estimate;
    return estimate;
}

/// Nearest integer to num/den with ties to even; den > 0.
BigInt round_half_even(const BigInt& num, const BigInt& den) {
    BigInt quotient, remainder;
    mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const BigInt twice = 2 * remainder;
    if (twice > den) return quotient + 1;
    if (twice < den) return quotient;
    return mpz_even_p(quotient.get_mpz_t()) ? quotient : quotient + 1;
}

} // namespace

std::string to_decimal(const Value& v, int significant_digits) {
    if (significant_digits < 1) {
        throw error(errc::domain_error, "significant_digits must be at least 1");
    }
    switch (v.kind()) {
    case Value::Kind::nar: return "NaR";
    case Value::Kind::zero: return "0";
    case Value::Kind::infinity: return "Inf";
    case Value::Kind::finite: break;
    }

    Rational x = v.rational();
    const bool negative = sgn(x) < 0;
    if (negative) x = -x;

    long exponent = floor_log10(x);
    const auto mantissa_for = [&](long exp10) {
        // round(x * 10^(digits - 1 - exp10)) as an integer
        const long shift = significant_digits - 1 - exp10;
        BigInt num = x.get_num();
        BigInt den = x.get_den();
        if (shift >= 0) {
            num *= pow10(static_cast<std::size_t>(shift));
        } else {
            den *= pow10(static_cast<std::size_t>(-shift));
        }
        return round_half_even(num, den);
    };
    BigInt mantissa = mantissa_for(exponent);
    if (mantissa == pow10(static_cast<std::size_t>(significant_digits))) {
        ++exponent; // rounding carried into the next decade, e.g. 9.97 -> 1.0e1
        mantissa = mantissa_for(exponent);
    }

    std::string digits = mantissa.get_str();
    assert(digits.size() == static_cast<std::size_t>(significant_digits));
    std::string out;
    if (negative) out.push_back('-');
    out.push_back(digits[0]);
    if (significant_digits > 1) {
        out.push_back('.');
        out.append(digits, 1, std::string::npos);
    }
    out.push_back('e');
    out += std::to_string(exponent);
    return out;
}

} // namespace tekum
