#pragma once

#include <tekum/errors.hpp>
#include <tekum/numeric.hpp>
#include <tekum/trit_string.hpp>

#include <cassert>
#include <compare>
#include <cstddef>
#include <string>

namespace tekum {

/// An extended-real value over the real wheel: NaR (bottom), zero, a single
/// unsigned infinity, or an exact nonzero rational. Finite rationals are kept
/// canonical; constructing a finite zero collapses to the zero tag.
class Value {
  public:
    enum class Kind { nar, zero, infinity, finite };

    Value() : kind_(Kind::zero) {}

    static Value nar() { return Value(Kind::nar); }
    static Value zero() { return Value(Kind::zero); }
    static Value infinity() { return Value(Kind::infinity); }

    static Value finite(Rational q) {
        q.canonicalize();
        if (sgn(q) == 0) return zero();
        Value v(Kind::finite);
        v.finite_ = std::move(q);
        return v;
    }

    static Value finite(const BigInt& numerator, const BigInt& denominator) {
        return finite(make_rational(numerator, denominator));
    }

    Kind kind() const noexcept { return kind_; }
    bool is_nar() const noexcept { return kind_ == Kind::nar; }
    bool is_zero() const noexcept { return kind_ == Kind::zero; }
    bool is_infinity() const noexcept { return kind_ == Kind::infinity; }
    bool is_finite() const noexcept { return kind_ == Kind::finite; }

    /// True for zero and finite values, i.e. everything with a real magnitude.
    bool is_real() const noexcept { return kind_ == Kind::zero || kind_ == Kind::finite; }

    /// The exact rational; only meaningful for finite values.
    const Rational& rational() const {
        assert(kind_ == Kind::finite);
        return finite_;
    }

    /// Real magnitude as a rational: 0 for zero, the rational for finite.
    Rational numeric() const {
        assert(is_real());
        return kind_ == Kind::zero ? Rational(0) : finite_;
    }

    bool operator==(const Value& other) const {
        if (kind_ != other.kind_) return false;
        if (kind_ != Kind::finite) return true;
        return finite_ == other.finite_;
    }

  private:
    explicit Value(Kind kind) : kind_(kind) {}

    Kind kind_;
    Rational finite_;
};

/// Total order with NaR below every value and infinity above every value;
/// zero and finite values compare as reals.
std::strong_ordering total_compare(const Value& a, const Value& b);

/// The closed arithmetic of the real wheel: every operation on every pair of
/// values yields a value, with infinity = 1/0 and NaR = 0/0 absorbing.
enum class WheelOp { add, sub, mul, div, inv, neg };

/// Applies a wheel operation exactly. `b` is ignored for inv and neg.
/// Total by construction; never throws.
Value wheel_apply(WheelOp op, const Value& a, const Value& b = Value::zero());

/// Decodes both operands, applies the exact wheel operation, and encodes the
/// result at the same width: one single rounding on the exact intermediate.
TritString rounded_apply(WheelOp op, const TritString& t, const TritString& u, std::size_t width);

/// Round-to-nearest scientific decimal with `significant_digits` digits,
/// half-even at the final decimal digit. Specials print as NaR, 0 and Inf.
/// Finite form: [-]d.d...de[-]k with no '+' on positive exponents.
std::string to_decimal(const Value& v, int significant_digits);

} // namespace tekum
