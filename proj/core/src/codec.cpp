#include <tekum/codec.hpp>

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdlib>

namespace tekum {

namespace {

constexpr std::array<int, 8> k_bias_table = {0, 1, 2, 4, 10, 28, 82, 244};

bool is_all(const TritString& t, Trit digit) {
    if (t.empty()) return false;
    return std::all_of(t.trits().begin(), t.trits().end(), [&](Trit x) { return x == digit; });
}

void require_even_width(std::size_t n) {
    if (n < 2 || n % 2 != 0) {
        throw error(n % 2 != 0 ? errc::odd_length : errc::unsupported_length,
                    "tekum widths must be even and at least 2, got " + std::to_string(n));
    }
}

/// Decoded value of the positive string with |t| = anchor_int + (3^n-1)/4.
/// Shared by encode's monotone search; anchor_int ranges over the open
/// interval of non-special positive strings.
Value decode_positive_anchor(const BigInt& anchor_int, std::size_t n) {
    return decode(TritString::from_integer(anchor_int + anchor_offset(n), n));
}

} // namespace

int exponent_bias(int regime) {
    if (regime < -7 || regime > 7) {
        throw error(errc::out_of_range, "regime value " + std::to_string(regime) +
                                            " outside {-7..7}");
    }
    const int magnitude = k_bias_table[static_cast<std::size_t>(std::abs(regime))];
    return regime < 0 ? -magnitude : (regime > 0 ? magnitude : 0);
}

TritString anchor(const TritString& t) {
    require_even_width(t.size());
    return t.modulus().sub_wrapping(TritString::from_integer(anchor_offset(t.size()), t.size()));
}

TritString unanchor(int sign, const TritString& anchor_trits) {
    if (sign == 0) return TritString::zeros(anchor_trits.size());
    require_even_width(anchor_trits.size());
    const std::size_t n = anchor_trits.size();
    const BigInt magnitude = anchor_trits.integer_value() + anchor_offset(n);
    if (magnitude <= 0 || magnitude > max_trit_integer(n)) {
        throw error(errc::not_representable,
                    "no " + std::to_string(n) + "-trit string of sign " + std::to_string(sign) +
                        " has anchor " + anchor_trits.str());
    }
    const TritString positive = TritString::from_integer(magnitude, n);
    return sign < 0 ? positive.negated() : positive;
}

std::variant<Special, TekumFields> decode_fields(const TritString& t) {
    const std::size_t n = t.size();
    if (n == 1) {
        switch (t.at(0)) {
        case Trit::minus: return Special::nar;
        case Trit::zero: return Special::zero;
        case Trit::plus: return Special::infinity;
        }
    }
    require_even_width(n);
    if (is_all(t, Trit::minus)) return Special::nar;
    if (is_all(t, Trit::zero)) return Special::zero;
    if (is_all(t, Trit::plus)) return Special::infinity;

    TekumFields fields;
    fields.anchor = anchor(t);
    const std::size_t extended_width = std::max<std::size_t>(n, 8);
    const TritString extended =
        fields.anchor.concat(TritString::zeros(extended_width - n));

    fields.regime_trits = extended.prefix(3);
    fields.regime = static_cast<int>(fields.regime_trits.integer_value().get_si());
    fields.exponent_trit_count = std::max(0, std::abs(fields.regime) - 2);
    const std::size_t c = static_cast<std::size_t>(fields.exponent_trit_count);
    fields.exponent_trits = extended.slice(3, 3 + c);
    fields.fraction_trits = extended.slice(3 + c, extended_width);
    fields.bias = exponent_bias(fields.regime);
    fields.exponent =
        fields.bias + static_cast<int>(fields.exponent_trits.integer_value().get_si());
    fields.fraction_trit_count =
        std::max(0, static_cast<int>(n) - fields.exponent_trit_count - 3);
    fields.fraction = make_rational(fields.fraction_trits.integer_value(),
                                    pow3(fields.fraction_trits.size()));
    fields.sign = t.sign();
    return fields;
}

Value decode(const TritString& t) {
    const auto result = decode_fields(t);
    if (const auto* special = std::get_if<Special>(&result)) {
        switch (*special) {
        case Special::nar: return Value::nar();
        case Special::zero: return Value::zero();
        case Special::infinity: return Value::infinity();
        }
    }
    const auto& f = std::get<TekumFields>(result);
    Rational significand = f.fraction + 1;
    Rational scale = f.exponent >= 0
                         ? Rational(pow3(static_cast<std::size_t>(f.exponent)))
                         : make_rational(1, pow3(static_cast<std::size_t>(-f.exponent)));
    Rational value = significand * scale;
    if (f.sign < 0) value = -value;
    return Value::finite(std::move(value));
}

TritString encode(const Value& v, std::size_t width) {
    if (width == 1) {
        switch (v.kind()) {
        case Value::Kind::nar: return TritString::parse("T");
        case Value::Kind::zero: return TritString::parse("0");
        case Value::Kind::infinity: return TritString::parse("1");
        case Value::Kind::finite:
            throw error(errc::special_only,
                        "width 1 represents only NaR, 0 and infinity");
        }
    }
    require_even_width(width);
    switch (v.kind()) {
    case Value::Kind::nar: return TritString::repeated(Trit::minus, width);
    case Value::Kind::zero: return TritString::zeros(width);
    case Value::Kind::infinity: return TritString::repeated(Trit::plus, width);
    case Value::Kind::finite: break;
    }

    const Rational& x = v.rational();
    if (sgn(x) < 0) {
        return encode(Value::finite(-x), width).negated();
    }

    // Positive finite: the decoded value is strictly increasing in the anchor
    // integer, so a binary search over [1 - Q, Q - 1] with Q = (3^n - 1)/4
    // finds the two enclosing representable values.
    const BigInt q = anchor_offset(width);
    BigInt lo = 1 - q;
    BigInt hi = q - 1;
    const Rational lo_value = decode_positive_anchor(lo, width).rational();
    const Rational hi_value = decode_positive_anchor(hi, width).rational();

    BigInt chosen;
    if (x <= lo_value) {
        chosen = lo; // saturates below the smallest positive value
    } else if (x >= hi_value) {
        chosen = hi; // saturates above the largest finite value
    } else {
        // Invariant: value(lo) <= x < value(hi).
        while (hi - lo > 1) {
            const BigInt mid = (lo + hi) / 2;
            if (decode_positive_anchor(mid, width).rational() <= x) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        const Rational down = x - decode_positive_anchor(lo, width).rational();
        const Rational up = decode_positive_anchor(hi, width).rational() - x;
        if (down < up) {
            chosen = lo;
        } else if (up < down) {
            chosen = hi;
        } else {
            chosen = mpz_even_p(lo.get_mpz_t()) ? lo : hi;
        }
    }
    return TritString::from_integer(chosen + q, width);
}

TritString truncate_round(const TritString& t, std::size_t width) {
    const std::size_t n = t.size();
    require_even_width(n);
    if (is_all(t, Trit::minus) || is_all(t, Trit::zero) || is_all(t, Trit::plus)) {
        throw error(errc::special_input,
                    "special values re-encode directly instead of truncating");
    }
    if (width == n) return t;
    if (width % 2 != 0 || width < 4 || width > n) {
        throw error(errc::bad_width, "truncation width must be even with 4 <= m <= n, got " +
                                         std::to_string(width));
    }
    const int sign = t.sign();
    const TritString truncated_anchor = anchor(t).prefix(width);
    BigInt magnitude = truncated_anchor.integer_value() + anchor_offset(width);
    // The truncated anchor can collide with the reserved strings at the two
    // ends of the range; the result then saturates to the nearest finite
    // value, exactly as encode does.
    const BigInt largest = max_trit_integer(width);
    if (magnitude == 0) magnitude = 1;
    if (magnitude == largest) magnitude = largest - 1;
    const TritString positive = TritString::from_integer(magnitude, width);
    return sign < 0 ? positive.negated() : positive;
}

TritString extend(const TritString& t, std::size_t width) {
    const std::size_t n = t.size();
    require_even_width(n);
    if (width <= n || width % 2 != 0) {
        throw error(errc::bad_width, "extension width must be even and exceed " +
                                         std::to_string(n) + ", got " + std::to_string(width));
    }
    if (is_all(t, Trit::minus)) return TritString::repeated(Trit::minus, width);
    if (is_all(t, Trit::zero)) return TritString::zeros(width);
    if (is_all(t, Trit::plus)) return TritString::repeated(Trit::plus, width);
    const TritString widened_anchor = anchor(t).concat(TritString::zeros(width - n));
    return unanchor(t.sign(), widened_anchor);
}

} // namespace tekum
