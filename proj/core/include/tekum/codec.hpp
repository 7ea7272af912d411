#pragma once

#include <tekum/numeric.hpp>
#include <tekum/trit_string.hpp>
#include <tekum/value.hpp>

#include <cstddef>
#include <variant>

namespace tekum {

/// The three reserved strings: NaR = T...T, zero = 0...0, infinity = 1...1.
/// Detected on the raw input string before any anchor arithmetic.
enum class Special { nar, zero, infinity };

/// Field decomposition of a non-special tekum. The regime, exponent and
/// fraction trits are cut from the anchor after zero-extension to width
/// max(n, 8); fraction_trit_count reports the unextended count max(0, n-c-3).
struct TekumFields {
    int sign = 0;                 // -1 or +1
    int regime = 0;               // in {-7..7}
    int exponent_trit_count = 0;  // c = max(0, |regime| - 2), in {0..5}
    int fraction_trit_count = 0;  // reported p = max(0, n - c - 3)
    int bias = 0;                 // sign(regime) * (0,1,2,4,10,28,82,244)[|regime|]
    int exponent = 0;             // bias + integer value of the exponent trits, in {-183..183}
    Rational fraction;            // in (-1/2, 1/2), denominator a power of 3
    TritString anchor;            // unextended, same width as the input
    TritString regime_trits;      // 3 trits of the extended anchor
    TritString exponent_trits;    // c trits of the extended anchor
    TritString fraction_trits;    // remaining trits of the extended anchor
};

/// Bias lookup sign(regime) * (0,1,2,4,10,28,82,244)[|regime|].
/// Requires regime in {-7..7}.
int exponent_bias(int regime);

/// Shifted modulus |t| - 1T...1T aligning the encoding of 1 to the all-zero
/// string. Requires even length >= 2 (errc::odd_length on odd input).
TritString anchor(const TritString& t);

/// Inverse of the anchor map for a given sign. sign 0 yields the zero string
/// for any input. Throws errc::not_representable when no string of the
/// requested sign has this anchor.
TritString unanchor(int sign, const TritString& anchor_trits);

/// Splits a trit string into its special tag or its field decomposition.
/// Accepts even widths >= 2 and width 1 (specials only);
/// throws errc::unsupported_length otherwise.
std::variant<Special, TekumFields> decode_fields(const TritString& t);

/// Exact decoded value: specials map to their tags, everything else to
/// sign * (1 + fraction) * 3^exponent as an exact rational.
Value decode(const TritString& t);

/// Round-to-nearest encoding at the given even width. Ties between adjacent
/// representable values go to the candidate with even anchor integer. Finite
/// nonzero input never rounds to a special: magnitudes beyond the finite
/// range saturate to the extreme finite value of the same sign.
TritString encode(const Value& v, std::size_t width);

/// Precision reduction by anchor truncation: drops the least significant
/// anchor trits and restores the sign. Equals the nearest shorter tekum,
/// i.e. encode(decode(t), width). Requires a non-special input
/// (errc::special_input) and even width with 4 <= width <= size
/// (errc::bad_width); width == size is the identity.
TritString truncate_round(const TritString& t, std::size_t width);

/// Value-preserving widening: specials widen to specials, everything else
/// zero-extends the anchor. decode(extend(t, m)) == decode(t) exactly.
TritString extend(const TritString& t, std::size_t width);

} // namespace tekum
