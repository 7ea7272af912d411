#pragma once

#include <tekum/codec.hpp>
#include <tekum/trit_string.hpp>

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace tekum {

inline constexpr std::size_t decode_table_columns = 15;

/// Header of the decode table, matching the cell order of decode_table_cells:
/// t, integer, sign, anchor, regime trits, regime value, exponent trit count,
/// exponent trits, bias, exponent, fraction trit count, fraction trits,
/// fraction, 1 + fraction, decoded value.
const std::array<std::string, decode_table_columns>& decode_table_header();

/// All fifteen cells for one row. Special rows fill only t, the integer and
/// the value. The fraction and 1+fraction cells print with one decimal; the
/// value cell prints with two significant digits.
std::array<std::string, decode_table_columns> decode_table_cells(const TritString& t);

struct DecodeTableOptions {
    std::size_t width = 4;
    bool positive_only = false; // keep the rows with integer value >= -1
    bool csv = false;
};

/// The full decode table at one width. Text output is capped at width 8,
/// CSV at the enumeration cap of 12.
std::string render_decode_table(const DecodeTableOptions& options);

/// Multi-line field breakdown of a single string, optionally with the
/// regime/exponent/fraction colour scheme applied to the trit fields.
std::string render_decode_breakdown(const TritString& t, bool colour);

/// Fixed-point with one decimal digit, round half away from zero.
std::string format_fixed1(const Rational& q);

namespace colour {
inline constexpr const char* regime = "\x1b[38;2;4;111;135m";    // #046F87
inline constexpr const char* exponent = "\x1b[38;2;131;79;120m"; // #834F78
inline constexpr const char* fraction = "\x1b[38;2;99;99;99m";   // #636363
inline constexpr const char* reset = "\x1b[0m";
} // namespace colour

} // namespace tekum
