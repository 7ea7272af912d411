#pragma once

#include <tekum/errors.hpp>
#include <tekum/numeric.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tekum {

/// One balanced ternary digit. The digit -1 is written 'T'.
enum class Trit : std::int8_t { minus = -1, zero = 0, plus = 1 };

constexpr int trit_value(Trit t) noexcept { return static_cast<int>(t); }

constexpr Trit negated(Trit t) noexcept { return static_cast<Trit>(-static_cast<int>(t)); }

constexpr char trit_char(Trit t) noexcept {
    switch (t) {
    case Trit::minus: return 'T';
    case Trit::zero: return '0';
    case Trit::plus: return '1';
    }
    return '?';
}

constexpr std::optional<Trit> trit_from_char(char c) noexcept {
    switch (c) {
    case 'T':
    case 't': return Trit::minus;
    case '0': return Trit::zero;
    case '1': return Trit::plus;
    default: return std::nullopt;
    }
}

/// A fixed-length, immutable string of balanced ternary digits, most
/// significant trit first. Length zero is legal and has integer value 0.
/// All operations are pure; the length of a value never changes.
class TritString {
  public:
    TritString() = default;

    explicit TritString(std::vector<Trit> msb_first) : trits_(std::move(msb_first)) {}

    /// Parses 'T'/'t'/'0'/'1' text, most significant trit first.
    /// Throws errc::invalid_character with the offending position.
    static TritString parse(std::string_view text);

    /// Inverse of integer_value at a fixed length.
    /// Throws errc::out_of_range when |value| > (3^length - 1) / 2.
    static TritString from_integer(const BigInt& value, std::size_t length);

    static TritString repeated(Trit t, std::size_t length) {
        return TritString(std::vector<Trit>(length, t));
    }

    static TritString zeros(std::size_t length) { return repeated(Trit::zero, length); }

    std::size_t size() const noexcept { return trits_.size(); }
    bool empty() const noexcept { return trits_.empty(); }

    /// Trit at `index` counted from the most significant end.
    Trit at(std::size_t index) const { return trits_.at(index); }

    const std::vector<Trit>& trits() const noexcept { return trits_; }

    /// Canonical text form, uppercase 'T'.
    std::string str() const;

    /// Sum of trit_i * 3^i; the result lies in [-(3^n-1)/2, (3^n-1)/2].
    BigInt integer_value() const;

    /// Sign of integer_value, read off the most significant nonzero trit.
    int sign() const noexcept;

    /// Entrywise digit flip; integer value negates exactly.
    TritString negated() const;

    /// Absolute value: negation when the integer value is negative.
    TritString modulus() const;

    /// Fixed-width sum discarding overflow, with the out-of-range correction
    /// of +-(3^n + 1)/2. Throws errc::length_mismatch on unequal lengths.
    TritString add_wrapping(const TritString& other) const;

    /// add_wrapping with the negated operand.
    TritString sub_wrapping(const TritString& other) const;

    /// This string in the most significant positions, `other` appended.
    TritString concat(const TritString& other) const;

    /// The `count` most significant trits.
    TritString prefix(std::size_t count) const;

    /// Trits [begin, end) counted from the most significant end.
    TritString slice(std::size_t begin, std::size_t end) const;

    /// Integer-value order; requires equal lengths (errc::length_mismatch).
    /// Equivalent to lexicographic comparison with T < 0 < 1.
    std::strong_ordering compare(const TritString& other) const;

    bool operator==(const TritString& other) const = default;

  private:
    std::vector<Trit> trits_;
};

} // namespace tekum
