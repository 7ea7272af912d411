#pragma once

#include <tekum/codec.hpp>
#include <tekum/numeric.hpp>
#include <tekum/trit_string.hpp>
#include <tekum/value.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tekum {

inline constexpr std::size_t max_enumeration_width = 12;
inline constexpr std::uint64_t default_check_seed = 0x7e4046u;

struct Enumerated {
    TritString trits;
    Value value;
};

/// All 3^width strings in increasing integer order with their decoded values.
/// Accepts even widths 2..12 (errc::width_too_large beyond the cap).
std::vector<Enumerated> enumerate(std::size_t width);

/// Brute-force nearest: a straight linear scan over the full enumeration,
/// minimising the exact distance |x - value| over non-special entries, ties
/// to the candidate with even anchor integer. Kept deliberately independent
/// of encode's search; the only shared ingredient is decode itself.
class NearestScanner {
  public:
    explicit NearestScanner(std::size_t width);

    struct Result {
        TritString trits;
        bool tie = false; // two candidates were exactly equidistant
    };

    Result nearest(const Rational& x) const;

    std::size_t width() const noexcept { return width_; }
    const std::vector<Enumerated>& entries() const noexcept { return entries_; }

  private:
    struct Candidate {
        std::size_t entry_index;
        BigInt scaled_value; // value * 3^common_scale, an exact integer
        bool even_anchor;
    };

    std::size_t width_;
    std::vector<Enumerated> entries_;
    std::vector<Candidate> candidates_;
};

/// One-shot wrapper around NearestScanner.
TritString nearest_by_search(const Rational& x, std::size_t width);

enum class Property {
    uniqueness,
    negation,
    monotonicity,
    roundtrip,
    truncation,
    encode_nearest,
    double_rounding,
    divisibility,
};

std::string property_name(Property p);
std::optional<Property> property_from_name(const std::string& name);
std::vector<Property> all_properties();

/// A width argument for a property check: a single width, or an n:m pair for
/// the two-width truncation check.
struct WidthSpec {
    std::size_t n = 0;
    std::optional<std::size_t> m;
};

struct PropertyFailure {
    std::string input;
    std::string expected;
    std::string actual;
};

struct PropertyReport {
    std::string property;
    std::string widths;
    long long cases_examined = 0;
    std::vector<PropertyFailure> failures;
    double seconds = 0.0;

    bool passed() const noexcept { return failures.empty(); }

    /// Line format: "PROP <name> n=<widths> cases=<k> verdict=<pass|fail>"
    /// followed by one "FAIL <input> expected=<..> actual=<..>" per failure.
    std::string to_text() const;
};

/// Runs one exhaustive or randomized check. Width interpretation:
///  - uniqueness/negation/monotonicity/roundtrip: one sweep per plain width;
///  - truncation: explicit n:m pairs, or every n>m combination of the plain
///    widths (m >= 4);
///  - encode_nearest: per plain width, width-8 values re-encoded exhaustively
///    (for widths < 8) plus 10000 seeded random rationals;
///  - double_rounding: fixed 10 -> 8 -> 4 sweep over all 10-trit strings;
///  - divisibility: exact check for all indices k <= 200.
PropertyReport check_property(Property property, const std::vector<WidthSpec>& widths,
                              std::uint64_t seed = default_check_seed);

std::vector<PropertyReport> check_all(const std::vector<WidthSpec>& widths,
                                      std::uint64_t seed = default_check_seed);

} // namespace tekum
