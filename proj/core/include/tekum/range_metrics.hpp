#pragma once

#include <tekum/numeric.hpp>

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace tekum {

/// A regime-to-exponent-trit-count mapping and its derived biases. The count
/// vector is non-decreasing, starts at zero and steps by at most one; the
/// biases make the exponent ranges of consecutive regimes contiguous.
struct MappingFamily {
    std::string name;
    std::array<int, 8> exponent_trit_counts{}; // indexed by |regime|
    std::array<int, 8> biases{};               // derived, biases[0] == 0
};

/// Biases from the recurrence b[0] = 0,
/// b[k] = b[k-1] + (3^c[k-1] - 1)/2 + (3^c[k] - 1)/2 + 1.
std::array<int, 8> derive_biases(const std::array<int, 8>& exponent_trit_counts);

/// The seven candidate regime mappings of the design space, in the order
/// absr, max0r1, alpha, max0r2, beta, max0r3, gamma. max0r2 is the mapping
/// the tekum format uses.
std::vector<MappingFamily> builtin_families();

const MappingFamily& tekum_family(); // max0r2

/// Exponent reach of one regime magnitude: e in [e_min, e_max] and the
/// decimal logs of 3^e at the interval ends.
struct RangeRow {
    int abs_regime = 0;
    int exponent_trit_count = 0;
    long e_min = 0;
    long e_max = 0;
    double lg_min = 0.0;
    double lg_max = 0.0;
};

/// One row per |regime| in {0..7}. For |regime| < 7 the range is
/// bias +- (3^c - 1)/2; at |regime| = 7 the top is capped by the largest
/// asymptotic anchor, whose exponent trits are the alternating string T1T1...
std::vector<RangeRow> range_table(const MappingFamily& family);

struct DynamicRange {
    Rational min_positive; // decode(0...01)
    Rational max_finite;   // decode(1...10)
};

/// Extremal finite magnitudes at a given even width >= 2.
DynamicRange dynamic_range(std::size_t width);

/// Encoding overhead at one exponent: the non-fraction trits 3 + c and their
/// bit equivalent, with the decimal-log interval of magnitudes the exponent
/// covers, [lg(0.5 * 3^e), lg(1.5 * 3^e)).
struct OverheadRow {
    long exponent = 0;
    double log10_lo = 0.0;
    double log10_hi = 0.0;
    int nonfraction_trits = 0;
    double nonfraction_bits = 0.0;
};

/// One row per representable exponent at the given even width >= 8.
/// Consecutive intervals tile the covered magnitude range exactly.
std::vector<OverheadRow> overhead_profile(std::size_t width);

/// Information content of `count` trits in bits, count * log2(3).
double trits_to_bits(long count);

/// Radix economy floor(log_base(n) + 1) * base: digits needed to write n in
/// the given base, times the base. Requires base > 1 and n >= 1.
double radix_economy(double base, const BigInt& n);

/// Verdict of the exact divisibility sweep behind the even-width restriction:
/// 4 | (3^(2k) - 5) for every k, while 4 never divides 3^k - 4.
struct DivisibilityReport {
    long max_index = 0;
    long long cases_examined = 0;
    std::vector<long> counterexamples; // empty on success
    bool passed() const { return counterexamples.empty(); }
};

DivisibilityReport divisibility_check(long max_index);

/// CSV emitters for the analysis surfaces (headers included, '\n' line ends).
std::string mappings_csv();
std::string dynrange_csv(std::size_t max_width);
std::string overhead_csv(std::size_t width);

} // namespace tekum
