#include <tekum/range_metrics.hpp>

#include <tekum/codec.hpp>
#include <tekum/trit_string.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <variant>

namespace tekum {

namespace {

const double k_log10_3 = std::log10(3.0);
const double k_log2_3 = std::log2(3.0);

long half_range(int trit_count) {
    // (3^c - 1) / 2 fits comfortably in a long for c <= 7
    long p = 1;
    for (int i = 0; i < trit_count; ++i) p *= 3;
    return (p - 1) / 2;
}

/// Integer value of the alternating exponent cap T1T1... of the given length:
/// the exponent trits of the largest anchor 1T1T...01 once the width is large
/// enough that the trailing 01 lies in the fraction.
long alternating_cap(int trit_count) {
    long value = 0;
    for (int i = 0; i < trit_count; ++i) {
        value = 3 * value + (i % 2 == 0 ? -1 : 1);
    }
    return value;
}

std::string format_double(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", v);
    return buffer;
}

double log10_rational(const Rational& q) { return std::log10(q.get_d()); }

} // namespace

std::array<int, 8> derive_biases(const std::array<int, 8>& exponent_trit_counts) {
    std::array<int, 8> biases{};
    biases[0] = 0;
    for (std::size_t k = 1; k < 8; ++k) {
        biases[k] = biases[k - 1] + static_cast<int>(half_range(exponent_trit_counts[k - 1])) +
                    static_cast<int>(half_range(exponent_trit_counts[k])) + 1;
    }
    return biases;
}

std::vector<MappingFamily> builtin_families() {
    const std::vector<std::pair<std::string, std::array<int, 8>>> counts = {
        {"absr", {0, 1, 2, 3, 4, 5, 6, 7}},   // |r|
        {"max0r1", {0, 0, 1, 2, 3, 4, 5, 6}}, // max(0, |r|-1)
        {"alpha", {0, 0, 1, 1, 2, 3, 4, 5}},
        {"max0r2", {0, 0, 0, 1, 2, 3, 4, 5}}, // max(0, |r|-2), the tekum mapping
        {"beta", {0, 0, 0, 1, 1, 2, 3, 4}},
        {"max0r3", {0, 0, 0, 0, 1, 2, 3, 4}}, // max(0, |r|-3)
        {"gamma", {0, 0, 0, 0, 1, 1, 2, 3}},
    };
    std::vector<MappingFamily> families;
    families.reserve(counts.size());
    for (const auto& [name, c] : counts) {
        families.push_back({name, c, derive_biases(c)});
    }
    return families;
}

const MappingFamily& tekum_family() {
    static const MappingFamily family = [] {
        for (const auto& f : builtin_families()) {
            if (f.name == "max0r2") return f;
        }
        throw error(errc::domain_error, "max0r2 family missing");
    }();
    return family;
}

std::vector<RangeRow> range_table(const MappingFamily& family) {
    std::vector<RangeRow> rows;
    rows.reserve(8);
    for (int abs_r = 0; abs_r <= 7; ++abs_r) {
        const int c = family.exponent_trit_counts[static_cast<std::size_t>(abs_r)];
        const long bias = family.biases[static_cast<std::size_t>(abs_r)];
        RangeRow row;
        row.abs_regime = abs_r;
        row.exponent_trit_count = c;
        row.e_min = bias - half_range(c);
        row.e_max = abs_r == 7 ? bias + alternating_cap(c) : bias + half_range(c);
        row.lg_min = static_cast<double>(row.e_min) * k_log10_3;
        row.lg_max = static_cast<double>(row.e_max) * k_log10_3;
        rows.push_back(row);
    }
    return rows;
}

DynamicRange dynamic_range(std::size_t width) {
    if (width < 2 || width % 2 != 0) {
        throw error(errc::unsupported_length,
                    "dynamic range is defined for even widths >= 2, got " + std::to_string(width));
    }
    auto min_string = TritString::zeros(width - 1).concat(TritString::parse("1"));
    auto max_string = TritString::repeated(Trit::plus, width - 1).concat(TritString::parse("0"));
    return {decode(min_string).rational(), decode(max_string).rational()};
}

std::vector<OverheadRow> overhead_profile(std::size_t width) {
    if (width < 8 || width % 2 != 0) {
        throw error(errc::unsupported_length,
                    "overhead profile is defined for even widths >= 8, got " +
                        std::to_string(width));
    }
    const auto rows_by_regime = range_table(tekum_family());
    const auto top = decode_fields(
        TritString::repeated(Trit::plus, width - 1).concat(TritString::parse("0")));
    const long e_max = std::get<TekumFields>(top).exponent;

    const auto trit_count_for = [&](long exponent) {
        const long magnitude = exponent < 0 ? -exponent : exponent;
        for (const auto& row : rows_by_regime) {
            if (magnitude >= row.e_min && magnitude <= row.e_max) {
                return 3 + row.exponent_trit_count;
            }
        }
        throw error(errc::out_of_range, "exponent " + std::to_string(exponent) +
                                            " outside every regime");
    };

    std::vector<OverheadRow> rows;
    rows.reserve(static_cast<std::size_t>(2 * e_max + 1));
    const double lg_half = std::log10(0.5);
    for (long e = -e_max; e <= e_max; ++e) {
        OverheadRow row;
        row.exponent = e;
        row.log10_lo = lg_half + static_cast<double>(e) * k_log10_3;
        row.log10_hi = lg_half + static_cast<double>(e + 1) * k_log10_3;
        row.nonfraction_trits = trit_count_for(e);
        row.nonfraction_bits = static_cast<double>(row.nonfraction_trits) * k_log2_3;
        rows.push_back(row);
    }
    return rows;
}

double trits_to_bits(long count) {
    if (count < 0) {
        throw error(errc::domain_error, "trit count must be non-negative");
    }
    return static_cast<double>(count) * k_log2_3;
}

double radix_economy(double base, const BigInt& n) {
    if (!(base > 1.0) || n < 1) {
        throw error(errc::domain_error, "radix economy needs base > 1 and n >= 1");
    }
    // Digit count of n in the given base; exact integer comparisons when the
    // base is integral, otherwise a long-double power walk.
    long digits = 1;
    const double integral_base = std::floor(base);
    if (base == integral_base && base <= static_cast<double>(1UL << 30)) {
        const unsigned long b = static_cast<unsigned long>(integral_base);
        BigInt power(b);
        while (power <= n) {
            power *= b;
            ++digits;
        }
    } else {
        long double power = static_cast<long double>(base);
        const long double target = static_cast<long double>(n.get_d());
        while (power <= target) {
            power *= static_cast<long double>(base);
            ++digits;
        }
    }
    return static_cast<double>(digits) * base;
}

DivisibilityReport divisibility_check(long max_index) {
    if (max_index < 1) {
        throw error(errc::domain_error, "divisibility sweep needs max_index >= 1");
    }
    DivisibilityReport report;
    report.max_index = max_index;
    for (long k = 1; k <= max_index; ++k) {
        ++report.cases_examined;
        const BigInt even_power = pow3(static_cast<std::size_t>(2 * k)) - 5;
        const BigInt shifted = pow3(static_cast<std::size_t>(k)) - 4;
        const bool even_divides = mpz_divisible_ui_p(even_power.get_mpz_t(), 4) != 0;
        const bool shifted_divides = mpz_divisible_ui_p(shifted.get_mpz_t(), 4) != 0;
        if (!even_divides || shifted_divides) {
            report.counterexamples.push_back(k);
        }
    }
    return report;
}

std::string mappings_csv() {
    std::ostringstream out;
    out << "family,abs_r,c,b,e_min,e_max,lg_min,lg_max\n";
    for (const auto& family : builtin_families()) {
        for (const auto& row : range_table(family)) {
            out << family.name << ',' << row.abs_regime << ',' << row.exponent_trit_count << ','
                << family.biases[static_cast<std::size_t>(row.abs_regime)] << ',' << row.e_min
                << ',' << row.e_max << ',' << format_double(row.lg_min) << ','
                << format_double(row.lg_max) << '\n';
        }
    }
    return out.str();
}

std::string dynrange_csv(std::size_t max_width) {
    if (max_width < 2) {
        throw error(errc::unsupported_length, "dynamic range sweep needs max width >= 2");
    }
    std::ostringstream out;
    out << "n,min_pos_log10,max_log10\n";
    for (std::size_t n = 2; n <= max_width; n += 2) {
        const auto range = dynamic_range(n);
        out << n << ',' << format_double(log10_rational(range.min_positive)) << ','
            << format_double(log10_rational(range.max_finite)) << '\n';
    }
    return out.str();
}

std::string overhead_csv(std::size_t width) {
    std::ostringstream out;
    out << "e,log10_lo,log10_hi,trits,bits\n";
    for (const auto& row : overhead_profile(width)) {
        out << row.exponent << ',' << format_double(row.log10_lo) << ','
            << format_double(row.log10_hi) << ',' << row.nonfraction_trits << ','
            << format_double(row.nonfraction_bits) << '\n';
    }
    return out.str();
}

} // namespace tekum
