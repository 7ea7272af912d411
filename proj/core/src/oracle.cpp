#include <tekum/oracle.hpp>

#include <tekum/range_metrics.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

namespace tekum {

namespace {

// Common denominator exponent: every decoded value at width <= 12 is an
// integer multiple of 3^-192, so scaling by 3^200 clears all denominators.
constexpr std::size_t k_common_scale = 200;

constexpr long long k_random_samples_per_width = 10000;
constexpr long k_divisibility_limit = 200;

void require_enumerable(std::size_t width) {
    if (width > max_enumeration_width) {
        throw error(errc::width_too_large, "exhaustive enumeration is capped at width " +
                                               std::to_string(max_enumeration_width));
    }
    if (width < 2 || width % 2 != 0) {
        throw error(errc::unsupported_length,
                    "enumeration needs an even width >= 2, got " + std::to_string(width));
    }
}

std::string width_list_text(const std::vector<WidthSpec>& widths) {
    std::ostringstream out;
    for (std::size_t i = 0; i < widths.size(); ++i) {
        if (i) out << ',';
        out << widths[i].n;
        if (widths[i].m) out << ':' << *widths[i].m;
    }
    return out.str();
}

std::vector<std::size_t> plain_widths(const std::vector<WidthSpec>& widths) {
    std::vector<std::size_t> out;
    for (const auto& w : widths) {
        if (!w.m) out.push_back(w.n);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>>
truncation_pairs(const std::vector<WidthSpec>& widths) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& w : widths) {
        if (w.m) pairs.emplace_back(w.n, *w.m);
    }
    if (pairs.empty()) {
        const auto plain = plain_widths(widths);
        for (std::size_t i = 0; i < plain.size(); ++i) {
            for (std::size_t j = i + 1; j < plain.size(); ++j) {
                if (plain[i] >= 4) pairs.emplace_back(plain[j], plain[i]);
            }
        }
    }
    return pairs;
}

bool is_special(const Value& v) { return !v.is_finite(); }

std::string value_text(const Value& v) {
    switch (v.kind()) {
    case Value::Kind::nar: return "NaR";
    case Value::Kind::zero: return "0";
    case Value::Kind::infinity: return "Inf";
    case Value::Kind::finite: return v.rational().get_str();
    }
    return "?";
}

class StopWatch {
  public:
    double elapsed() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

  private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

/// Random rationals covering every regime: a log-uniform ternary exponent in
/// [-200, 200] (well past saturation at both ends) with a dyadic mantissa.
/// A slice of the samples is placed exactly on representable values and on
/// midpoints of adjacent representable values to exercise the tie rule.
class RandomRationalSource {
  public:
    RandomRationalSource(std::uint64_t seed, std::size_t width)
        : engine_(seed ^ (0x9e3779b97f4a7c15ULL * width)), width_(width) {}

    Rational next() {
        const int shape = static_cast<int>(engine_() % 8);
        if (shape == 0) return representable();
        if (shape == 1) return midpoint();
        return generic();
    }

  private:
    Rational generic() {
        std::uniform_int_distribution<long> exponent_dist(-200, 200);
        std::uniform_int_distribution<std::uint64_t> mantissa_dist(0, (1ULL << 40) - 1);
        const long k = exponent_dist(engine_);
        const BigInt numerator = BigInt(1UL << 40) + BigInt(mantissa_dist(engine_));
        Rational x = k >= 0
                         ? make_rational(numerator * pow3(static_cast<std::size_t>(k)),
                                         BigInt(1UL << 40))
                         : make_rational(numerator,
                                         BigInt(1UL << 40) * pow3(static_cast<std::size_t>(-k)));
        return coin() ? x : Rational(-x);
    }

    Rational representable() {
        return decode(TritString::from_integer(random_nonspecial_integer(), width_)).rational();
    }

    Rational midpoint() {
        // Midpoint of two adjacent positive representable values.
        const BigInt top = max_trit_integer(width_) - 2;
        BigInt lo = 1 + random_below(top);
        const Rational a = decode(TritString::from_integer(lo, width_)).rational();
        const Rational b = decode(TritString::from_integer(lo + 1, width_)).rational();
        Rational x = (a + b) / 2;
        return coin() ? x : Rational(-x);
    }

    BigInt random_nonspecial_integer() {
        const BigInt top = max_trit_integer(width_);
        BigInt v = random_below(2 * top - 1) + (1 - top);
        return v == 0 ? BigInt(1) : v;
    }

    BigInt random_below(const BigInt& bound) {
        // bound fits in 64 bits for every enumerable width
        std::uniform_int_distribution<std::uint64_t> dist(0, bound.get_ui() - 1);
        return BigInt(dist(engine_));
    }

    bool coin() { return (engine_() & 1) != 0; }

    std::mt19937_64 engine_;
    std::size_t width_;
};

} // namespace

std::vector<Enumerated> enumerate(std::size_t width) {
    require_enumerable(width);
    const BigInt top = max_trit_integer(width);
    std::vector<Enumerated> entries;
    entries.reserve(mpz_get_ui(BigInt(2 * top + 1).get_mpz_t()));
    for (BigInt v = -top; v <= top; ++v) {
        TritString t = TritString::from_integer(v, width);
        Value value = decode(t);
        entries.push_back({std::move(t), std::move(value)});
    }
    return entries;
}

NearestScanner::NearestScanner(std::size_t width) : width_(width), entries_(enumerate(width)) {
    const BigInt scale = pow3(k_common_scale);
    const BigInt offset = anchor_offset(width);
    candidates_.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (is_special(entries_[i].value)) continue;
        const Rational& v = entries_[i].value.rational();
        BigInt scaled = v.get_num() * scale;
        mpz_divexact(scaled.get_mpz_t(), scaled.get_mpz_t(), v.get_den().get_mpz_t());
        const BigInt anchor_int = abs(entries_[i].trits.integer_value()) - offset;
        candidates_.push_back({i, std::move(scaled), mpz_even_p(anchor_int.get_mpz_t()) != 0});
    }
}

NearestScanner::Result NearestScanner::nearest(const Rational& x) const {
    // |x - v_i| = |x_num * 3^s - w_i * x_den| / (x_den * 3^s): the divisor is
    // shared, so exact integer comparison of the numerators decides the scan.
    BigInt target = x.get_num() * pow3(k_common_scale);
    const BigInt& den = x.get_den();

    BigInt best_distance;
    BigInt distance;
    std::size_t best = candidates_.size();
    bool best_even = false;
    bool tie = false;
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
        const Candidate& c = candidates_[i];
        mpz_mul(distance.get_mpz_t(), c.scaled_value.get_mpz_t(), den.get_mpz_t());
        mpz_sub(distance.get_mpz_t(), target.get_mpz_t(), distance.get_mpz_t());
        if (best == candidates_.size()) {
            best = i;
            best_even = c.even_anchor;
            mpz_abs(best_distance.get_mpz_t(), distance.get_mpz_t());
            continue;
        }
        const int order = mpz_cmpabs(distance.get_mpz_t(), best_distance.get_mpz_t());
        if (order < 0) {
            best = i;
            best_even = c.even_anchor;
            mpz_abs(best_distance.get_mpz_t(), distance.get_mpz_t());
            tie = false;
        } else if (order == 0) {
            tie = true;
            if (c.even_anchor && !best_even) {
                best = i;
                best_even = true;
            }
        }
    }
    return {entries_[candidates_[best].entry_index].trits, tie};
}

TritString nearest_by_search(const Rational& x, std::size_t width) {
    return NearestScanner(width).nearest(x).trits;
}

std::string property_name(Property p) {
    switch (p) {
    case Property::uniqueness: return "uniqueness";
    case Property::negation: return "negation";
    case Property::monotonicity: return "monotonicity";
    case Property::roundtrip: return "roundtrip";
    case Property::truncation: return "truncation";
    case Property::encode_nearest: return "encode_nearest";
    case Property::double_rounding: return "double_rounding";
    case Property::divisibility: return "divisibility";
    }
    return "?";
}

std::optional<Property> property_from_name(const std::string& name) {
    for (Property p : all_properties()) {
        if (property_name(p) == name) return p;
    }
    return std::nullopt;
}

std::vector<Property> all_properties() {
    return {Property::uniqueness,  Property::negation,       Property::monotonicity,
            Property::roundtrip,   Property::truncation,     Property::encode_nearest,
            Property::double_rounding, Property::divisibility};
}

std::string PropertyReport::to_text() const {
    std::ostringstream out;
    out << "PROP " << property << " n=" << widths << " cases=" << cases_examined
        << " verdict=" << (passed() ? "pass" : "fail") << '\n';
    for (const auto& f : failures) {
        out << "FAIL " << f.input << " expected=" << f.expected << " actual=" << f.actual << '\n';
    }
    return out.str();
}

namespace {

void check_uniqueness(PropertyReport& report, std::size_t width) {
    const auto entries = enumerate(width);
    std::vector<std::size_t> order(entries.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return total_compare(entries[a].value, entries[b].value) < 0;
    });
    report.cases_examined += static_cast<long long>(entries.size());
    for (std::size_t i = 1; i < order.size(); ++i) {
        const auto& previous = entries[order[i - 1]];
        const auto& current = entries[order[i]];
        if (current.value == previous.value) {
            report.failures.push_back({current.trits.str(), "value distinct from every other",
                                       "duplicates " + previous.trits.str()});
        }
    }
}

void check_negation(PropertyReport& report, std::size_t width) {
    for (const auto& entry : enumerate(width)) {
        if (entry.value.is_nar() || entry.value.is_infinity()) continue;
        ++report.cases_examined;
        const Value expected = wheel_apply(WheelOp::neg, entry.value);
        const Value actual = decode(entry.trits.negated());
        if (!(actual == expected)) {
            report.failures.push_back(
                {entry.trits.str(), value_text(expected), value_text(actual)});
        }
    }
}

void check_monotonicity(PropertyReport& report, std::size_t width) {
    const auto entries = enumerate(width);
    for (std::size_t i = 1; i < entries.size(); ++i) {
        ++report.cases_examined;
        if (total_compare(entries[i - 1].value, entries[i].value) >= 0) {
            report.failures.push_back({entries[i - 1].trits.str() + "<" + entries[i].trits.str(),
                                       "strictly increasing decoded values",
                                       value_text(entries[i - 1].value) +
                                           " !< " + value_text(entries[i].value)});
        }
    }
}

void check_roundtrip(PropertyReport& report, std::size_t width) {
    for (const auto& entry : enumerate(width)) {
        ++report.cases_examined;
        const TritString back = encode(entry.value, width);
        if (!(back == entry.trits)) {
            report.failures.push_back({entry.trits.str(), entry.trits.str(), back.str()});
        }
    }
}

void check_truncation(PropertyReport& report, std::size_t from_width, std::size_t to_width) {
    const NearestScanner scanner(to_width);
    for (const auto& entry : enumerate(from_width)) {
        if (is_special(entry.value)) continue;
        ++report.cases_examined;
        const TritString truncated = truncate_round(entry.trits, to_width);
        const auto oracle = scanner.nearest(entry.value.rational());
        if (!(truncated == oracle.trits)) {
            report.failures.push_back({entry.trits.str(), oracle.trits.str(), truncated.str()});
        } else if (oracle.tie) {
            // Dropped anchor tails are under half a unit in the last kept
            // place, so this path must never see an equidistant pair.
            report.failures.push_back(
                {entry.trits.str(), "unique nearest value", "tie at " + oracle.trits.str()});
        }
    }
}

void check_encode_nearest(PropertyReport& report, std::size_t width, std::uint64_t seed) {
    const NearestScanner scanner(width);
    const auto compare_one = [&](const Rational& x, const std::string& label) {
        ++report.cases_examined;
        const TritString encoded = encode(Value::finite(x), width);
        const auto oracle = scanner.nearest(x);
        if (!(encoded == oracle.trits)) {
            report.failures.push_back({label, oracle.trits.str(), encoded.str()});
        }
    };

    if (width < 8) {
        for (const auto& entry : enumerate(8)) {
            if (is_special(entry.value)) continue;
            compare_one(entry.value.rational(), entry.trits.str());
        }
    }
    RandomRationalSource source(seed, width);
    for (long long i = 0; i < k_random_samples_per_width; ++i) {
        const Rational x = source.next();
        compare_one(x, x.get_str());
    }
}

void check_double_rounding(PropertyReport& report) {
    for (const auto& entry : enumerate(10)) {
        if (is_special(entry.value)) continue;
        ++report.cases_examined;
        const TritString two_steps = truncate_round(truncate_round(entry.trits, 8), 4);
        const TritString one_step = truncate_round(entry.trits, 4);
        if (!(two_steps == one_step)) {
            report.failures.push_back({entry.trits.str(), one_step.str(), two_steps.str()});
        }
    }
}

void check_divisibility(PropertyReport& report) {
    const auto result = divisibility_check(k_divisibility_limit);
    report.cases_examined += result.cases_examined;
    for (long k : result.counterexamples) {
        report.failures.push_back({"k=" + std::to_string(k),
                                   "4 | (3^(2k) - 5) and 4 does not divide 3^k - 4",
                                   "claim violated"});
    }
}

} // namespace

PropertyReport check_property(Property property, const std::vector<WidthSpec>& widths,
                              std::uint64_t seed) {
    const StopWatch watch;
    PropertyReport report;
    report.property = property_name(property);
    switch (property) {
    case Property::uniqueness:
    case Property::negation:
    case Property::monotonicity:
    case Property::roundtrip:
    case Property::encode_nearest: {
        const auto plain = plain_widths(widths);
        if (plain.empty()) {
            throw error(errc::domain_error,
                        "property " + report.property + " needs at least one width");
        }
        std::ostringstream label;
        for (std::size_t i = 0; i < plain.size(); ++i) {
            if (i) label << ',';
            label << plain[i];
        }
        report.widths = label.str();
        for (std::size_t n : plain) {
            switch (property) {
            case Property::uniqueness: check_uniqueness(report, n); break;
            case Property::negation: check_negation(report, n); break;
            case Property::monotonicity: check_monotonicity(report, n); break;
            case Property::roundtrip: check_roundtrip(report, n); break;
            case Property::encode_nearest: check_encode_nearest(report, n, seed); break;
            default: break;
            }
        }
        break;
    }
    case Property::truncation: {
        const auto pairs = truncation_pairs(widths);
        if (pairs.empty()) {
            throw error(errc::domain_error,
                        "truncation needs width pairs n:m or at least two plain widths");
        }
        std::ostringstream label;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (i) label << ',';
            label << pairs[i].first << ':' << pairs[i].second;
        }
        report.widths = label.str();
        for (const auto& [n, m] : pairs) check_truncation(report, n, m);
        break;
    }
    case Property::double_rounding:
        report.widths = "10:8:4";
        check_double_rounding(report);
        break;
    case Property::divisibility:
        report.widths = "k<=" + std::to_string(k_divisibility_limit);
        check_divisibility(report);
        break;
    }
    report.seconds = watch.elapsed();
    return report;
}

std::vector<PropertyReport> check_all(const std::vector<WidthSpec>& widths, std::uint64_t seed) {
    std::vector<PropertyReport> reports;
    reports.reserve(all_properties().size());
    for (Property p : all_properties()) {
        reports.push_back(check_property(p, widths, seed));
    }
    return reports;
}

} // namespace tekum
