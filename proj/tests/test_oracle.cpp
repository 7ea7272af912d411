#include <tekum/oracle.hpp>

#include <doctest.h>

using tekum::NearestScanner;
using tekum::Property;
using tekum::Rational;
using tekum::TritString;
using tekum::Value;
using tekum::WidthSpec;

TEST_CASE("enumeration walks the widths in increasing integer order") {
    const auto entries = tekum::enumerate(2);
    REQUIRE(entries.size() == 9);
    CHECK(entries.front().trits.str() == "TT");
    CHECK(entries.front().value.is_nar());
    CHECK(entries[4].trits.str() == "00");
    CHECK(entries[4].value.is_zero());
    CHECK(entries.back().trits.str() == "11");
    CHECK(entries.back().value.is_infinity());
    CHECK(tekum::enumerate(4).size() == 81);
}

TEST_CASE("enumeration rejects unsupported widths") {
    CHECK_THROWS_AS(tekum::enumerate(1), tekum::error);
    CHECK_THROWS_AS(tekum::enumerate(3), tekum::error);
    CHECK_THROWS_AS(tekum::enumerate(14), tekum::error);
}

TEST_CASE("enumeration is strictly increasing under the total order") {
    for (std::size_t n : {2, 4, 6}) {
        const auto entries = tekum::enumerate(n);
        for (std::size_t i = 1; i < entries.size(); ++i) {
            CHECK(tekum::total_compare(entries[i - 1].value, entries[i].value) ==
                  std::strong_ordering::less);
        }
    }
}

TEST_CASE("nearest search on Table 4 values") {
    CHECK(tekum::nearest_by_search(Rational(2), 4).str() == "1T11");
    CHECK(tekum::nearest_by_search(Rational(tekum::pow10(100)), 4).str() == "1110");
    CHECK(tekum::nearest_by_search(-Rational(tekum::pow10(100)), 4).str() == "TTT0");
}

TEST_CASE("nearest search resolves the midpoint five by anchor parity") {
    const NearestScanner scanner(4);
    // Both neighbours of 5 are exactly one away; this is a genuine tie.
    CHECK(abs(Rational(5) - tekum::decode(TritString::parse("10T0")).rational()) ==
          abs(Rational(5) - tekum::decode(TritString::parse("10T1")).rational()));
    const auto result = scanner.nearest(Rational(5));
    CHECK(result.tie);
    CHECK(result.trits.str() == "10T0");
    CHECK(scanner.nearest(Rational(7)).trits.str() == "10T1"); // 6 vs 9, no tie
    CHECK_FALSE(scanner.nearest(Rational(7)).tie);
}

TEST_CASE("monotonicity report counts adjacent pairs") {
    const auto report = tekum::check_property(Property::monotonicity, {{4, {}}});
    CHECK(report.passed());
    CHECK(report.cases_examined == 80);
    CHECK(report.to_text() == "PROP monotonicity n=4 cases=80 verdict=pass\n");
}

TEST_CASE("truncation report covers all non-special inputs of the pair") {
    // Anchor truncation rounds the anchor integer to nearest, which is not
    // the nearest value wherever whole exponent steps are dropped: values
    // grow geometrically there, so rounding the exponent up always loses to
    // the downward neighbour. The oracle pins the divergent inputs exactly.
    const auto report = tekum::check_property(Property::truncation, {{8, 4}});
    CHECK_FALSE(report.passed());
    CHECK(report.cases_examined == 6558);
    CHECK(report.failures.size() == 1428);
    CHECK(report.widths == "8:4");
    bool found = false;
    for (const auto& f : report.failures) {
        if (f.input == "TTT0T100") {
            found = true;
            CHECK(f.expected == "TTT1"); // -3^82, distance ~4.5e51
            CHECK(f.actual == "TTT0");   // -3^109, distance ~5.6e51
        }
    }
    CHECK(found);
}

TEST_CASE("the counterexample distances are verifiable by hand") {
    // decode(TTT0T100) = -(4/3) * 3^108; the truncated result -3^109 sits
    // farther away than the skipped candidate -3^82.
    const Rational x = tekum::decode(TritString::parse("TTT0T100")).rational();
    CHECK(x == -Rational(4) * Rational(tekum::pow3(107)));
    const Rational truncated = tekum::decode(TritString::parse("TTT0")).rational();
    const Rational skipped = tekum::decode(TritString::parse("TTT1")).rational();
    CHECK(abs(x - skipped) < abs(x - truncated));
    CHECK(tekum::truncate_round(TritString::parse("TTT0T100"), 4).str() == "TTT0");
}

TEST_CASE("truncation matches the oracle wherever only fraction trits drop") {
    // With two or more fraction trits available the dropped tail never
    // crosses an exponent step, and anchor truncation is the exact rounding.
    const NearestScanner scanner(6);
    for (const auto& entry : tekum::enumerate(8)) {
        if (!entry.value.is_finite()) continue;
        const auto fields = tekum::decode_fields(entry.trits);
        const auto& f = std::get<tekum::TekumFields>(fields);
        if (f.exponent_trit_count > 1) continue; // exponent trits would drop
        const auto truncated = tekum::truncate_round(entry.trits, 6);
        CHECK(truncated == scanner.nearest(entry.value.rational()).trits);
    }
}

TEST_CASE("truncation pairs derive from plain width lists") {
    const auto report =
        tekum::check_property(Property::truncation, {{4, {}}, {6, {}}, {8, {}}});
    CHECK(report.widths == "6:4,8:4,8:6");
    CHECK(report.cases_examined == 726 + 6558 + 6558);
    CHECK(report.failures.size() == 162 + 1428 + 730);
}

TEST_CASE("remaining properties pass at small widths") {
    CHECK(tekum::check_property(Property::uniqueness, {{2, {}}, {4, {}}}).passed());
    CHECK(tekum::check_property(Property::negation, {{2, {}}, {4, {}}}).passed());
    CHECK(tekum::check_property(Property::roundtrip, {{2, {}}, {4, {}}}).passed());
    CHECK(tekum::check_property(Property::divisibility, {}).passed());
    const auto encode_report = tekum::check_property(Property::encode_nearest, {{4, {}}});
    CHECK(encode_report.passed());
    CHECK(encode_report.cases_examined == 6558 + 10000);
}

TEST_CASE("reports with failures serialise one FAIL line per case") {
    tekum::PropertyReport report;
    report.property = "negation";
    report.widths = "4";
    report.cases_examined = 79;
    report.failures.push_back({"1T1T", "-1", "-2"});
    CHECK(report.to_text() == "PROP negation n=4 cases=79 verdict=fail\n"
                              "FAIL 1T1T expected=-1 actual=-2\n");
    CHECK_FALSE(report.passed());
}

TEST_CASE("property names round-trip") {
    for (Property p : tekum::all_properties()) {
        const auto back = tekum::property_from_name(tekum::property_name(p));
        REQUIRE(back.has_value());
        CHECK(*back == p);
    }
    CHECK_FALSE(tekum::property_from_name("bogus").has_value());
}

TEST_CASE("random suites are reproducible for a fixed seed") {
    const auto first = tekum::check_property(Property::encode_nearest, {{4, {}}}, 12345);
    const auto second = tekum::check_property(Property::encode_nearest, {{4, {}}}, 12345);
    CHECK(first.cases_examined == second.cases_examined);
    CHECK(first.passed() == second.passed());
}

TEST_CASE("small-width reports finish well inside the time guard") {
    const auto report = tekum::check_property(Property::monotonicity, {{8, {}}});
    CHECK(report.seconds < 10.0);
}
