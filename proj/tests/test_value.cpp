#include <tekum/value.hpp>

#include <tekum/codec.hpp>

#include <doctest.h>

#include <vector>

using tekum::Rational;
using tekum::to_decimal;
using tekum::total_compare;
using tekum::TritString;
using tekum::Value;
using tekum::wheel_apply;
using tekum::WheelOp;

namespace {

Rational pow3_rational(long exponent) {
    return exponent >= 0
               ? Rational(tekum::pow3(static_cast<std::size_t>(exponent)))
               : tekum::make_rational(1, tekum::pow3(static_cast<std::size_t>(-exponent)));
}

std::vector<Value> representative_values() {
    return {Value::nar(),
            Value::zero(),
            Value::infinity(),
            Value::finite(Rational(1)),
            Value::finite(Rational(-1)),
            Value::finite(tekum::make_rational(-4, 3)),
            Value::finite(Rational(tekum::pow10(80)))};
}

} // namespace

TEST_CASE("finite zero collapses to the zero tag") {
    CHECK(Value::finite(Rational(0)).is_zero());
    CHECK(Value::finite(tekum::make_rational(0, 7)).is_zero());
    CHECK(Value::finite(Rational(3)).is_finite());
}

TEST_CASE("total order puts NaR below and infinity above everything") {
    CHECK(total_compare(Value::nar(), Value::zero()) == std::strong_ordering::less);
    CHECK(total_compare(Value::infinity(), Value::finite(Rational(tekum::pow10(80)))) ==
          std::strong_ordering::greater);
    CHECK(total_compare(Value::finite(tekum::make_rational(-4, 3)),
                        Value::finite(tekum::make_rational(-4, 3))) ==
          std::strong_ordering::equal);
    CHECK(total_compare(Value::zero(), Value::finite(tekum::make_rational(-1, 1000))) ==
          std::strong_ordering::greater);
    CHECK(total_compare(Value::nar(), Value::nar()) == std::strong_ordering::equal);
}

TEST_CASE("total order is antisymmetric and transitive over representatives") {
    const auto values = representative_values();
    for (const auto& a : values) {
        for (const auto& b : values) {
            const auto ab = total_compare(a, b);
            const auto ba = total_compare(b, a);
            CHECK((ab == std::strong_ordering::equal) == (ba == std::strong_ordering::equal));
            if (ab == std::strong_ordering::less) CHECK(ba == std::strong_ordering::greater);
            for (const auto& c : values) {
                if (ab != std::strong_ordering::greater &&
                    total_compare(b, c) != std::strong_ordering::greater) {
                    CHECK(total_compare(a, c) != std::strong_ordering::greater);
                }
            }
        }
    }
}

TEST_CASE("wheel identities from the definition of infinity and NaR") {
    CHECK(wheel_apply(WheelOp::div, Value::finite(Rational(1)), Value::zero()).is_infinity());
    CHECK(wheel_apply(WheelOp::div, Value::zero(), Value::zero()).is_nar());
    CHECK(wheel_apply(WheelOp::mul, Value::zero(), Value::infinity()).is_nar());
    CHECK(wheel_apply(WheelOp::add, Value::finite(tekum::make_rational(2, 3)),
                      Value::finite(tekum::make_rational(1, 3)))
              .rational() == 1);
}

TEST_CASE("wheel rule table") {
    const Value two = Value::finite(Rational(2));
    CHECK(wheel_apply(WheelOp::add, two, Value::infinity()).is_infinity());
    CHECK(wheel_apply(WheelOp::sub, two, Value::infinity()).is_infinity());
    CHECK(wheel_apply(WheelOp::add, Value::infinity(), Value::infinity()).is_nar());
    CHECK(wheel_apply(WheelOp::sub, Value::infinity(), Value::infinity()).is_nar());
    CHECK(wheel_apply(WheelOp::mul, two, Value::infinity()).is_infinity());
    CHECK(wheel_apply(WheelOp::mul, Value::infinity(), Value::infinity()).is_infinity());
    CHECK(wheel_apply(WheelOp::div, two, Value::infinity()).is_zero());
    CHECK(wheel_apply(WheelOp::div, Value::zero(), Value::infinity()).is_zero());
    CHECK(wheel_apply(WheelOp::div, Value::infinity(), Value::infinity()).is_nar());
    CHECK(wheel_apply(WheelOp::div, Value::infinity(), Value::zero()).is_infinity());
    CHECK(wheel_apply(WheelOp::inv, Value::zero()).is_infinity());
    CHECK(wheel_apply(WheelOp::inv, Value::infinity()).is_zero());
    CHECK(wheel_apply(WheelOp::inv, two).rational() == tekum::make_rational(1, 2));
    CHECK(wheel_apply(WheelOp::neg, Value::infinity()).is_infinity());
    CHECK(wheel_apply(WheelOp::neg, Value::zero()).is_zero());
    CHECK(wheel_apply(WheelOp::neg, two).rational() == -2);
}

TEST_CASE("NaR absorbs every operation") {
    const auto ops = {WheelOp::add, WheelOp::sub, WheelOp::mul, WheelOp::div};
    for (WheelOp op : ops) {
        for (const auto& other : representative_values()) {
            CHECK(wheel_apply(op, Value::nar(), other).is_nar());
            CHECK(wheel_apply(op, other, Value::nar()).is_nar());
        }
    }
    CHECK(wheel_apply(WheelOp::inv, Value::nar()).is_nar());
    CHECK(wheel_apply(WheelOp::neg, Value::nar()).is_nar());
}

TEST_CASE("wheel operations are total over all tag combinations") {
    const auto ops = {WheelOp::add, WheelOp::sub, WheelOp::mul,
                      WheelOp::div, WheelOp::inv, WheelOp::neg};
    for (WheelOp op : ops) {
        for (const auto& a : representative_values()) {
            for (const auto& b : representative_values()) {
                const Value result = wheel_apply(op, a, b); // must not throw
                CHECK((result.is_nar() || result.is_zero() || result.is_infinity() ||
                       result.is_finite()));
            }
        }
    }
}

TEST_CASE("multiplying by the inverse recovers one exactly for finite values") {
    const auto values = {Value::finite(tekum::make_rational(-4, 3)),
                         Value::finite(Rational(7)),
                         Value::finite(tekum::make_rational(1, tekum::pow10(30)))};
    for (const auto& v : values) {
        CHECK(wheel_apply(WheelOp::mul, v, wheel_apply(WheelOp::inv, v)).rational() == 1);
    }
    for (const auto& v : {Value::zero(), Value::infinity(), Value::nar()}) {
        CHECK(wheel_apply(WheelOp::mul, v, wheel_apply(WheelOp::inv, v)).is_nar());
    }
}

TEST_CASE("double negation is the identity") {
    for (const auto& v : representative_values()) {
        CHECK(wheel_apply(WheelOp::neg, wheel_apply(WheelOp::neg, v)) == v);
    }
}

TEST_CASE("rounded application computes exactly and rounds once") {
    const auto t = [](const char* s) { return TritString::parse(s); };
    CHECK(tekum::rounded_apply(WheelOp::mul, t("1T11"), t("1T11"), 4).str() == "10T0"); // 4.0
    CHECK(tekum::rounded_apply(WheelOp::add, t("1T1T"), t("1T1T"), 4).str() == "1T11"); // 2.0
    // 4/3 + 1 = 7/3 rounds to the nearer of 2.0 and 3.0
    CHECK(tekum::rounded_apply(WheelOp::add, t("1T10"), t("1T1T"), 4).str() == "1T11");
    CHECK(tekum::rounded_apply(WheelOp::div, t("1T1T"), t("0000"), 4).str() == "1111");
    CHECK(tekum::rounded_apply(WheelOp::div, t("0000"), t("0000"), 4).str() == "TTTT");
}

TEST_CASE("decimal rendering at two significant digits matches Table 4") {
    CHECK(to_decimal(Value::finite(pow3_rational(-109)), 2) == "9.9e-53");
    CHECK(to_decimal(Value::finite(pow3_rational(109)), 2) == "1.0e52");
    CHECK(to_decimal(Value::zero(), 2) == "0");
    CHECK(to_decimal(Value::nar(), 2) == "NaR");
    CHECK(to_decimal(Value::infinity(), 2) == "Inf");
    CHECK(to_decimal(Value::finite(tekum::make_rational(4, 3)), 2) == "1.3e0");
    CHECK(to_decimal(Value::finite(tekum::make_rational(-2, 9)), 2) == "-2.2e-1");
    CHECK(to_decimal(Value::finite(pow3_rational(-82)), 2) == "7.5e-40");
    CHECK(to_decimal(Value::finite(pow3_rational(28)), 2) == "2.3e13");
}

TEST_CASE("decimal rendering rounds half to even and carries decades") {
    CHECK(to_decimal(Value::finite(tekum::make_rational(25, 100)), 1) == "2e-1");
    CHECK(to_decimal(Value::finite(tekum::make_rational(35, 100)), 1) == "4e-1");
    CHECK(to_decimal(Value::finite(tekum::make_rational(995, 1000)), 2) == "1.0e0");
    CHECK(to_decimal(Value::finite(Rational(999)), 2) == "1.0e3");
    CHECK(to_decimal(Value::finite(Rational(1)), 3) == "1.00e0");
    CHECK(to_decimal(Value::finite(Rational(-1)), 2) == "-1.0e0");
    CHECK_THROWS_AS(to_decimal(Value::finite(Rational(1)), 0), tekum::error);
}
