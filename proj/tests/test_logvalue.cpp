#include <doctest.h>

#include "logvalue.hpp"

#include <cmath>
#include <random>

using mixmeas::LogValue;

TEST_SUITE("logvalue") {

TEST_CASE("zero round trip") {
    const LogValue z = LogValue::from_double(0.0);
    CHECK(z.sign == 0);
    CHECK(std::isinf(z.log_abs));
    CHECK(z.to_double() == 0.0);
}

TEST_CASE("round trip reproduces ordinary reals to 1e-13") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> expo(-200, 200);
    for (int i = 0; i < 2000; ++i) {
        double v = mant(rng) * std::pow(10.0, expo(rng));
        if (v == 0.0) continue;
        const double back = LogValue::from_double(v).to_double();
        CHECK(std::fabs(back - v) <= 1e-13 * std::fabs(v));
    }
}

TEST_CASE("products and sums of magnitudes >= 1e-200 reproduce direct arithmetic") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> mant(0.1, 1.0);
    std::uniform_int_distribution<int> expo(-180, 120);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 2000; ++i) {
        const double a = (coin(rng) ? 1 : -1) * mant(rng) * std::pow(10.0, expo(rng));
        const double b = (coin(rng) ? 1 : -1) * mant(rng) * std::pow(10.0, expo(rng));
        const LogValue la = LogValue::from_double(a), lb = LogValue::from_double(b);

        const double prod = (la * lb).to_double();
        if (std::fabs(a * b) >= 1e-200 && std::isfinite(a * b))
            CHECK(std::fabs(prod - a * b) <= 1e-13 * std::fabs(a * b));

        const double sum = (la + lb).to_double();
        if (std::fabs(a + b) >= 1e-200)
            CHECK(std::fabs(sum - (a + b)) <= 1e-13 * (std::fabs(a) + std::fabs(b)));
    }
}

TEST_CASE("exact cancellation yields the zero value") {
    const LogValue a = LogValue::from_double(3.5);
    CHECK((a - a).sign == 0);
    CHECK((a + (-a)).is_zero());
}

TEST_CASE("sums far below double underflow keep relative structure") {
    // e^{-500} + e^{-500} = 2 e^{-500}, far below DBL_MIN.
    const LogValue tiny = LogValue::from_log(1, -500.0);
    const LogValue two_tiny = tiny + tiny;
    CHECK(two_tiny.sign == 1);
    CHECK(two_tiny.log_abs == doctest::Approx(-500.0 + std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("ordering follows the represented reals") {
    CHECK(LogValue::from_double(-2.0) < LogValue::from_double(1e-300));
    CHECK(LogValue::from_log(1, -400.0) < LogValue::from_log(1, -399.0));
    CHECK(LogValue::from_log(-1, -399.0) < LogValue::from_log(-1, -400.0));
}

}  // TEST_SUITE
