#include <doctest.h>

#include "mixed.hpp"

#include <cmath>

using namespace mixmeas;

namespace {

SupportBody2D unit_square() { return SupportBody2D::polygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}); }

MeasureSpec gauss_raw(double c0 = 1.0) {
    return MeasureSpec(PhiFunction::power(0.5, 2.0), SupportBody2D::disk(1.0), c0);
}

double rel(const LogValue& got, double want) {
    return std::fabs(got.to_double() - want) / std::fabs(want);
}

}  // namespace

TEST_SUITE("mixed") {

TEST_CASE("mixed_first all-disk Gaussian closed form 2 pi t e^{-t^2/2}") {
    const SupportBody2D d = SupportBody2D::disk(1.0);
    for (double t : {1.0, 2.0, 4.0}) {
        const MixedValue v = mixed_first(d, d, gauss_raw(), t);
        CHECK(v.value.sign == 1);
        CHECK(rel(v.value, two_pi * t * std::exp(-0.5 * t * t)) <= 1e-9);
    }
}

TEST_CASE("mixed_first square under the normalized Gaussian: 1-D edge integrals") {
    // Four edges at distance 1; each contributes e^{-1/2} Int e^{-s^2/2} ds
    // over [-1,1]; with c0 = 1/(2 pi) the total is
    // (4/sqrt(2 pi)) e^{-t^2/2} erf(1/sqrt 2) at t = 1.
    const double want = 4.0 / std::sqrt(two_pi) * std::exp(-0.5) * std::erf(1.0 / std::sqrt(2.0));
    const MixedValue v = mixed_first(unit_square(), SupportBody2D::disk(1.0),
                                     MeasureSpec::gaussian(), 1.0);
    CHECK(rel(v.value, want) <= 1e-9);
}

TEST_CASE("mixed_first with the debug density reduces to the perimeter") {
    const SupportBody2D d = SupportBody2D::disk(1.0);
    const MeasureSpec leb = MeasureSpec::lebesgue_debug(d);
    CHECK(rel(mixed_first(d, d, leb, 1.0).value, two_pi) <= 1e-10);
    CHECK(rel(mixed_first(unit_square(), d, leb, 1.0).value, 8.0) <= 1e-10);
}

TEST_CASE("surface_content is mixed_first against the unit disk") {
    const SupportBody2D d = SupportBody2D::disk(1.0);
    const MixedValue sc = surface_content(d, gauss_raw(), 2.0);
    CHECK(rel(sc.value, two_pi * 2.0 * std::exp(-2.0)) <= 1e-9);
    const MixedValue mf = mixed_first(d, SupportBody2D::disk(1.0), gauss_raw(), 2.0);
    CHECK(sc.value.sign == mf.value.sign);
    CHECK(sc.value.log_abs == mf.value.log_abs);
}

TEST_CASE("mixed_second ball identity 2 pi e^{-phi(t)} (1 - t phi'(t))") {
    const SupportBody2D d = SupportBody2D::disk(1.0);
    for (double t : {0.5, 2.0, 4.0}) {
        const MixedValue v = mixed_second(d, d, d, gauss_raw(), t);
        const double want = two_pi * std::exp(-0.5 * t * t) * (1.0 - t * t);
        CHECK(rel(v.value, want) <= 1e-9);
    }
    // the bracket vanishes pointwise at t = 1
    CHECK(mixed_second(d, d, d, gauss_raw(), 1.0).value.sign == 0);
}

TEST_CASE("sign change of the ball case is located at t = 1") {
    const SupportBody2D d = SupportBody2D::disk(1.0);
    CHECK(second_sign_change(d, d, d, gauss_raw(), 0.5, 2.0) ==
          doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("gaussian_second ball values and the definitional reduction") {
    const SupportBody2D d = SupportBody2D::disk(1.0);
    const MixedValue v2 = gaussian_second(d, d, d, 2.0);
    CHECK(rel(v2.value, std::exp(-2.0) * (1.0 - 4.0)) <= 1e-9);
    CHECK(gaussian_second(d, d, d, 1.0).value.sign == 0);

    const SupportBody2D A = SupportBody2D::ellipse(2.0, 1.0);
    for (double t : {1.0, 2.0, 3.0}) {
        const MixedValue g = gaussian_second(A, d, d, t);
        const MixedValue m = mixed_second(A, d, d, MeasureSpec::gaussian(), t);
        CHECK(relative_difference(m.value, g.value) <= 1e-10);
    }
}

TEST_CASE("gaussian reduction holds pointwise at 4096 angles") {
    const SupportBody2D A = SupportBody2D::ellipse(2.0, 1.0);
    const SupportBody2D B = SupportBody2D::disk(1.0);
    const SupportBody2D C = SupportBody2D::ellipse(1.5, 0.7);
    const MeasureSpec gauss = MeasureSpec::gaussian();
    const double t = 2.0;
    // both evaluators return the raw integrand; the respective c0 = 1/(2 pi)
    // is applied outside, so the pointwise values must agree directly
    for (int j = 0; j < 4096; ++j) {
        const double theta = two_pi * j / 4096;
        const LogValue a = mixed_second_integrand(A, B, C, gauss, t, theta);
        const LogValue b = gaussian_second_integrand(A, B, C, t, theta);
        CHECK(relative_difference(a, b) <= 1e-12);
    }
}

TEST_CASE("mixed_second is symmetric in B and C") {
    const SupportBody2D A = SupportBody2D::ellipse(2.0, 1.0);
    const SupportBody2D B = SupportBody2D::ellipse(1.5, 0.7);
    const SupportBody2D C = SupportBody2D::disk(0.8);
    const MixedValue bc = mixed_second(A, B, C, gauss_raw(), 2.0);
    const MixedValue cb = mixed_second(A, C, B, gauss_raw(), 2.0);
    CHECK(relative_difference(bc.value, cb.value) <= 1e-12);
}

TEST_CASE("mixed_second accepts piecewise B, C and flags the hypothesis gap") {
    const SupportBody2D A = SupportBody2D::disk(1.0);
    const MixedValue v = mixed_second(A, unit_square(), unit_square(), gauss_raw(), 2.0);
    CHECK(v.beyond_smooth_hypotheses);
    CHECK(v.value.sign == -1);
    CHECK(!mixed_second(A, A, A, gauss_raw(), 2.0).beyond_smooth_hypotheses);
}

TEST_CASE("second-argument homogeneity to 1e-12") {
    const SupportBody2D K = SupportBody2D::ellipse(2.0, 1.0);
    const SupportBody2D M = SupportBody2D::ellipse(1.5, 0.7);
    const MixedValue base = mixed_first(K, M, gauss_raw(), 2.0);
    for (double lam : {0.5, 3.0}) {
        const SupportBody2D scaled = SupportBody2D::combine({{lam, M}});
        const MixedValue v = mixed_first(K, scaled, gauss_raw(), 2.0);
        CHECK(relative_difference(v.value, base.value.log_scaled(std::log(lam))) <= 1e-12);
    }
}

TEST_CASE("second-argument additivity") {
    const SupportBody2D K = SupportBody2D::ellipse(2.0, 1.0);
    const SupportBody2D M1 = SupportBody2D::disk(0.6);
    const SupportBody2D M2 = SupportBody2D::ellipse(1.5, 0.7);
    const SupportBody2D sum = SupportBody2D::combine({{1.0, M1}, {1.0, M2}});
    const LogValue lhs = mixed_first(K, sum, gauss_raw(), 2.0).value;
    const LogValue rhs =
        mixed_first(K, M1, gauss_raw(), 2.0).value + mixed_first(K, M2, gauss_raw(), 2.0).value;
    CHECK(relative_difference(rhs, lhs) <= 1e-9);
}

TEST_CASE("monotone in the second argument") {
    const SupportBody2D K = SupportBody2D::ellipse(2.0, 1.0);
    const SupportBody2D small = SupportBody2D::disk(0.5);
    const SupportBody2D big = SupportBody2D::ellipse(1.5, 0.7);  // h >= 0.7 pointwise
    CHECK(mixed_first(K, small, gauss_raw(), 2.0).value <
          mixed_first(K, big, gauss_raw(), 2.0).value);
}

TEST_CASE("positivity of first-order values") {
    const MeasureSpec lin = MeasureSpec(PhiFunction::linear(1.0), SupportBody2D::disk(1.0));
    for (double t : {0.5, 1.0, 3.0, 10.0}) {
        CHECK(mixed_first(SupportBody2D::ellipse(2.0, 1.0), unit_square(), lin, t).value.sign == 1);
        CHECK(mixed_first(unit_square(), SupportBody2D::disk(1.0), lin, t).value.sign == 1);
    }
}

TEST_CASE("lebesgue mixed areas") {
    const SupportBody2D d1 = SupportBody2D::disk(1.0);
    CHECK(lebesgue_mixed_area(d1, d1) == doctest::Approx(M_PI).epsilon(1e-10));
    CHECK(lebesgue_mixed_area(unit_square(), d1) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(lebesgue_mixed_area(d1, SupportBody2D::disk(2.0)) ==
          doctest::Approx(2.0 * M_PI).epsilon(1e-10));

    // symmetry for a C2+ pair
    const SupportBody2D e = SupportBody2D::ellipse(2.0, 1.0);
    const SupportBody2D f = SupportBody2D::fourier(1.0, {0.0, 0.05}, {0.02});
    CHECK(std::fabs(lebesgue_mixed_area(e, f) - lebesgue_mixed_area(f, e)) <= 1e-9);
}

TEST_CASE("steiner polynomial reproduced by debug-density areas") {
    const SupportBody2D d1 = SupportBody2D::disk(1.0);
    CHECK(steiner_max_deviation(d1, d1, {1.0}) <= 1e-8);
    CHECK(steiner_max_deviation(unit_square(), d1, {0.5}) <= 1e-7);
    CHECK(steiner_max_deviation(SupportBody2D::ellipse(2.0, 1.0), d1, {0.0}) <= 1e-12);
}

}  // TEST_SUITE
