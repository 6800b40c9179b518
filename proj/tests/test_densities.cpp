#include <doctest.h>

#include "densities.hpp"

#include <cmath>
#include <random>

using namespace mixmeas;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Independent 2-D polar quadrature of the density: composite Simpson in r,
/// truncated where phi exceeds 80 (e^{-80} is invisible at the 1e-8
/// comparison level). In theta: trapezoid for smooth gauge bodies, composite
/// Simpson per angular sector when the gauge direction profile has kinks
/// (polygon L), with sector boundaries at the vertex directions.
double brute_force_z(const PhiFunction& phi, const SupportBody2D& L) {
    auto radial_slice = [&](double theta) {
        const double g = L.gauge(unit_vector(theta));
        double r_max = 1.0;
        while (phi(r_max * g) < 80.0 && r_max < 1e6) r_max *= 1.25;
        const int n_r = 4096;
        const double h = r_max / n_r;
        auto f = [&](double r) { return r * std::exp(-phi(r * g)); };
        double s = f(0.0) + f(r_max);
        for (int i = 1; i < n_r; ++i) s += (i % 2 ? 4.0 : 2.0) * f(h * i);
        return s * h / 3.0;
    };

    if (!L.is_polygon()) {
        const int n_theta = 1024;
        double total = 0.0;
        for (int j = 0; j < n_theta; ++j) total += radial_slice(two_pi * j / n_theta);
        return total * two_pi / n_theta;
    }

    std::vector<double> cuts;
    for (const Vec2& v : L.polygon_vertices()) {
        double a = std::atan2(v.y, v.x);
        if (a < 0.0) a += two_pi;
        cuts.push_back(a);
    }
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (size_t k = 0; k < cuts.size(); ++k) {
        const double lo = cuts[k];
        const double hi = k + 1 < cuts.size() ? cuts[k + 1] : cuts.front() + two_pi;
        const int n = 512;  // Simpson panels per smooth sector
        const double h = (hi - lo) / (2 * n);
        double s = radial_slice(lo) + radial_slice(hi);
        for (int i = 1; i < 2 * n; ++i) s += (i % 2 ? 4.0 : 2.0) * radial_slice(lo + h * i);
        total += s * h / 3.0;
    }
    return total;
}

}  // namespace

TEST_SUITE("densities") {

TEST_CASE("phi evaluation") {
    CHECK(PhiFunction::power(0.5, 2.0)(3.0) == doctest::Approx(4.5).epsilon(1e-15));
    CHECK(PhiFunction::linear(1.0)(0.0) == 0.0);
    CHECK(PhiFunction::expm1(1.0)(std::log(2.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(PhiFunction::linear(1.0)(-0.5), Error);
}

TEST_CASE("phi left derivative and its r -> 0 limits") {
    CHECK(PhiFunction::power(0.5, 2.0).prime(3.0) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(PhiFunction::linear(2.0).prime(17.0) == 2.0);
    CHECK(PhiFunction::expm1(1.0).prime(1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(PhiFunction::power(0.5, 2.0).prime(0.0) == 0.0);
    CHECK(PhiFunction::power(2.0, 1.0).prime(0.0) == 2.0);
    CHECK(PhiFunction::linear(3.0).prime(0.0) == 3.0);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(PhiFunction::power(0.0, 2.0), Error);
    CHECK_THROWS_AS(PhiFunction::power(1.0, 0.5), Error);  // concave
    CHECK_THROWS_AS(PhiFunction::linear(-1.0), Error);
    CHECK_THROWS_AS(PhiFunction::expm1(0.0), Error);
}

TEST_CASE("convexity certificate on random triples") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> pick(0.0, 30.0);
    const std::vector<PhiFunction> phis = {PhiFunction::power(0.5, 2.0),
                                           PhiFunction::power(1.3, 3.5), PhiFunction::linear(0.7),
                                           PhiFunction::expm1(0.4)};
    for (const PhiFunction& phi : phis) {
        for (int i = 0; i < 1000; ++i) {
            double a = pick(rng), b = pick(rng);
            if (a > b) std::swap(a, b);
            if (a == b) continue;
            const double m = 0.5 * (a + b);
            CHECK(phi(m) <= 0.5 * (phi(a) + phi(b)) + 1e-12);
        }
    }
}

TEST_CASE("monotone on a log grid") {
    const PhiFunction phi = PhiFunction::expm1(0.8);
    double prev = phi(0.0);
    for (int i = -20; i <= 6; ++i) {
        const double v = phi(std::pow(2.0, i));
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("growth condition report") {
    const std::vector<double> grid = {1.0, 2.0, 5.0, 10.0, 20.0};

    const auto power = PhiFunction::power(0.5, 2.0).growth_condition_report(grid);
    CHECK(power.ratios[3] == doctest::Approx(std::log(10.0) / 50.0).epsilon(1e-12));

    const auto linear = PhiFunction::linear(1.0).growth_condition_report({100.0, 200.0});
    CHECK(linear.ratios[0] == 0.0);
    CHECK(linear.trending_to_zero);

    const auto expm = PhiFunction::expm1(1.0).growth_condition_report(grid);
    CHECK(expm.ratios[2] == doctest::Approx(5.0 / std::expm1(5.0)).epsilon(1e-12));
    CHECK(expm.trending_to_zero);
}

TEST_CASE("partial radial mass") {
    // integral of s e^{-s^2/2} ds over [0, inf) = 1, analytically
    CHECK(partial_radial_mass(PhiFunction::power(0.5, 2.0), kInf) ==
          doctest::Approx(1.0).epsilon(1e-11));
    // integral of s e^{-s} ds over [0, inf) = 1, analytically
    CHECK(partial_radial_mass(PhiFunction::linear(1.0), kInf) ==
          doctest::Approx(1.0).epsilon(1e-11));
    CHECK(partial_radial_mass(PhiFunction::expm1(1.0), 0.0) == 0.0);

    // monotone nondecreasing in x
    const PhiFunction phi = PhiFunction::power(1.0, 1.5);
    double prev = 0.0;
    for (double x : {0.25, 0.5, 1.0, 2.0, 4.0, 16.0}) {
        const double v = partial_radial_mass(phi, x);
        CHECK(v >= prev);
        prev = v;
    }

    // complement + partial = total
    const double total = partial_radial_mass(phi, kInf);
    for (double x : {0.5, 1.5, 3.0})
        CHECK(partial_radial_mass(phi, x) + partial_radial_mass_complement(phi, x) ==
              doctest::Approx(total).epsilon(1e-11));
}

TEST_CASE("normalization constants") {
    const SupportBody2D disk1 = SupportBody2D::disk(1.0);
    CHECK(normalization_constant(MeasureSpec(PhiFunction::power(0.5, 2.0), disk1)) ==
          doctest::Approx(two_pi).epsilon(1e-10));
    CHECK(normalization_constant(MeasureSpec(PhiFunction::linear(1.0), disk1)) ==
          doctest::Approx(two_pi).epsilon(1e-10));
    CHECK(normalization_constant(
              MeasureSpec(PhiFunction::power(0.5, 2.0), SupportBody2D::disk(2.0))) ==
          doctest::Approx(4.0 * two_pi).epsilon(1e-10));
}

TEST_CASE("factorized Z equals brute-force 2-D polar quadrature") {
    const std::vector<std::pair<PhiFunction, SupportBody2D>> cases = {
        {PhiFunction::power(0.5, 2.0), SupportBody2D::disk(1.0)},
        {PhiFunction::linear(1.0), SupportBody2D::disk(1.0)},
        {PhiFunction::power(0.5, 2.0), SupportBody2D::ellipse(2.0, 1.0)},
        {PhiFunction::expm1(1.0), SupportBody2D::fourier(1.0, {0.0, 0.05}, {})},
        {PhiFunction::power(1.0, 3.0),
         SupportBody2D::polygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}})},
    };
    for (const auto& [phi, L] : cases) {
        const double z = normalization_constant(MeasureSpec(phi, L));
        const double brute = brute_force_z(phi, L);
        CHECK(std::fabs(z - brute) <= 1e-8 * brute);
    }
}

TEST_CASE("measure construction and the normalized invariant") {
    const SupportBody2D disk1 = SupportBody2D::disk(1.0);
    const MeasureSpec norm = MeasureSpec::make_normalized(PhiFunction::power(0.5, 2.0), disk1);
    CHECK(norm.normalized());
    CHECK(norm.c0() * normalization_constant(norm) == doctest::Approx(1.0).epsilon(1e-8));

    const MeasureSpec gauss = MeasureSpec::gaussian();
    CHECK(gauss.c0() == doctest::Approx(1.0 / two_pi).epsilon(1e-15));
    CHECK(gauss.normalized());

    // claiming normalization with the wrong constant is rejected
    CHECK_THROWS_AS(MeasureSpec(PhiFunction::power(0.5, 2.0), disk1, 0.5, true), Error);
    CHECK_THROWS_AS(MeasureSpec(PhiFunction::power(0.5, 2.0), disk1, 0.0), Error);
}

TEST_CASE("debug zero profile is fenced off") {
    const MeasureSpec leb = MeasureSpec::lebesgue_debug(SupportBody2D::disk(1.0));
    CHECK(leb.phi().is_debug_zero());
    CHECK_THROWS_AS(normalization_constant(leb), Error);
    CHECK_THROWS_AS(partial_radial_mass(leb.phi(), kInf), Error);
    CHECK(partial_radial_mass(leb.phi(), 3.0) == doctest::Approx(4.5).epsilon(1e-15));
}

}  // TEST_SUITE
