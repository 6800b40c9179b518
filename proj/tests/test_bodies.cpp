#include <doctest.h>

#include "bodies.hpp"

#include <cmath>
#include <random>

using namespace mixmeas;

namespace {

SupportBody2D unit_square() { return SupportBody2D::polygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}); }

SupportBody2D diamond() { return SupportBody2D::polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }

/// High-order central difference for h'' of an analytic support function;
/// the independent check of the closed-form second derivative.
double d2h_fd(const SupportBody2D& body, double theta) {
    const double h = 1e-4;
    auto f = [&](double th) { return body.support(th); };
    return (-f(theta - 2 * h) + 16 * f(theta - h) - 30 * f(theta) + 16 * f(theta + h) -
            f(theta + 2 * h)) /
           (12 * h * h);
}

}  // namespace

TEST_SUITE("bodies") {

TEST_CASE("support evaluation closed forms") {
    const SupportBody2D e = SupportBody2D::ellipse(2.0, 1.0);
    const SupportDerivs d0 = e.support_eval(0.0);
    CHECK(d0.h == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(d0.dh == doctest::Approx(0.0).epsilon(1e-15));

    const SupportBody2D d3 = SupportBody2D::disk(3.0);
    for (double th : {0.0, 1.1, 4.0}) {
        const SupportDerivs d = d3.support_eval(th);
        CHECK(d.h == 3.0);
        CHECK(d.dh == 0.0);
        CHECK(d.d2h == 0.0);
    }

    CHECK(unit_square().support(M_PI / 4) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("polygon support takes the left derivative at switch angles") {
    // On (0, pi/2) the active vertex of the square is (1,1): h = cos + sin,
    // h' = -sin + cos, approaching -1 at pi/2. The tie at pi/2 must resolve
    // to that left limit.
    const SupportBody2D sq = unit_square();
    CHECK(sq.support_eval(M_PI / 2).dh == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(sq.support_eval(0.0).dh == doctest::Approx(-1.0).epsilon(1e-12));
    // off the switch angles the derivative is the plain active-vertex one
    CHECK(sq.support_eval(M_PI / 4).dh == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(!sq.support_eval(1.0).has_d2h);
}

TEST_CASE("ellipse second derivative matches finite differences") {
    const SupportBody2D e = SupportBody2D::ellipse(2.0, 1.0);
    for (double th : {0.0, 0.3, 1.0, 2.2, 4.9}) {
        const double want = d2h_fd(e, th);
        CHECK(e.support_eval(th).d2h == doctest::Approx(want).epsilon(1e-6));
    }
    // Closed form at the end of the major axis: f = h'' + h = -1.5 + 2 = 0.5,
    // the curvature radius a/b^2... inverted: b^2/a = 1/2.
    CHECK(e.boundary_point(0.0).curvature_f == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("boundary points") {
    const SupportBody2D d2 = SupportBody2D::disk(2.0);
    const BoundaryPoint top = d2.boundary_point(M_PI / 2);
    CHECK(top.x.x == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(top.x.y == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(top.curvature_f == doctest::Approx(2.0).epsilon(1e-15));

    const SupportBody2D e = SupportBody2D::ellipse(2.0, 1.0);
    const BoundaryPoint right = e.boundary_point(0.0);
    CHECK(right.x.x == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(right.x.y == doctest::Approx(0.0).epsilon(1e-14));
    const BoundaryPoint above = e.boundary_point(M_PI / 2);
    CHECK(above.x.x == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(above.x.y == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(unit_square().boundary_point(0.1), Error);
}

TEST_CASE("gauge values") {
    CHECK(SupportBody2D::disk(1.0).gauge({3, 4}) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(SupportBody2D::ellipse(2.0, 1.0).gauge({2, 0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(unit_square().gauge({0.5, -2.0}) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(unit_square().gauge({0, 0}) == 0.0);
}

TEST_CASE("gauge/support duality on a grid") {
    // gauge(K, x) = max over directions of <x,u>/h(u); spot-check bodies where
    // the left side has an analytic fast path.
    const std::vector<SupportBody2D> bodies = {SupportBody2D::disk(1.5),
                                               SupportBody2D::ellipse(2.0, 1.0), unit_square()};
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    for (const SupportBody2D& body : bodies) {
        for (int i = 0; i < 50; ++i) {
            const Vec2 x{coord(rng), coord(rng)};
            if (std::fabs(x.x) + std::fabs(x.y) < 1e-6) continue;
            double sup = 0.0;
            for (int j = 0; j < 4096; ++j) {
                const double th = two_pi * j / 4096;
                sup = std::max(sup, dot(x, unit_vector(th)) / body.support(th));
            }
            CHECK(body.gauge(x) >= sup - 1e-9);
            CHECK(body.gauge(x) <= sup + 1e-4 * std::fabs(sup) + 1e-9);
        }
    }
}

TEST_CASE("gauge homogeneity is exact to rounding") {
    const SupportBody2D f = SupportBody2D::fourier(1.0, {0.0, 0.05}, {0.01});
    const Vec2 x{0.8, -1.3};
    const double g = f.gauge(x);
    for (double lam : {0.5, 2.0, 10.0}) {
        CHECK(f.gauge(lam * x) == doctest::Approx(lam * g).epsilon(1e-12));
    }
}

TEST_CASE("gauge gradient: analytic values and the Euler identity") {
    const SupportBody2D d1 = SupportBody2D::disk(1.0);
    const Vec2 g = d1.gauge_gradient({3, 4});
    CHECK(g.x == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(g.y == doctest::Approx(0.8).epsilon(1e-14));

    const SupportBody2D e = SupportBody2D::ellipse(2.0, 1.0);
    const Vec2 ge = e.gauge_gradient({2, 0});
    CHECK(ge.x == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(ge.y == doctest::Approx(0.0).epsilon(1e-13));

    // 0-homogeneity: gradients at x and 2x coincide.
    const SupportBody2D f = SupportBody2D::fourier(1.0, {0.0, 0.05}, {});
    const Vec2 a = f.gauge_gradient({1.0, 0.4}), b = f.gauge_gradient({2.0, 0.8});
    CHECK(a.x == doctest::Approx(b.x).epsilon(1e-9));
    CHECK(a.y == doctest::Approx(b.y).epsilon(1e-9));

    // Euler identity <grad gauge, x> = gauge(x) for C2+ bodies.
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (const SupportBody2D& body : {d1, e, f}) {
        for (int i = 0; i < 30; ++i) {
            const Vec2 x{coord(rng), coord(rng)};
            if (std::hypot(x.x, x.y) < 0.1) continue;
            CHECK(dot(body.gauge_gradient(x), x) ==
                  doctest::Approx(body.gauge(x)).epsilon(1e-9));
        }
    }

    CHECK_THROWS_AS(unit_square().gauge_gradient({1, 1}), Error);
}

TEST_CASE("radial function") {
    CHECK(SupportBody2D::disk(2.0).radial(1.234) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(SupportBody2D::ellipse(2.0, 1.0).radial(0.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(unit_square().radial(M_PI / 4) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    // rho(theta) u(theta) lies on the boundary: gauge of it is 1.
    const SupportBody2D f = SupportBody2D::fourier(0.9, {0.05, 0.03}, {0.0, 0.02});
    for (double th : {0.1, 1.7, 3.9, 5.5}) {
        const double rho = f.radial(th);
        CHECK(f.gauge(rho * unit_vector(th)) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("boundary consistency: gauge of boundary points is 1") {
    const std::vector<SupportBody2D> bodies = {SupportBody2D::disk(1.0),
                                               SupportBody2D::ellipse(2.0, 1.0),
                                               SupportBody2D::fourier(1.0, {0.0, 0.05}, {0.02})};
    for (const SupportBody2D& body : bodies) {
        for (int j = 0; j < 1024; ++j) {
            const double th = two_pi * j / 1024;
            const BoundaryPoint bp = body.boundary_point(th);
            CHECK(body.gauge(bp.x) == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("minkowski combinations add support functions") {
    const SupportBody2D sum = SupportBody2D::combine(
        {{1.0, SupportBody2D::disk(1.0)}, {1.0, SupportBody2D::disk(2.0)}});
    CHECK(sum.is_disk());
    CHECK(sum.disk_radius() == doctest::Approx(3.0).epsilon(1e-15));

    const SupportBody2D twice = SupportBody2D::combine({{2.0, SupportBody2D::ellipse(2.0, 1.0)}});
    CHECK(twice.support(0.0) == doctest::Approx(4.0).epsilon(1e-14));

    const SupportBody2D rounded =
        SupportBody2D::combine({{1.0, unit_square()}, {0.25, SupportBody2D::disk(1.0)}});
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> ang(0.0, two_pi);
    const SupportBody2D square = unit_square();
    for (int i = 0; i < 1024; ++i) {
        const double th = ang(rng);
        CHECK(rounded.support(th) ==
              doctest::Approx(square.support(th) + 0.25).epsilon(1e-15));
    }
    CHECK(rounded.smoothness() == Smoothness::Piecewise);

    CHECK_THROWS_AS(SupportBody2D::combine({{0.0, unit_square()}}), Error);
}

TEST_CASE("polygon+disk combination radial agrees with the generic gauge scan") {
    const SupportBody2D rounded =
        SupportBody2D::combine({{1.0, unit_square()}, {0.5, SupportBody2D::disk(1.0)}});
    for (int j = 0; j < 500; ++j) {
        const double th = two_pi * j / 500 + 0.0013;
        // generic duality evaluation, independent of the sector formula
        double sup = 0.0;
        for (int k = 0; k < 16384; ++k) {
            const double psi = two_pi * k / 16384;
            sup = std::max(sup, std::cos(psi - th) / rounded.support(psi));
        }
        const double rho = rounded.radial(th);
        CHECK(1.0 / rho == doctest::Approx(sup).epsilon(1e-6));
        CHECK(rounded.gauge(rho * unit_vector(th)) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("inradius exact families") {
    const InradiusResult a = inradius(SupportBody2D::ellipse(2.0, 1.0), SupportBody2D::disk(1.0));
    CHECK(a.r == doctest::Approx(1.0).epsilon(1e-9));
    REQUIRE(a.tangency_angles.size() == 2);
    CHECK(a.tangency_angles[0] == doctest::Approx(M_PI / 2).epsilon(1e-6));
    CHECK(a.tangency_angles[1] == doctest::Approx(3 * M_PI / 2).epsilon(1e-6));

    const InradiusResult b = inradius(unit_square(), diamond());
    CHECK(b.r == doctest::Approx(1.0).epsilon(1e-9));

    // Brute-force oracle for the disk(3)/ellipse(2,1) pair: min of 3/h_L over
    // 1e5 angles; the maximum of h_L is 2, so the true value is 1.5.
    const SupportBody2D K = SupportBody2D::disk(3.0), L = SupportBody2D::ellipse(2.0, 1.0);
    double brute = 1e300;
    for (int j = 0; j < 100000; ++j)
        brute = std::min(brute, 3.0 / L.support(two_pi * j / 100000));
    const InradiusResult c = inradius(K, L);
    CHECK(std::fabs(c.r - brute) <= 1e-7);
    CHECK(c.r == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("inradius ratio profile samples h_K/h_L") {
    const SupportBody2D K = SupportBody2D::ellipse(2.0, 1.0), L = SupportBody2D::disk(1.0);
    const InradiusResult res = inradius(K, L, true);
    REQUIRE(res.ratio_profile.size() == 256);
    for (const auto& [theta, ratio] : res.ratio_profile) {
        CHECK(ratio == doctest::Approx(K.support(theta) / L.support(theta)).epsilon(1e-15));
        CHECK(ratio >= res.r - 1e-12);
    }
}

TEST_CASE("inradius consistency: r h_L <= h_K with equality at tangency") {
    const SupportBody2D K = SupportBody2D::ellipse(2.0, 1.0), L = SupportBody2D::disk(1.0);
    const InradiusResult res = inradius(K, L);
    for (int j = 0; j < 2048; ++j) {
        const double th = two_pi * j / 2048;
        CHECK(res.r * L.support(th) <= K.support(th) + 1e-9);
    }
    for (double th : res.tangency_angles)
        CHECK(res.r * L.support(th) == doctest::Approx(K.support(th)).epsilon(1e-9));
}

TEST_CASE("min of gauge over the boundary equals the inradius") {
    const std::vector<std::pair<SupportBody2D, SupportBody2D>> pairs = {
        {SupportBody2D::ellipse(2.0, 1.0), SupportBody2D::disk(1.0)},
        {SupportBody2D::fourier(1.0, {0.0, 0.05}, {}), SupportBody2D::ellipse(1.5, 0.7)},
        {SupportBody2D::disk(2.0), SupportBody2D::fourier(1.0, {0.0, 0.0, 0.02}, {})},
    };
    for (const auto& [A, L] : pairs) {
        double min_gauge = 1e300;
        for (int j = 0; j < 8192; ++j) {
            const double th = two_pi * j / 8192;
            min_gauge = std::min(min_gauge, L.gauge(A.boundary_point(th).x));
        }
        CHECK(min_gauge == doctest::Approx(inradius(A, L).r).epsilon(1e-7));
    }
}

TEST_CASE("support additivity at random angles") {
    const SupportBody2D a = SupportBody2D::ellipse(1.5, 0.7);
    const SupportBody2D b = SupportBody2D::fourier(1.0, {0.0, 0.05}, {});
    const SupportBody2D sum = SupportBody2D::combine({{0.7, a}, {1.3, b}});
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> ang(0.0, two_pi);
    for (int i = 0; i < 1024; ++i) {
        const double th = ang(rng);
        CHECK(sum.support(th) ==
              doctest::Approx(0.7 * a.support(th) + 1.3 * b.support(th)).epsilon(1e-14));
    }
}

TEST_CASE("validation accepts and rejects the fourier examples") {
    // h = 1 + 0.5 cos(theta): f = h'' + h = a0 = 1 > 0 and min h = 0.5 > 0
    const SupportBody2D ok = SupportBody2D::fourier(1.0, {0.5}, {});
    const ValidationReport rep = ok.validate();
    CHECK(rep.c2plus);
    CHECK(rep.min_support == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(rep.min_curvature_f == doctest::Approx(1.0).epsilon(1e-9));

    // third/fourth harmonic with weight 0.5 drives f = h'' + h negative
    CHECK_THROWS_AS(SupportBody2D::fourier(1.0, {0.0, 0.0, 0.5}, {}), Error);
    CHECK_THROWS_AS(SupportBody2D::fourier(1.0, {0.0, 0.0, 0.0, 0.5}, {}), Error);

    const ValidationReport disk_rep = SupportBody2D::disk(1.0).validate();
    CHECK(disk_rep.c2plus);
    CHECK(disk_rep.min_curvature_f == doctest::Approx(1.0).epsilon(1e-12));

    const ValidationReport sq = unit_square().validate();
    CHECK(!sq.c2plus);
    CHECK(sq.min_support == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("degenerate constructor input is rejected") {
    CHECK_THROWS_AS(SupportBody2D::disk(0.0), Error);
    CHECK_THROWS_AS(SupportBody2D::disk(-1.0), Error);
    CHECK_THROWS_AS(SupportBody2D::ellipse(1.0, 0.0), Error);
    // clockwise square
    CHECK_THROWS_AS(SupportBody2D::polygon({{1, -1}, {-1, -1}, {-1, 1}, {1, 1}}), Error);
    // origin on the boundary
    CHECK_THROWS_AS(SupportBody2D::polygon({{0, 0}, {2, 0}, {1, 2}}), Error);
    // collinear vertices
    CHECK_THROWS_AS(SupportBody2D::polygon({{1, -1}, {1, 0}, {1, 1}, {-1, 0}}), Error);
    // origin outside a fourier body: h dips to 0.5 - ... negative
    CHECK_THROWS_AS(SupportBody2D::fourier(0.5, {0.8}, {}), Error);
}

TEST_CASE("angle reduction") {
    CHECK(Angle(7.0).radians() == doctest::Approx(7.0 - two_pi).epsilon(1e-15));
    CHECK(Angle(-1.0).radians() == doctest::Approx(two_pi - 1.0).epsilon(1e-15));
    CHECK(Angle(0.0).radians() == 0.0);
}

TEST_CASE("body area") {
    CHECK(body_area(SupportBody2D::disk(2.0)) == doctest::Approx(4.0 * M_PI).epsilon(1e-10));
    CHECK(body_area(SupportBody2D::ellipse(2.0, 1.0)) == doctest::Approx(2.0 * M_PI).epsilon(1e-10));
    CHECK(body_area(unit_square()) == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(body_area(diamond()) == doctest::Approx(2.0).epsilon(1e-10));
}

}  // TEST_SUITE
