#pragma once

#include "errors.hpp"
#include "quadrature.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace mixmeas {

using quadrature::two_pi;

struct Vec2 {
    double x = 0.0, y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double c, Vec2 a) { return {c * a.x, c * a.y}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// u(theta) = (cos theta, sin theta)
inline Vec2 unit_vector(double theta) { return {std::cos(theta), std::sin(theta)}; }
/// u'(theta) = (-sin theta, cos theta)
inline Vec2 unit_tangent(double theta) { return {-std::sin(theta), std::cos(theta)}; }

/// Angle in radians, reduced to [0, 2pi) on construction.
class Angle {
public:
    Angle() = default;
    explicit Angle(double radians) {
        value_ = std::fmod(radians, two_pi);
        if (value_ < 0.0) value_ += two_pi;
        if (value_ >= two_pi) value_ = 0.0;
    }
    double radians() const { return value_; }

private:
    double value_ = 0.0;
};

enum class Smoothness { C2Plus, Piecewise };

/// Support function value with derivatives. has_d2h is false for bodies whose
/// support function is only piecewise C^2 (polygons and combinations with a
/// polygon part); d2h is NaN there.
struct SupportDerivs {
    double h = 0.0;
    double dh = 0.0;
    double d2h = 0.0;
    bool has_d2h = true;
};

struct BoundaryPoint {
    Vec2 x;
    double theta = 0.0;
    double h = 0.0;
    double dh = 0.0;
    double curvature_f = 0.0;  // f = h'' + h
};

struct ValidationReport {
    double min_support = 0.0;
    double min_curvature_f = 0.0;  // NaN for piecewise bodies
    bool c2plus = false;
};

struct InradiusResult {
    double r = 0.0;
    std::vector<double> tangency_angles;
    std::vector<std::pair<double, double>> ratio_profile;  // (theta, h_K/h_L), on request
};

/// A planar convex body containing the origin in its interior, represented
/// through its support function h(theta) and derivatives. Immutable; all
/// operations are pure, so values are freely shareable across threads.
/// Constructors validate their invariants and reject degenerate input, so
/// operations never see an invalid body.
class SupportBody2D {
public:
    static SupportBody2D disk(double radius);
    static SupportBody2D ellipse(double a, double b);
    /// h(theta) = a0 + sum_k [cos_k cos(k theta) + sin_k sin(k theta)], at most
    /// 64 harmonics; convexity (h'' + h > 0) and origin interiority are
    /// certified on a 4096-node grid with margin 1e-10.
    static SupportBody2D fourier(double a0, std::vector<double> cos_coeffs,
                                 std::vector<double> sin_coeffs);
    /// Vertices in counterclockwise order with strictly convex turning.
    static SupportBody2D polygon(std::vector<Vec2> vertices);
    /// Minkowski combination: the support function is the coefficient-weighted
    /// sum. Coefficients must be >= 0 with at least one strictly positive.
    static SupportBody2D combine(const std::vector<std::pair<double, SupportBody2D>>& terms);

    SupportDerivs support_eval(double theta) const;
    double support(double theta) const { return support_eval(theta).h; }

    /// x(theta) = h u + h' u'; requires a C2+ body.
    BoundaryPoint boundary_point(double theta) const;

    /// Minkowski functional ||x||_K = sup_u <x,u>/h(u); gauge(0) = 0.
    double gauge(Vec2 x) const;

    /// Direction u* achieving the gauge sup; requires C2+ (unique maximizer).
    double gauge_maximizer(Vec2 x) const;

    /// grad ||x||_K = u*/h(u*) at the maximizing direction (envelope rule).
    Vec2 gauge_gradient(Vec2 x) const;

    /// rho(theta) = 1/gauge(u(theta)); rho(theta) u(theta) lies on the boundary.
    double radial(double theta) const;

    Smoothness smoothness() const;
    ValidationReport validate() const;

    /// Angles where the radial direction crosses a boundary non-smoothness;
    /// sorted, empty for smooth bodies. Only meaningful when
    /// radial_kinks_known() is true.
    std::vector<double> radial_kink_angles() const;
    bool radial_kinks_known() const;

    bool is_disk() const;
    double disk_radius() const;
    bool is_polygon() const;
    const std::vector<Vec2>& polygon_vertices() const;

    struct Impl;
    explicit SupportBody2D(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    const Impl& impl() const { return *impl_; }

private:
    std::shared_ptr<const Impl> impl_;
};

/// Maximal L-inradius of K about the origin: r(K,L) = min_theta h_K/h_L,
/// since R L inside K is equivalent to R h_L <= h_K pointwise. The argmin set
/// collects every tangency basin. Refining the scan grid twice must move r by
/// less than 1e-9, otherwise a numerical failure is raised.
InradiusResult inradius(const SupportBody2D& K, const SupportBody2D& L,
                        bool with_profile = false);

/// Area enclosed by the body: (1/2) integral of rho(theta)^2.
double body_area(const SupportBody2D& body);

}  // namespace mixmeas
