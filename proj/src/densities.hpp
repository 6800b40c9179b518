#pragma once

#include "bodies.hpp"

#include <vector>

namespace mixmeas {

/// Convex increasing density profile phi with phi(0) >= 0; the density of the
/// measure is c0 * exp(-phi(||x||_L)). Only closed-form kinds are supported so
/// that phi' is analytic. The Zero kind is a debug profile for Lebesgue sanity
/// checks and bypasses the increasing/non-constant validation; it is only
/// reachable through debug_zero().
class PhiFunction {
public:
    enum class Kind { Power, Linear, Expm1, Zero };

    /// phi(r) = c * r^p, c > 0, p >= 1
    static PhiFunction power(double c, double p);
    /// phi(r) = c * r, c > 0
    static PhiFunction linear(double c);
    /// phi(r) = e^{a r} - 1, a > 0
    static PhiFunction expm1(double a);
    /// phi == 0; Lebesgue debug profile
    static PhiFunction debug_zero();

    double operator()(double r) const;
    /// Left derivative; at r = 0 the limit value is returned for kinds with
    /// phi'(0) = 0.
    double prime(double r) const;

    Kind kind() const { return kind_; }
    double param_c() const { return c_; }
    double param_p() const { return p_; }
    bool is_debug_zero() const { return kind_ == Kind::Zero; }

    struct GrowthReport {
        std::vector<double> ratios;  // ln phi'(t) / phi(t) per grid point
        bool trending_to_zero = false;
    };
    /// Samples the growth-condition ratio of the second-order rate theorem;
    /// the hypothesis is that it tends to 0.
    GrowthReport growth_condition_report(const std::vector<double>& t_grid) const;

private:
    PhiFunction(Kind kind, double c, double p) : kind_(kind), c_(c), p_(p) {}
    void check_shape() const;

    Kind kind_ = Kind::Linear;
    double c_ = 1.0;
    double p_ = 1.0;
};

/// Psi(x) = integral of s e^{-phi(s)} over [0, x]; the 1-D kernel of every
/// polar-coordinate mass. x may be +inf (truncated where the integrand falls
/// below 1e-300).
double partial_radial_mass(const PhiFunction& phi, double x);

/// Integral of s e^{-phi(s)} over [x, inf); evaluated directly so that tail
/// probabilities never suffer the 1 - (1 - eps) cancellation.
double partial_radial_mass_complement(const PhiFunction& phi, double x);

class MeasureSpec {
public:
    /// Density c0 * exp(-phi(||x||_L)). When normalized is set the constructor
    /// verifies c0 * Z = 1 within 1e-8.
    MeasureSpec(PhiFunction phi, SupportBody2D gauge_body, double c0 = 1.0,
                bool normalized = false);

    /// Computes Z and returns the measure with c0 = 1/Z.
    static MeasureSpec make_normalized(PhiFunction phi, SupportBody2D gauge_body);
    /// The planar Gaussian: phi = r^2/2, L the unit disk, c0 = 1/(2 pi).
    static MeasureSpec gaussian();
    /// Lebesgue debug measure (phi == 0, c0 = 1).
    static MeasureSpec lebesgue_debug(SupportBody2D gauge_body);

    const PhiFunction& phi() const { return phi_; }
    const SupportBody2D& gauge_body() const { return gauge_body_; }
    double c0() const { return c0_; }
    bool normalized() const { return normalized_; }

    double gauge_norm(Vec2 x) const { return gauge_body_.gauge(x); }

private:
    PhiFunction phi_;
    SupportBody2D gauge_body_;
    double c0_ = 1.0;
    bool normalized_ = false;
};

/// Z = 2 area(L) Psi(inf), from the substitution s = r ||u(theta)||_L in the
/// polar-coordinate integral of the density.
double normalization_constant(const MeasureSpec& measure);

}  // namespace mixmeas
