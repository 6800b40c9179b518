#include "densities.hpp"

#include <cmath>
#include <limits>

namespace mixmeas {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

// ---- PhiFunction -----------------------------------------------------------

PhiFunction PhiFunction::power(double c, double p) {
    if (!(c > 0.0) || !std::isfinite(c))
        fail(ErrorKind::Validation, "phi power: c must be strictly positive");
    if (!(p >= 1.0) || !std::isfinite(p))
        fail(ErrorKind::Validation, "phi power: p must be >= 1 (convexity)");
    PhiFunction out(Kind::Power, c, p);
    out.check_shape();
    return out;
}

PhiFunction PhiFunction::linear(double c) {
    if (!(c > 0.0) || !std::isfinite(c))
        fail(ErrorKind::Validation, "phi linear: c must be strictly positive");
    PhiFunction out(Kind::Linear, c, 1.0);
    out.check_shape();
    return out;
}

PhiFunction PhiFunction::expm1(double a) {
    if (!(a > 0.0) || !std::isfinite(a))
        fail(ErrorKind::Validation, "phi expm1: a must be strictly positive");
    PhiFunction out(Kind::Expm1, a, 1.0);
    out.check_shape();
    return out;
}

PhiFunction PhiFunction::debug_zero() { return PhiFunction(Kind::Zero, 0.0, 0.0); }

double PhiFunction::operator()(double r) const {
    if (!(r >= 0.0)) fail(ErrorKind::Precondition, "phi: r must be >= 0");
    switch (kind_) {
        case Kind::Power:
            return c_ * std::pow(r, p_);
        case Kind::Linear:
            return c_ * r;
        case Kind::Expm1:
            return std::expm1(c_ * r);
        case Kind::Zero:
            return 0.0;
    }
    fail(ErrorKind::InvalidArgument, "unknown phi kind");
}

double PhiFunction::prime(double r) const {
    if (r < 0.0) fail(ErrorKind::Precondition, "phi': r must be >= 0");
    switch (kind_) {
        case Kind::Power:
            if (r == 0.0) return p_ > 1.0 ? 0.0 : c_;
            return c_ * p_ * std::pow(r, p_ - 1.0);
        case Kind::Linear:
            return c_;
        case Kind::Expm1:
            return c_ * std::exp(c_ * r);
        case Kind::Zero:
            return 0.0;
    }
    fail(ErrorKind::InvalidArgument, "unknown phi kind");
}

void PhiFunction::check_shape() const {
    // Certificate on a log-spaced grid: midpoint convexity at tolerance 1e-12,
    // nondecreasing, non-constant, phi(0) >= 0. The built-in kinds always
    // pass; the check guards parameter edge cases.
    const PhiFunction& phi = *this;
    if (!(phi(0.0) >= 0.0)) fail(ErrorKind::Validation, "phi: phi(0) must be >= 0");
    double prev_r = 0.0, prev_v = phi(0.0);
    bool non_constant = false;
    for (int i = -20; i <= 8; ++i) {
        const double r = std::pow(2.0, i);
        const double v = phi(r);
        if (v < prev_v - 1e-12 * (1.0 + std::fabs(prev_v)))
            fail(ErrorKind::Validation, "phi: not nondecreasing");
        const double m = 0.5 * (prev_r + r);
        if (phi(m) > 0.5 * (prev_v + v) + 1e-12 * (1.0 + std::fabs(v)))
            fail(ErrorKind::Validation, "phi: midpoint convexity violated");
        if (v > prev_v) non_constant = true;
        prev_r = r;
        prev_v = v;
    }
    if (!non_constant) fail(ErrorKind::Validation, "phi: constant profile rejected");
}

PhiFunction::GrowthReport PhiFunction::growth_condition_report(
    const std::vector<double>& t_grid) const {
    if (kind_ == Kind::Zero)
        fail(ErrorKind::Precondition, "growth report: debug zero profile has no growth ratio");
    GrowthReport report;
    report.ratios.reserve(t_grid.size());
    for (double t : t_grid) {
        if (!(t > 0.0)) fail(ErrorKind::Precondition, "growth report: grid must be positive");
        report.ratios.push_back(std::log(prime(t)) / (*this)(t));
    }
    report.trending_to_zero = true;
    for (size_t i = 1; i < report.ratios.size(); ++i)
        if (std::fabs(report.ratios[i]) > std::fabs(report.ratios[i - 1]) + 1e-12)
            report.trending_to_zero = false;
    return report;
}

// ---- radial mass kernel ----------------------------------------------------

double partial_radial_mass(const PhiFunction& phi, double x) {
    if (!(x >= 0.0)) fail(ErrorKind::Precondition, "partial_radial_mass: x must be >= 0");
    if (phi.is_debug_zero()) {
        if (std::isinf(x))
            fail(ErrorKind::Range, "partial_radial_mass: diverges for the debug zero profile");
        return 0.5 * x * x;
    }
    if (x == 0.0) return 0.0;
    auto kernel = [&](double s) { return s * std::exp(-phi(s)); };
    return quadrature::line_integrate(kernel, 0.0, x, {1e-12, 1e-12}).value.to_double();
}

double partial_radial_mass_complement(const PhiFunction& phi, double x) {
    if (!(x >= 0.0)) fail(ErrorKind::Precondition, "complement mass: x must be >= 0");
    if (phi.is_debug_zero())
        fail(ErrorKind::Range, "complement mass: diverges for the debug zero profile");
    auto kernel = [&](double s) { return s * std::exp(-phi(s)); };
    return quadrature::line_integrate(kernel, x, kInf, {1e-12, 0.0}).value.to_double();
}

// ---- MeasureSpec -----------------------------------------------------------

MeasureSpec::MeasureSpec(PhiFunction phi, SupportBody2D gauge_body, double c0, bool normalized)
    : phi_(std::move(phi)), gauge_body_(std::move(gauge_body)), c0_(c0), normalized_(normalized) {
    if (!(c0_ > 0.0) || !std::isfinite(c0_))
        fail(ErrorKind::Validation, "measure: c0 must be strictly positive");
    if (normalized_) {
        const double z = normalization_constant(*this);
        if (std::fabs(c0_ * z - 1.0) > 1e-8)
            fail(ErrorKind::Validation, "measure: normalized flag set but c0 * Z != 1 within 1e-8");
    }
}

MeasureSpec MeasureSpec::make_normalized(PhiFunction phi, SupportBody2D gauge_body) {
    MeasureSpec plain(phi, gauge_body, 1.0, false);
    const double z = normalization_constant(plain);
    return MeasureSpec(std::move(phi), std::move(gauge_body), 1.0 / z, true);
}

MeasureSpec MeasureSpec::gaussian() {
    return MeasureSpec(PhiFunction::power(0.5, 2.0), SupportBody2D::disk(1.0),
                       1.0 / two_pi, true);
}

MeasureSpec MeasureSpec::lebesgue_debug(SupportBody2D gauge_body) {
    return MeasureSpec(PhiFunction::debug_zero(), std::move(gauge_body), 1.0, false);
}

double normalization_constant(const MeasureSpec& measure) {
    if (measure.phi().is_debug_zero())
        fail(ErrorKind::Range, "normalization: total mass diverges for the debug zero profile");
    const double psi_inf = partial_radial_mass(measure.phi(), kInf);
    return 2.0 * body_area(measure.gauge_body()) * psi_inf;
}

}  // namespace mixmeas
