#include "oracles.hpp"

#include "mixed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mixmeas::oracles {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Polar-coordinate mass integral with the radial kernel `radial_kernel(x)`
/// standing for either Psi (mass) or its complement (tail). Piecewise bodies
/// with known kink angles are split into smooth sectors and integrated
/// adaptively; everything else goes through the periodic trapezoid rule.
LogValue polar_mass(const SupportBody2D& C, const MeasureSpec& measure, double scale,
                    bool complement) {
    if (!(scale > 0.0)) fail(ErrorKind::Precondition, "body_mass: scale must be > 0");
    const SupportBody2D& L = measure.gauge_body();
    auto kernel = [&](double x) {
        return complement ? partial_radial_mass_complement(measure.phi(), x)
                          : partial_radial_mass(measure.phi(), x);
    };
    auto point = [&](double theta) {
        const double g = L.gauge(unit_vector(theta));
        return kernel(scale * C.radial(theta) * g) / (g * g);
    };

    std::vector<double> kinks;
    if (C.radial_kinks_known()) kinks = C.radial_kink_angles();
    if (L.radial_kinks_known())
        for (double k : L.radial_kink_angles()) kinks.push_back(k);
    const bool splittable = C.radial_kinks_known() && L.radial_kinks_known();

    if (splittable && !kinks.empty()) {
        std::sort(kinks.begin(), kinks.end());
        double total = 0.0;
        for (size_t i = 0; i < kinks.size(); ++i) {
            const double lo = kinks[i];
            const double hi = i + 1 < kinks.size() ? kinks[i + 1] : kinks.front() + two_pi;
            if (hi - lo < 1e-15) continue;
            total += quadrature::line_integrate(point, lo, hi, {1e-11, 0.0}).value.to_double();
        }
        return LogValue::from_double(measure.c0() * total);
    }

    quadrature::PeriodicOptions opts;
    opts.tolerance = splittable ? 1e-10 : 1e-7;
    opts.min_nodes = complement ? peak_min_nodes(scale) : 1024;
    opts.max_nodes = 1 << 17;
    auto f = [&](double theta) { return LogValue::from_double(point(theta)); };
    const quadrature::QuadResult q = quadrature::periodic_integrate(f, opts);
    return q.value.log_scaled(std::log(measure.c0()));
}

/// Polynomial extrapolation to step 0 through (steps[i], values[i]) by the
/// Neville tableau. Values arrive as LogValues of one common magnitude scale;
/// the arithmetic is done shifted by the largest magnitude.
LogValue neville_to_zero(const std::vector<double>& steps, const std::vector<LogValue>& values) {
    double shift = -kInf;
    for (const LogValue& v : values)
        if (!v.is_zero()) shift = std::max(shift, v.log_abs);
    if (shift == -kInf) return LogValue::zero();
    std::vector<double> tableau(values.size());
    for (size_t i = 0; i < values.size(); ++i)
        tableau[i] = values[i].sign * std::exp(values[i].log_abs - shift);
    for (size_t level = 1; level < tableau.size(); ++level)
        for (size_t i = 0; i + level < tableau.size(); ++i) {
            const double x0 = steps[i], x1 = steps[i + level];
            tableau[i] = (x0 * tableau[i + 1] - x1 * tableau[i]) / (x0 - x1);
        }
    return LogValue::from_double(tableau[0]).log_scaled(shift);
}

void check_significance(const LogValue& difference, const char* who) {
    if (difference.is_zero() || difference.log_abs < std::log(1e-280))
        fail(ErrorKind::Range,
             std::string(who) + ": mass difference below 1e-280, result unreliable");
}

}  // namespace

void StepSchedule::check() const {
    if (steps.empty()) fail(ErrorKind::InvalidArgument, "schedule: needs at least one step");
    double prev = kInf;
    for (double s : steps) {
        if (!(s > 1e-6)) fail(ErrorKind::InvalidArgument, "schedule: steps must be > 1e-6");
        if (!(s < prev)) fail(ErrorKind::InvalidArgument, "schedule: steps must be strictly decreasing");
        prev = s;
    }
}

LogValue body_mass(const SupportBody2D& C, const MeasureSpec& measure, double scale) {
    return polar_mass(C, measure, scale, false);
}

LogValue complement_mass(const SupportBody2D& C, const MeasureSpec& measure, double scale) {
    return polar_mass(C, measure, scale, true);
}

LogValue fd_first(const SupportBody2D& K, const SupportBody2D& M, const MeasureSpec& measure,
                  double t, const StepSchedule& schedule) {
    schedule.check();
    if (!(t > 0.0)) fail(ErrorKind::Precondition, "fd_first: t must be > 0");
    const LogValue base = body_mass(K, measure, t);
    std::vector<LogValue> quotients;
    quotients.reserve(schedule.steps.size());
    for (double eps : schedule.steps) {
        const SupportBody2D grown = SupportBody2D::combine({{t, K}, {eps, M}});
        const LogValue diff = body_mass(grown, measure, 1.0) - base;
        check_significance(diff, "fd_first");
        quotients.push_back(diff.log_scaled(-std::log(eps)));
    }
    if (!schedule.extrapolate) return quotients.back();
    return neville_to_zero(schedule.steps, quotients);
}

LogValue fd_second(const SupportBody2D& A, const SupportBody2D& B, const SupportBody2D& C,
                   const MeasureSpec& measure, double t, const StepSchedule& schedule) {
    schedule.check();
    if (!(t > 0.0)) fail(ErrorKind::Precondition, "fd_second: t must be > 0");
    const bool bc_same = &B.impl() == &C.impl();
    const LogValue m00 = body_mass(A, measure, t);
    std::vector<LogValue> quotients;
    quotients.reserve(schedule.steps.size());
    for (double eps : schedule.steps) {
        const SupportBody2D ab = SupportBody2D::combine({{t, A}, {eps, B}});
        const SupportBody2D abc = SupportBody2D::combine({{t, A}, {eps, B}, {eps, C}});
        const LogValue m10 = body_mass(ab, measure, 1.0);
        const LogValue m01 =
            bc_same ? m10 : body_mass(SupportBody2D::combine({{t, A}, {eps, C}}), measure, 1.0);
        const LogValue m11 = body_mass(abc, measure, 1.0);
        const LogValue num = (m11 - m10) - (m01 - m00);
        check_significance(num, "fd_second");
        quotients.push_back(num.log_scaled(-2.0 * std::log(eps)));
    }
    if (!schedule.extrapolate) return quotients.back();
    return neville_to_zero(schedule.steps, quotients);
}

Vec2 gauge_gradient_fd(const SupportBody2D& L, Vec2 x, double step) {
    if (x.x == 0.0 && x.y == 0.0)
        fail(ErrorKind::Precondition, "gauge_gradient_fd: x must be nonzero");
    auto central = [&](double h) {
        const double gx = (L.gauge({x.x + h, x.y}) - L.gauge({x.x - h, x.y})) / (2.0 * h);
        const double gy = (L.gauge({x.x, x.y + h}) - L.gauge({x.x, x.y - h})) / (2.0 * h);
        return Vec2{gx, gy};
    };
    const Vec2 g1 = central(step), g2 = central(0.5 * step);
    // Central differences have an h^2 leading error term.
    return {(4.0 * g2.x - g1.x) / 3.0, (4.0 * g2.y - g1.y) / 3.0};
}

double inradius_bruteforce(const SupportBody2D& K, const SupportBody2D& L, long n_grid) {
    if (n_grid < 10000)
        fail(ErrorKind::Precondition, "inradius_bruteforce: needs at least 1e4 grid points");
    double best = kInf;
    for (long j = 0; j < n_grid; ++j) {
        const double theta = two_pi * j / n_grid;
        best = std::min(best, K.support(theta) / L.support(theta));
    }
    return best;
}

}  // namespace mixmeas::oracles
