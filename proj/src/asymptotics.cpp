#include "asymptotics.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mixmeas::asymptotics {

namespace {

/// Largest exponent phi(r t) we evaluate in a sweep; e^{-600} keeps every
/// intermediate comfortably inside the double range.
constexpr double kMaxExponent = 600.0;

void check_grid_shape(const std::vector<double>& t_grid) {
    if (t_grid.size() < 2) fail(ErrorKind::Precondition, "rate sweep: grid needs >= 2 points");
    double prev = 0.0;
    for (double t : t_grid) {
        if (!(t > prev)) fail(ErrorKind::Precondition, "rate sweep: grid must be increasing");
        prev = t;
    }
    if (t_grid.front() < 2.0)
        fail(ErrorKind::Precondition, "rate sweep: grid must start at t >= 2");
}

void check_grid(const std::vector<double>& t_grid, const PhiFunction& phi, double rate_r) {
    check_grid_shape(t_grid);
    if (phi(rate_r * t_grid.back()) > kMaxExponent) {
        std::ostringstream msg;
        msg << "rate sweep: phi(r t) exceeds " << kMaxExponent << " at t = " << t_grid.back();
        fail(ErrorKind::Precondition, msg.str());
    }
}

void finish_trend(RateSweep& sweep) {
    if (sweep.entries.size() < 2) return;
    const double lo = std::fabs(sweep.entries.front().ratio + 1.0);
    const double hi = std::fabs(sweep.entries.back().ratio + 1.0);
    sweep.trend_toward_limit = hi < lo;
}

}  // namespace

RateSweep rate_sweep_first(const SupportBody2D& K, const SupportBody2D& M,
                           const MeasureSpec& measure, const std::vector<double>& t_grid) {
    RateSweep sweep;
    sweep.kind = SweepKind::First;
    sweep.rate_r = inradius(K, measure.gauge_body()).r;
    check_grid(t_grid, measure.phi(), sweep.rate_r);
    for (double t : t_grid) {
        const MixedValue v = mixed_first(K, M, measure, t);
        if (v.value.sign != 1) {
            std::ostringstream msg;
            msg << "rate_sweep_first: positivity invariant violated at t = " << t;
            fail(ErrorKind::Numerical, msg.str());
        }
        SweepEntry e;
        e.t = t;
        e.value = v.value;
        e.phi_rt = measure.phi()(sweep.rate_r * t);
        e.ratio = v.value.log_abs / e.phi_rt;
        e.nodes = v.nodes_used;
        sweep.entries.push_back(e);
    }
    finish_trend(sweep);
    return sweep;
}

RateSweep rate_sweep_second(const SupportBody2D& A, const SupportBody2D& B,
                            const SupportBody2D& C, const MeasureSpec& measure,
                            const std::vector<double>& t_grid) {
    RateSweep sweep;
    sweep.kind = SweepKind::Second;
    sweep.rate_r = inradius(A, measure.gauge_body()).r;
    check_grid(t_grid, measure.phi(), sweep.rate_r);
    sweep.growth_hypothesis_ok = measure.phi().growth_condition_report(t_grid).trending_to_zero;
    for (double t : t_grid) {
        const MixedValue v = mixed_second(A, B, C, measure, t);
        if (v.value.sign != -1) {
            std::ostringstream msg;
            msg << "rate_sweep_second: value not negative at t = " << t
                << "; grid must lie past the sign-change threshold";
            fail(ErrorKind::Range, msg.str());
        }
        SweepEntry e;
        e.t = t;
        e.value = v.value;
        e.phi_rt = measure.phi()(sweep.rate_r * t);
        e.ratio = v.value.log_abs / e.phi_rt;  // ln(-value) since sign = -1
        e.nodes = v.nodes_used;
        sweep.entries.push_back(e);
    }
    finish_trend(sweep);
    return sweep;
}

RateSweep rate_sweep_gaussian_second(const SupportBody2D& A, const SupportBody2D& B,
                                     const SupportBody2D& C, const std::vector<double>& t_grid) {
    RateSweep sweep;
    sweep.kind = SweepKind::GaussianSecond;
    const PhiFunction gauss_phi = PhiFunction::power(0.5, 2.0);
    sweep.rate_r = inradius(A, SupportBody2D::disk(1.0)).r;
    check_grid(t_grid, gauss_phi, sweep.rate_r);
    for (double t : t_grid) {
        const MixedValue v = gaussian_second(A, B, C, t);
        if (v.value.sign != -1) {
            std::ostringstream msg;
            msg << "rate_sweep_gaussian_second: value not negative at t = " << t;
            fail(ErrorKind::Range, msg.str());
        }
        SweepEntry e;
        e.t = t;
        e.value = v.value;
        e.phi_rt = gauss_phi(sweep.rate_r * t);  // r^2 t^2 / 2
        e.ratio = v.value.log_abs / e.phi_rt;
        e.nodes = v.nodes_used;
        sweep.entries.push_back(e);
    }
    finish_trend(sweep);
    return sweep;
}

RateSweep tail_rate(const SupportBody2D& K, const MeasureSpec& measure,
                    const std::vector<double>& t_grid) {
    if (!measure.normalized())
        fail(ErrorKind::Precondition, "tail_rate: measure must be normalized (c0 = 1/Z)");
    RateSweep sweep;
    sweep.kind = SweepKind::Tail;
    sweep.rate_r = inradius(K, measure.gauge_body()).r;
    check_grid_shape(t_grid);

    // The tail behaves like e^{-phi(rt)}; past phi(rt) ~ 667 it underflows the
    // 1e-290 floor. Name the largest usable t in the error.
    const double log_floor = std::log(1e-290);
    if (measure.phi()(sweep.rate_r * t_grid.back()) > -log_floor) {
        double lo = t_grid.front(), hi = t_grid.back();
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            (measure.phi()(sweep.rate_r * mid) > -log_floor ? hi : lo) = mid;
        }
        std::ostringstream msg;
        msg << "tail_rate: tail underflows below 1e-290 on this grid; max usable t ~ " << lo;
        fail(ErrorKind::Range, msg.str());
    }

    for (double t : t_grid) {
        const LogValue tail = oracles::complement_mass(K, measure, t);
        if (tail.sign != 1 || tail.log_abs < log_floor) {
            std::ostringstream msg;
            msg << "tail_rate: tail not representable at t = " << t;
            fail(ErrorKind::Range, msg.str());
        }
        SweepEntry e;
        e.t = t;
        e.value = tail;
        e.phi_rt = measure.phi()(sweep.rate_r * t);
        e.ratio = tail.log_abs / e.phi_rt;
        sweep.entries.push_back(e);
    }
    finish_trend(sweep);
    return sweep;
}

MinEnergyResult min_energy(const SupportBody2D& A) {
    if (A.smoothness() != Smoothness::C2Plus)
        fail(ErrorKind::Unsupported, "min_energy: body must be C2+");
    auto energy = [&](double theta) {
        const SupportDerivs d = A.support_eval(theta);
        return d.h * d.h + d.dh * d.dh;
    };
    const quadrature::CircleMinimum m = quadrature::circle_minimize(energy, 4096);
    return {m.min_value, m.argmin_set};
}

ComparisonReport comparison_check(const SupportBody2D& K, const SupportBody2D& L, double R,
                                  const SupportBody2D& M, const MeasureSpec& measure,
                                  const std::vector<double>& t_grid) {
    if (!(R > 0.0)) fail(ErrorKind::Precondition, "comparison_check: R must be > 0");
    ComparisonReport report;
    report.R = R;
    report.inradius_KL = inradius(K, L).r;
    report.max_t_tested = t_grid.back();

    report.inclusion_holds = true;
    const int grid = 4096;
    for (int j = 0; j < grid; ++j) {
        const double theta = two_pi * j / grid;
        const double hk = K.support(theta), hl = L.support(theta);
        if (R * hl > hk * (1.0 + 1e-12)) {
            report.inclusion_holds = false;
            break;
        }
    }

    const SupportBody2D RL = SupportBody2D::combine({{R, L}});
    for (double t : t_grid) {
        const MixedValue lhs = mixed_first(RL, M, measure, t);
        const MixedValue rhs = mixed_first(K, M, measure, t);
        if (lhs.value < rhs.value) {
            report.first_violation_t = t;
            break;
        }
    }
    report.holds_on_grid = !report.first_violation_t.has_value();

    const double slack = 1e-9 * std::max(1.0, report.inradius_KL);
    if (!report.holds_on_grid) {
        report.verdict = ComparisonVerdict::Violated;
    } else if (R <= report.inradius_KL + slack) {
        report.verdict = ComparisonVerdict::Holds;
        // The theorem's conclusion must agree with the direct geometric check.
        if (!report.inclusion_holds)
            fail(ErrorKind::Assertion,
                 "comparison_check: R <= r(K,L) but the support-function inclusion fails");
    } else {
        report.verdict = ComparisonVerdict::Inconclusive;
    }
    return report;
}

std::vector<double> default_t_grid(const PhiFunction& phi) {
    const double t_min = 2.5;
    const double t_max = phi.kind() == PhiFunction::Kind::Linear ? 40.0 : 14.0;
    const int points = 16;
    std::vector<double> grid;
    grid.reserve(points);
    for (int i = 0; i < points; ++i)
        grid.push_back(t_min * std::pow(t_max / t_min, double(i) / (points - 1)));
    return grid;
}

}  // namespace mixmeas::asymptotics
