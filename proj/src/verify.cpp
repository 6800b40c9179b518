#include "verify.hpp"

#include "oracles.hpp"

#include <cmath>

namespace mixmeas::verify {

namespace {

double rel_err(double got, double want) {
    if (want == 0.0) return std::fabs(got);
    return std::fabs(got - want) / std::fabs(want);
}

double rel_err(const LogValue& got, const LogValue& want) { return relative_difference(want, got); }

CheckResult make_result(std::string name, double worst, double bound) {
    CheckResult r;
    r.name = std::move(name);
    r.worst = worst;
    r.bound = bound;
    r.pass = worst <= bound;
    return r;
}

SupportBody2D unit_square() {
    return SupportBody2D::polygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}});
}

}  // namespace

const std::vector<MatrixConfig>& builtin_matrix() {
    static const std::vector<MatrixConfig> matrix = [] {
        const SupportBody2D disk1 = SupportBody2D::disk(1.0);
        const SupportBody2D ell21 = SupportBody2D::ellipse(2.0, 1.0);
        const SupportBody2D ell157 = SupportBody2D::ellipse(1.5, 0.7);
        const SupportBody2D four = SupportBody2D::fourier(1.0, {0.0, 0.05}, {});
        const SupportBody2D square = unit_square();
        const MeasureSpec gauss_raw(PhiFunction::power(0.5, 2.0), disk1, 1.0);
        std::vector<MatrixConfig> m;
        m.push_back({"disks/gaussian", disk1, disk1, disk1, gauss_raw});
        m.push_back({"ellipse/gaussian-normalized", ell21, disk1, disk1, MeasureSpec::gaussian()});
        m.push_back({"mixed-bodies/gaussian", disk1, ell157, SupportBody2D::disk(0.8), gauss_raw});
        m.push_back({"fourier/gaussian", four, disk1, disk1, gauss_raw});
        m.push_back({"ellipse/linear", ell21, disk1, disk1,
                     MeasureSpec(PhiFunction::linear(1.0), disk1, 1.0)});
        m.push_back({"disk/square-seconds", disk1, square, square, gauss_raw});
        return m;
    }();
    return matrix;
}

std::vector<CheckResult> check_fd_first() {
    std::vector<CheckResult> out;
    for (const MatrixConfig& cfg : builtin_matrix()) {
        double worst = 0.0;
        for (double t : {1.0, 2.0, 4.0}) {
            const LogValue fd = oracles::fd_first(cfg.A, cfg.B, cfg.measure, t);
            const MixedValue closed = mixed_first(cfg.A, cfg.B, cfg.measure, t);
            worst = std::max(worst, rel_err(fd, closed.value));
        }
        out.push_back(make_result("fd_first vs mixed_first [" + cfg.name + "]", worst, 1e-4));
    }
    return out;
}

std::vector<CheckResult> check_fd_second() {
    std::vector<CheckResult> out;
    for (const MatrixConfig& cfg : builtin_matrix()) {
        double worst = 0.0;
        for (double t : {1.5, 2.0, 3.0}) {
            const LogValue fd = oracles::fd_second(cfg.A, cfg.B, cfg.C, cfg.measure, t);
            const MixedValue closed = mixed_second(cfg.A, cfg.B, cfg.C, cfg.measure, t);
            worst = std::max(worst, rel_err(fd, closed.value));
        }
        out.push_back(make_result("fd_second vs mixed_second [" + cfg.name + "]", worst, 1e-3));
    }
    return out;
}

std::vector<CheckResult> check_derivative_identity() {
    // mu(xK; K) = d/dx mu(xK); outer derivative by central differences with
    // one Richardson step.
    std::vector<CheckResult> out;
    const std::vector<const MatrixConfig*> picks = {&builtin_matrix()[0], &builtin_matrix()[1],
                                                    &builtin_matrix()[4]};
    for (const MatrixConfig* cfg : picks) {
        double worst = 0.0;
        for (double t : {1.5, 2.5}) {
            auto deriv = [&](double dt) {
                const LogValue hi = oracles::body_mass(cfg->A, cfg->measure, t + dt);
                const LogValue lo = oracles::body_mass(cfg->A, cfg->measure, t - dt);
                return (hi - lo).to_double() / (2.0 * dt);
            };
            const double d1 = deriv(1e-3), d2 = deriv(5e-4);
            const double extrapolated = (4.0 * d2 - d1) / 3.0;
            const MixedValue mixed = mixed_first(cfg->A, cfg->A, cfg->measure, t);
            worst = std::max(worst, rel_err(extrapolated, mixed.value.to_double()));
        }
        out.push_back(make_result("d/dt mass = mixed_first(K,K) [" + cfg->name + "]", worst, 1e-5));
    }
    return out;
}

std::vector<CheckResult> check_steiner() {
    std::vector<CheckResult> out;
    const SupportBody2D disk1 = SupportBody2D::disk(1.0);
    const std::vector<double> grid = {0.0, 0.5, 1.0};
    out.push_back(make_result("steiner [disk,disk]",
                              steiner_max_deviation(disk1, disk1, grid), 1e-8));
    out.push_back(make_result("steiner [square,disk]",
                              steiner_max_deviation(unit_square(), disk1, grid), 1e-7));
    out.push_back(make_result("steiner [ellipse,disk]",
                              steiner_max_deviation(SupportBody2D::ellipse(2.0, 1.0), disk1, grid),
                              1e-7));
    return out;
}

std::vector<CheckResult> check_gauge_gradient() {
    std::vector<CheckResult> out;
    const std::vector<std::pair<std::string, SupportBody2D>> bodies = {
        {"disk", SupportBody2D::disk(1.0)},
        {"ellipse", SupportBody2D::ellipse(2.0, 1.0)},
        {"fourier", SupportBody2D::fourier(1.0, {0.0, 0.05}, {})},
    };
    const std::vector<Vec2> points = {{3.0, 4.0}, {1.0, 1.0}, {-0.7, 2.1}, {0.2, -0.9}};
    for (const auto& [name, body] : bodies) {
        double worst = 0.0;
        for (const Vec2& x : points) {
            const Vec2 exact = body.gauge_gradient(x);
            const Vec2 fd = oracles::gauge_gradient_fd(body, x);
            worst = std::max(worst, std::hypot(exact.x - fd.x, exact.y - fd.y));
        }
        out.push_back(make_result("gauge gradient vs central differences [" + name + "]", worst,
                                  1e-7));
    }
    return out;
}

std::vector<CheckResult> check_exact_calibration() {
    std::vector<CheckResult> out;
    const SupportBody2D disk1 = SupportBody2D::disk(1.0);
    const MeasureSpec gauss_raw(PhiFunction::power(0.5, 2.0), disk1, 1.0);

    double worst = 0.0;
    for (double t : {1.0, 2.0, 10.0, 20.0}) {
        const MixedValue v = mixed_first(disk1, disk1, gauss_raw, t);
        const LogValue want = LogValue::from_log(1, std::log(two_pi * t) - 0.5 * t * t);
        worst = std::max(worst, rel_err(v.value, want));
    }
    out.push_back(make_result("mixed_first all-disk closed form 2 pi t e^{-t^2/2}", worst, 1e-8));

    worst = 0.0;
    for (double t : {1.0, 2.0, 5.0}) {
        const LogValue mass = oracles::body_mass(disk1, gauss_raw, t);
        const double want = two_pi * (1.0 - std::exp(-0.5 * t * t));
        worst = std::max(worst, rel_err(mass.to_double(), want));
    }
    out.push_back(make_result("body_mass disk closed form 2 pi (1 - e^{-t^2/2})", worst, 1e-8));

    worst = 0.0;
    const MeasureSpec gauss_norm = MeasureSpec::gaussian();
    for (double t : {2.0, 5.0, 10.0, 14.0}) {
        const LogValue tail = oracles::complement_mass(disk1, gauss_norm, t);
        const LogValue want = LogValue::from_log(1, -0.5 * t * t);
        worst = std::max(worst, rel_err(tail, want));
    }
    out.push_back(make_result("tail disk closed form e^{-t^2/2}", worst, 1e-8));
    return out;
}

std::vector<CheckResult> run_all() {
    std::vector<CheckResult> all;
    for (auto block : {check_fd_first(), check_fd_second(), check_derivative_identity(),
                       check_steiner(), check_gauge_gradient(), check_exact_calibration()})
        all.insert(all.end(), block.begin(), block.end());
    return all;
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace mixmeas::verify
