#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mixmeas::quadrature {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Once |sum| / sum|terms| is at this level, further refinement of a
/// cancelling integral cannot produce meaningful digits.
constexpr double kCancellationFloor = 1e-14;

struct LevelSum {
    LogValue value;
    double abs_level = -kInf;  // ln of the trapezoid sum of |f|
};

LevelSum sum_level(const std::vector<LogValue>& vals, double log_weight) {
    double m = -kInf;
    for (const LogValue& v : vals)
        if (v.sign != 0 && v.log_abs > m) m = v.log_abs;
    if (m == -kInf) return {};
    double signed_sum = 0.0, abs_sum = 0.0;
    for (const LogValue& v : vals) {
        if (v.sign == 0) continue;
        const double e = std::exp(v.log_abs - m);
        signed_sum += v.sign * e;
        abs_sum += e;
    }
    LevelSum out;
    out.abs_level = m + std::log(abs_sum) + log_weight;
    if (signed_sum != 0.0)
        out.value = {signed_sum > 0.0 ? 1 : -1, m + std::log(std::fabs(signed_sum)) + log_weight};
    return out;
}

bool numerically_zero(const LevelSum& s) {
    if (s.value.is_zero()) return true;
    return s.value.log_abs <= s.abs_level + std::log(kCancellationFloor);
}

}  // namespace

LogValue trapezoid_fixed(const PeriodicEvaluator& f, long n, double node_offset,
                         double* abs_level) {
    std::vector<LogValue> vals(static_cast<size_t>(n));
    for (long j = 0; j < n; ++j) vals[static_cast<size_t>(j)] = f(two_pi * j / n + node_offset);
    const LevelSum s = sum_level(vals, std::log(two_pi / n));
    if (abs_level) *abs_level = s.abs_level;
    return s.value;
}

QuadResult periodic_integrate(const PeriodicEvaluator& f, const PeriodicOptions& opts) {
    if (opts.tolerance <= 0.0) fail(ErrorKind::InvalidArgument, "periodic_integrate: tolerance must be > 0");
    long n = 64;
    while (n < opts.min_nodes) n *= 2;
    if (n > opts.max_nodes)
        fail(ErrorKind::InvalidArgument, "periodic_integrate: min_nodes exceeds max_nodes");

    std::vector<LogValue> vals(static_cast<size_t>(n));
    for (long j = 0; j < n; ++j) vals[static_cast<size_t>(j)] = f(two_pi * j / n + opts.node_offset);
    LevelSum prev = sum_level(vals, std::log(two_pi / n));

    while (n < opts.max_nodes) {
        const long n2 = 2 * n;
        std::vector<LogValue> next(static_cast<size_t>(n2));
        for (long j = 0; j < n; ++j) {
            next[static_cast<size_t>(2 * j)] = vals[static_cast<size_t>(j)];
            next[static_cast<size_t>(2 * j + 1)] = f(two_pi * (2 * j + 1) / n2 + opts.node_offset);
        }
        vals.swap(next);
        n = n2;
        const LevelSum cur = sum_level(vals, std::log(two_pi / n));

        const LogValue diff = cur.value - prev.value;
        double rel_change;
        if (diff.is_zero())
            rel_change = 0.0;
        else if (cur.value.is_zero())
            rel_change = kInf;
        else
            rel_change = std::exp(diff.log_abs - cur.value.log_abs);

        auto below_floor = [&](const LevelSum& s) {
            return s.value.is_zero() ||
                   s.value.log_abs <= opts.zero_scale_log + std::log(1e-13);
        };
        if (below_floor(cur) && below_floor(prev)) return {LogValue::zero(), n, 0.0};

        const bool cancelled_out = numerically_zero(cur) && numerically_zero(prev);
        if (rel_change <= opts.tolerance || cancelled_out)
            return {cur.value, n, cancelled_out && rel_change > opts.tolerance ? 0.0 : rel_change};

        prev = cur;
    }
    throw QuadFailure("periodic_integrate: no convergence at max_nodes",
                      {prev.value, n, kInf});
}

namespace {

struct SimpsonState {
    const std::function<double(double)>* f;
    double rel_tol = 1e-12;
    long evals = 0;
    double err_abs = 0.0;
};

double simpson_recurse(SimpsonState& st, double a, double b, double fa, double fm, double fb,
                       double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = (*st.f)(lm), frm = (*st.f)(rm);
    st.evals += 2;
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    // Accept on the global budget or once the panel itself is resolved to the
    // requested relative accuracy; the latter bounds the work when the coarse
    // pass underestimates the integral.
    const double accept = std::max(eps, st.rel_tol * std::fabs(left + right));
    if (depth <= 0 || std::fabs(delta) <= 15.0 * accept) {
        st.err_abs += std::fabs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return simpson_recurse(st, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           simpson_recurse(st, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

double truncation_point(const std::function<double(double)>& f, double a) {
    double x = std::max(1.0, 2.0 * std::fabs(a) + 1.0);
    for (int i = 0; i < 80; ++i) {
        if (std::fabs(f(x)) < 1e-300) return x;
        x *= 2.0;
    }
    fail(ErrorKind::Numerical, "line_integrate: integrand does not decay below 1e-300");
}

}  // namespace

QuadResult line_integrate(const std::function<double(double)>& f, double a, double b,
                          const LineOptions& opts) {
    if (std::isinf(b)) b = truncation_point(f, a);
    if (!(a < b)) fail(ErrorKind::InvalidArgument, "line_integrate: requires a < b");

    SimpsonState st{&f, opts.rel_tolerance};
    // Coarse pass to fix the error budget for the adaptive refinement.
    const int kCoarse = 32;
    double coarse = 0.0;
    const double hstep = (b - a) / kCoarse;
    std::vector<double> fx(kCoarse + 1);
    for (int i = 0; i <= kCoarse; ++i) fx[static_cast<size_t>(i)] = f(a + hstep * i);
    st.evals += kCoarse + 1;
    for (int i = 0; i + 2 <= kCoarse; i += 2)
        coarse += hstep / 3.0 * (fx[static_cast<size_t>(i)] + 4.0 * fx[static_cast<size_t>(i + 1)] +
                                 fx[static_cast<size_t>(i + 2)]);
    double eps = std::max(opts.abs_tolerance, opts.rel_tolerance * std::fabs(coarse));
    if (eps == 0.0) eps = opts.rel_tolerance;  // integrand may vanish on the coarse grid

    double total = 0.0;
    for (int i = 0; i + 2 <= kCoarse; i += 2) {
        const double pa = a + hstep * i, pb = a + hstep * (i + 2);
        const double fa = fx[static_cast<size_t>(i)], fm = fx[static_cast<size_t>(i + 1)],
                     fb = fx[static_cast<size_t>(i + 2)];
        const double whole = (pb - pa) / 6.0 * (fa + 4.0 * fm + fb);
        total += simpson_recurse(st, pa, pb, fa, fm, fb, whole, eps * 2.0 / kCoarse,
                                 opts.max_depth);
    }

    QuadResult out;
    out.value = LogValue::from_double(total);
    out.nodes_used = st.evals;
    out.error_estimate = total != 0.0 ? st.err_abs / std::fabs(total) : st.err_abs;
    if (!std::isfinite(total))
        throw QuadFailure("line_integrate: non-finite result", out);
    return out;
}

double golden_min(const std::function<double(double)>& f, double a, double b, double width_tol) {
    constexpr double invphi = 0.61803398874989484820;
    constexpr double invphi2 = 1.0 - invphi;
    double x1 = a + invphi2 * (b - a), x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > width_tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + invphi2 * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

CircleMinimum circle_minimize(const std::function<double(double)>& f, int scan_nodes,
                              double cluster_rel_tol) {
    const int n = scan_nodes;
    std::vector<double> vals(static_cast<size_t>(n));
    double fmin = kInf;
    int imin = 0;
    for (int j = 0; j < n; ++j) {
        vals[static_cast<size_t>(j)] = f(two_pi * j / n);
        if (vals[static_cast<size_t>(j)] < fmin) {
            fmin = vals[static_cast<size_t>(j)];
            imin = j;
        }
    }
    const double qual = fmin + cluster_rel_tol * std::fabs(fmin);
    std::vector<bool> near(static_cast<size_t>(n));
    int near_count = 0;
    for (int j = 0; j < n; ++j) {
        near[static_cast<size_t>(j)] = vals[static_cast<size_t>(j)] <= qual;
        if (near[static_cast<size_t>(j)]) ++near_count;
    }

    CircleMinimum out;
    if (near_count == n) {
        out.flat = true;
        out.min_value = fmin;
        out.theta_star = two_pi * imin / n;
        out.argmin_set.reserve(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) out.argmin_set.push_back(two_pi * j / n);
        return out;
    }

    // Group circularly adjacent qualifying nodes into basins, refine each one.
    std::vector<std::pair<int, int>> runs;  // [first, last] inclusive, circular
    int start = 0;
    while (near[static_cast<size_t>(start)]) ++start;  // start outside a run; near_count < n
    int j = start;
    for (int step = 0; step < n; ++step) {
        j = (start + step) % n;
        if (!near[static_cast<size_t>(j)]) continue;
        if (runs.empty() || (j + n - 1) % n != runs.back().second)
            runs.emplace_back(j, j);
        else
            runs.back().second = j;
    }

    out.min_value = kInf;
    for (const auto& run : runs) {
        int best = run.first;
        const int len = (run.second - run.first + n) % n + 1;
        for (int k = 0; k < len; ++k) {
            const int idx = (run.first + k) % n;
            if (vals[static_cast<size_t>(idx)] < vals[static_cast<size_t>(best)]) best = idx;
        }
        const double lo = two_pi * (best - 1) / n, hi = two_pi * (best + 1) / n;
        double theta = golden_min(f, lo, hi, 1e-12);
        theta = std::fmod(theta + two_pi, two_pi);
        const double val = f(theta);
        out.argmin_set.push_back(theta);
        if (val < out.min_value) {
            out.min_value = val;
            out.theta_star = theta;
        }
    }
    std::sort(out.argmin_set.begin(), out.argmin_set.end());
    return out;
}

}  // namespace mixmeas::quadrature
