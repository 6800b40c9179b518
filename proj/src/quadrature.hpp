#pragma once

#include "errors.hpp"
#include "logvalue.hpp"

#include <functional>
#include <vector>

namespace mixmeas::quadrature {

inline constexpr double two_pi = 6.283185307179586476925286766559;

struct QuadResult {
    LogValue value;
    long nodes_used = 0;
    /// Relative change between the last two refinement levels.
    double error_estimate = 0.0;
};

/// Thrown when refinement hits the node budget; carries the last estimate so
/// callers can decide whether it is still usable.
class QuadFailure : public Error {
public:
    QuadFailure(const std::string& what, QuadResult last)
        : Error(ErrorKind::Numerical, what), last_estimate(last) {}
    QuadResult last_estimate;
};

using PeriodicEvaluator = std::function<LogValue(double theta)>;

struct PeriodicOptions {
    double tolerance = 1e-10;
    long min_nodes = 64;          // first level checked for convergence
    long max_nodes = 1 << 16;
    double node_offset = 0.0;     // keeps a.e.-defined integrands off switch angles
    /// ln of the magnitude the integrand's terms cancel against. When set,
    /// values below 1e-13 of this scale on two consecutive levels are
    /// reported as an exact zero: the integrand is rounding residue there.
    double zero_scale_log = -std::numeric_limits<double>::infinity();
};

/// Equispaced trapezoid sum of f over [0, 2pi) at exactly n nodes, accumulated
/// by signed log-sum-exp (shift by the max log magnitude, sum shifted signed
/// terms, restore). abs_level, when given, receives ln of the same quadrature
/// applied to |f| -- the scale against which cancellation is judged.
LogValue trapezoid_fixed(const PeriodicEvaluator& f, long n, double node_offset = 0.0,
                         double* abs_level = nullptr);

/// Trapezoid rule with node doubling until the relative change between levels
/// drops below tolerance. Spectrally accurate for smooth periodic integrands.
QuadResult periodic_integrate(const PeriodicEvaluator& f, const PeriodicOptions& opts = {});

struct LineOptions {
    double rel_tolerance = 1e-12;
    double abs_tolerance = 0.0;
    int max_depth = 52;
};

/// Adaptive-bisection Simpson rule on [a, b]. b may be +inf, in which case the
/// upper limit is truncated where |f| falls below 1e-300.
QuadResult line_integrate(const std::function<double(double)>& f, double a, double b,
                          const LineOptions& opts = {});

struct CircleMinimum {
    double theta_star = 0.0;
    double min_value = 0.0;
    std::vector<double> argmin_set;  // one refined angle per near-minimal basin
    bool flat = false;               // every scan node was within tolerance of the minimum
};

/// Scan over an equispaced grid, then golden-section refine every local basin
/// within cluster_rel_tol (relative) of the global minimum. For a flat
/// function the argmin set spans the whole scan grid.
CircleMinimum circle_minimize(const std::function<double(double)>& f, int scan_nodes = 4096,
                              double cluster_rel_tol = 1e-6);

/// Golden-section minimizer on [a, b]; returns the midpoint of the final
/// bracket once its width is below width_tol.
double golden_min(const std::function<double(double)>& f, double a, double b,
                  double width_tol = 1e-12);

}  // namespace mixmeas::quadrature
