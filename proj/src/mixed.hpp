#pragma once

#include "densities.hpp"

#include <vector>

namespace mixmeas {

struct MixedValue {
    LogValue value;
    double t = 0.0;
    long nodes_used = 0;
    double error_estimate = 0.0;
    /// Set when B or C is only piecewise smooth: the representation is used
    /// beyond the literal C^2 hypotheses of the second-order theorem.
    bool beyond_smooth_hypotheses = false;
};

struct MixedOptions {
    double rel_tolerance = 0.0;  // 0 = per-path default
};

/// mu(tK; M) = c0 Int h_M(theta) e^{-phi(t ||x_K||_L)} t f_K dtheta for a C2+
/// first body, or the per-edge boundary integral when K is a polygon. The
/// dilation t is applied through the scaling relations (x_{tK} = t x_K,
/// f_{tK} = t f_K), never by constructing a dilated body.
MixedValue mixed_first(const SupportBody2D& K, const SupportBody2D& M, const MeasureSpec& measure,
                       double t, const MixedOptions& opts = {});

/// Outer Minkowski content: mixed_first with M the unit disk.
MixedValue surface_content(const SupportBody2D& K, const MeasureSpec& measure, double t,
                           const MixedOptions& opts = {});

/// mu(tA; B, C) = c0 Int e^{-phi(t||x_A||_L)} [h_B h_C (1 - phi'(t||x_A||_L)
/// t f_A <grad ||x_A||_L, u>) - h_B' h_C'] dtheta. Signed; negative past the
/// sign-change threshold.
MixedValue mixed_second(const SupportBody2D& A, const SupportBody2D& B, const SupportBody2D& C,
                        const MeasureSpec& measure, double t, const MixedOptions& opts = {});

/// Gaussian special case evaluated from its own closed formula (h_A^2 + h_A'^2
/// exponent, 1 - t^2 h_A f_A bracket), independent of the gauge-gradient path.
MixedValue gaussian_second(const SupportBody2D& A, const SupportBody2D& B, const SupportBody2D& C,
                           double t, const MixedOptions& opts = {});

/// Bisection for the t in [t_lo, t_hi] where mixed_second changes sign.
double second_sign_change(const SupportBody2D& A, const SupportBody2D& B, const SupportBody2D& C,
                          const MeasureSpec& measure, double t_lo, double t_hi,
                          double t_tol = 1e-8);

/// Planar first mixed volume V(K, M) = (1/2) Int h_M f_K dtheta (edge sum for
/// polygons); symmetric in its arguments for C2+ pairs.
double lebesgue_mixed_area(const SupportBody2D& K, const SupportBody2D& M);

/// Max over the grid of |area(K+tM) - (area(K) + 2t V(K,M) + t^2 area(M))|,
/// areas taken with the debug Lebesgue density.
double steiner_max_deviation(const SupportBody2D& K, const SupportBody2D& M,
                             const std::vector<double>& t_grid);

// Integrand evaluators, exposed for the pointwise Gaussian-reduction test.
LogValue mixed_second_integrand(const SupportBody2D& A, const SupportBody2D& B,
                                const SupportBody2D& C, const MeasureSpec& measure, double t,
                                double theta);
LogValue gaussian_second_integrand(const SupportBody2D& A, const SupportBody2D& B,
                                   const SupportBody2D& C, double t, double theta);

/// Node floor for integrands of the form e^{-phi(t g(theta))}: the Laplace
/// peak width shrinks like 1/t, so convergence checking must not start on a
/// grid that cannot see the peak.
long peak_min_nodes(double t);

}  // namespace mixmeas
