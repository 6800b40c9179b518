#pragma once

#include "densities.hpp"

#include <vector>

namespace mixmeas::oracles {

/// Finite-difference step schedule for the definitional oracles. Steps must be
/// strictly decreasing and > 1e-6; the default floor of 2.5e-3 keeps mass
/// differences at least three orders of magnitude above the quadrature
/// tolerance.
struct StepSchedule {
    std::vector<double> steps{1e-2, 5e-3, 2.5e-3};
    bool extrapolate = true;

    void check() const;
};

/// mu(scale * C) by polar coordinates:
/// c0 Int g(theta)^{-2} Psi(scale rho_C(theta) g(theta)) dtheta with
/// g = ||u||_L and Psi the partial radial mass.
LogValue body_mass(const SupportBody2D& C, const MeasureSpec& measure, double scale);

/// mu((scale * C)^c), integrating the complementary radial kernel directly so
/// large-t tails never cancel against 1.
LogValue complement_mass(const SupportBody2D& C, const MeasureSpec& measure, double scale);

/// First mixed measure straight from the definition:
/// [mu(tK + eps M) - mu(tK)] / eps over the schedule, extrapolated to eps = 0.
LogValue fd_first(const SupportBody2D& K, const SupportBody2D& M, const MeasureSpec& measure,
                  double t, const StepSchedule& schedule = {});

/// Second mixed measure from the definition: the mixed second difference
/// [mu(tA+sB+tauC) - mu(tA+sB) - mu(tA+tauC) + mu(tA)]/(s tau) with s = tau.
LogValue fd_second(const SupportBody2D& A, const SupportBody2D& B, const SupportBody2D& C,
                   const MeasureSpec& measure, double t, const StepSchedule& schedule = {});

/// Central differences of the gauge with step h and h/2, Richardson
/// extrapolated; validates the envelope-rule gradient.
Vec2 gauge_gradient_fd(const SupportBody2D& L, Vec2 x, double step = 1e-5);

/// Plain minimum of h_K/h_L over n_grid equispaced angles, no refinement.
double inradius_bruteforce(const SupportBody2D& K, const SupportBody2D& L, long n_grid);

}  // namespace mixmeas::oracles
