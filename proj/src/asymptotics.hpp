#pragma once

#include "mixed.hpp"

#include <optional>
#include <vector>

namespace mixmeas::asymptotics {

enum class SweepKind { First, Second, GaussianSecond, Tail };

struct SweepEntry {
    double t = 0.0;
    LogValue value;
    double ratio = 0.0;    // ln|value| / phi(rate_r * t)
    double phi_rt = 0.0;
    long nodes = 0;
    bool defined = true;   // false entries are flagged, never silently dropped
};

struct RateSweep {
    SweepKind kind = SweepKind::First;
    double rate_r = 0.0;   // the inradius entering the rate function
    std::vector<SweepEntry> entries;
    /// |ratio + 1| at the top of the grid is smaller than at the bottom.
    bool trend_toward_limit = false;
    /// For second-order sweeps: the growth-condition ratio was non-increasing
    /// over the grid. Informational; the sweep still runs when false.
    bool growth_hypothesis_ok = true;
};

/// ln mu(tK; M) / phi(r(K,L) t) over the grid; the ratio tends to -1.
RateSweep rate_sweep_first(const SupportBody2D& K, const SupportBody2D& M,
                           const MeasureSpec& measure, const std::vector<double>& t_grid);

/// ln[-mu(tA; B, C)] / phi(r(A,L) t); the grid must lie past the sign-change
/// threshold (an error names the first offending t otherwise).
RateSweep rate_sweep_second(const SupportBody2D& A, const SupportBody2D& B,
                            const SupportBody2D& C, const MeasureSpec& measure,
                            const std::vector<double>& t_grid);

/// Gaussian second-order rate: ln[-gamma2(tA;B,C)] / (r^2 t^2 / 2) with
/// r = r(A, unit disk).
RateSweep rate_sweep_gaussian_second(const SupportBody2D& A, const SupportBody2D& B,
                                     const SupportBody2D& C, const std::vector<double>& t_grid);

/// ln mu((tK)^c) / phi(r(K,L) t) for a normalized measure; tends to -1.
RateSweep tail_rate(const SupportBody2D& K, const MeasureSpec& measure,
                    const std::vector<double>& t_grid);

struct MinEnergyResult {
    double value = 0.0;
    std::vector<double> argmin_angles;
};

/// min over theta of h_A^2 + h_A'^2 = |x_A|^2; equals r(A, unit disk)^2, the
/// Gaussian rate function.
MinEnergyResult min_energy(const SupportBody2D& A);

enum class ComparisonVerdict { Holds, Violated, Inconclusive };

struct ComparisonReport {
    double R = 0.0;
    double inradius_KL = 0.0;
    bool holds_on_grid = false;       // mu(tRL;M) >= mu(tK;M) at every grid t
    bool inclusion_holds = false;     // R h_L <= h_K pointwise (direct support check)
    ComparisonVerdict verdict = ComparisonVerdict::Inconclusive;
    std::optional<double> first_violation_t;
    double max_t_tested = 0.0;
};

/// Tests the comparison-theorem hypothesis mu(tRL; M) >= mu(tK; M) on the grid
/// and pairs it with the direct support-function inclusion check. A grid
/// without a violation while R exceeds r(K,L) is reported inconclusive, never
/// as a verdict.
ComparisonReport comparison_check(const SupportBody2D& K, const SupportBody2D& L, double R,
                                  const SupportBody2D& M, const MeasureSpec& measure,
                                  const std::vector<double>& t_grid);

/// 16 log-spaced points: [2.5, 14] for power/expm1 profiles, [2.5, 40] for the
/// slower-decaying linear profile.
std::vector<double> default_t_grid(const PhiFunction& phi);

}  // namespace mixmeas::asymptotics
