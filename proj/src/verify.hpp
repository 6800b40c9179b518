#pragma once

#include "asymptotics.hpp"

#include <string>
#include <vector>

namespace mixmeas::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;  // worst relative (or stated) error seen
    double bound = 0.0;  // the bound it was checked against
};

/// The built-in (A, B, C, measure) test matrix. fd_first pairs (K = A, M = B)
/// against mixed_first; fd_second uses the full triple.
struct MatrixConfig {
    std::string name;
    SupportBody2D A, B, C;
    MeasureSpec measure;
};

const std::vector<MatrixConfig>& builtin_matrix();

/// Definitional fd_first vs mixed_first at t in {1,2,4}, bound 1e-4.
std::vector<CheckResult> check_fd_first();
/// Definitional fd_second vs mixed_second at t in {1.5,2,3}, bound 1e-3.
std::vector<CheckResult> check_fd_second();
/// d/dx mu(xK) = mu(xK; K), outer derivative by central differences, 1e-5.
std::vector<CheckResult> check_derivative_identity();
/// Steiner polynomial reproduced by the debug Lebesgue masses.
std::vector<CheckResult> check_steiner();
/// Envelope-rule gauge gradient vs central differences, 1e-7.
std::vector<CheckResult> check_gauge_gradient();
/// Disk/Gaussian closed forms reproduced to 1e-8.
std::vector<CheckResult> check_exact_calibration();

/// Everything above, in order.
std::vector<CheckResult> run_all();

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace mixmeas::verify
