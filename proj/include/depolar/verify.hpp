#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "depolar/channel.hpp"

namespace depolar {

struct CheckResult {
    std::string name;
    double worst;     // largest observed error
    double tolerance;
    bool passed;
};

// Measurement helpers behind the verification suite. Each returns the worst
// observed error. `claimed_eta` is compared against the channel's actual
// behaviour, so tests can demonstrate that the checks fail on corrupted
// parameters.

/// Pauli shrink: max |Phi(sigma_l) - claimed_eta * sigma_l| over l = x,y,z.
double shrink_law_max_error(const KrausChannel& channel, double claimed_eta);

/// Two-qubit shrink over random density matrices: local vectors must scale
/// by claimed_eta and the correlation tensor by claimed_eta^2.
double two_qubit_shrink_max_error(const KrausChannel& channel, double claimed_eta,
                                  int samples, std::uint64_t seed);

/// Numeric spectrum of the channel output vs the closed form, over an
/// (eta, theta) grid.
double spectrum_oracle_max_error(int eta_points, int theta_points);

/// Stationarity residual at theta = 0 and pi/4 over an eta grid.
double stationarity_max_residual(const std::vector<double>& etas);

/// Central finite difference of the per-state output entropy at the two
/// stationary angles (step 1e-5).
double stationarity_max_derivative(const std::vector<double>& etas);

/// Full-pipeline I2 of four orthogonal product states vs the closed-form
/// maximum, over a uniform eta grid.
double closed_form_equality_max_error(int eta_points);

/// Runs the fixed-seed cross-oracle suite; one entry per check.
std::vector<CheckResult> run_verification_suite();

bool all_passed(const std::vector<CheckResult>& results);

} // namespace depolar
