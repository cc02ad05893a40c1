#pragma once

#include <array>
#include <vector>

#include "depolar/channel.hpp"
#include "depolar/states.hpp"

namespace depolar {

struct MutualInformationReport {
    double total_entropy;      // S(rho) of the average output, bits
    double conditional_sum;    // sum_i p_i S(rho_i), bits
    double mutual_information; // total_entropy - conditional_sum
    std::vector<double> per_state_entropies;
};

/// -sum_j lambda_j log2(lambda_j) over the clamped spectrum of a valid
/// density matrix; 0*log(0) is 0.
double von_neumann_entropy(const ComplexMatrix& rho);

/// Holevo mutual information of a two-qubit ensemble sent through two uses
/// of the channel. Every member goes through the full Kraus pipeline; the
/// closed forms below are never used here, so they stay valid as
/// independent cross-checks.
MutualInformationReport mutual_information(const KrausChannel& channel,
                                           const Ensemble& ensemble);

/// Output spectrum of the channel acting on cos(theta)|00> + sin(theta)|11>:
///   (1 - eta^2)/4 twice and
///   (1 + eta^2 +/- 2 eta sqrt(cos^2 2theta + eta^2 sin^2 2theta))/4,
/// returned sorted descending.
std::array<double, 4> output_spectrum_closed_form(double eta, double theta);

/// Maximal two-use mutual information,
/// (1+eta) log2(1+eta) + (1-eta) log2(1-eta).
double i2_max(double eta);

/// Maximal mutual information per single channel use; half of i2_max.
double one_shot_capacity(double eta);

} // namespace depolar
