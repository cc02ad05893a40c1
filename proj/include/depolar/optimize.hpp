#pragma once

#include <cstdint>
#include <vector>

#include "depolar/info.hpp"

namespace depolar {

enum class Classification { maximum, minimum, interior_non_stationary };

struct StationarityReport {
    double theta;
    double residual; // value of the stationarity condition left-hand side
    Classification classification;
};

/// Left-hand side of the per-state entropy stationarity condition
/// (base-2 logs):
///   cos(2t) sin(2t) [log(1 + eta^2 + 2 eta R) - log(1 + eta^2 - 2 eta R)]
/// with R = sqrt(cos^2 2t + eta^2 sin^2 2t). Requires eta > 0; the
/// condition degenerates at eta = 0.
double stationarity_residual(double eta, double theta);

/// S(rho(theta)) of the channel output for cos(theta)|00> + sin(theta)|11>,
/// through the full Kraus pipeline. Defined for any real theta (the state
/// stays unit norm), which the finite-difference checks rely on.
double per_state_output_entropy(double eta, double theta);

/// Mutual information of the symmetric four-state family at angle theta.
/// Equals 2 - per_state_output_entropy: an orthogonal equiprobable input
/// set keeps the average output maximally mixed. Used for extremum
/// classification; cross-checked against the full pipeline in tests.
double symmetric_family_i2(double eta, double theta);

struct ThetaScanPoint {
    double theta;
    double i2;
};

/// I2 of figure1_ensemble(theta, theta) on a uniform theta grid over
/// [0, pi/4], endpoints included. The plain version runs the grid cells in
/// parallel; the _serial one is the reference implementation and must
/// produce identical results.
std::vector<ThetaScanPoint> scan_theta(double eta, int points);
std::vector<ThetaScanPoint> scan_theta_serial(double eta, int points);

struct ExtremaResult {
    StationarityReport maximum; // of I2, at theta = 0
    StationarityReport minimum; // of I2, at theta = pi/4
};

/// Golden-section refinement of the best and worst cells of a coarse theta
/// scan, on the per-state entropy curve, to |theta - theta*| <= 1e-8.
/// Boundary extrema are accepted. Requires 0 < eta < 1.
ExtremaResult locate_extrema(double eta);

struct SampleRecord {
    std::uint64_t seed;
    int index;
    int size;
    double mutual_information;
    double max_entanglement; // largest member entanglement entropy, bits
};

/// Draws `count` ensembles of `size` random pure two-qubit states with
/// probabilities uniform on the simplex and evaluates I2 for each.
/// Record i is derived from the stream (seed, i), so results are identical
/// for the serial reference and any thread count.
std::vector<SampleRecord> sample_random_ensembles(double eta, int count, int size,
                                                  std::uint64_t seed);
std::vector<SampleRecord> sample_random_ensembles_serial(double eta, int count, int size,
                                                         std::uint64_t seed);

} // namespace depolar
