#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "depolar/complex_matrix.hpp"
#include "depolar/rng.hpp"

namespace depolar {

/// A pure two-qubit state. Amplitudes follow the basis ordering
/// {|00>, |01>, |10>, |11>}; `theta` is set when the state was built in
/// Schmidt form cos(theta)|00> + sin(theta)|11>.
struct SignalState {
    std::array<Complex, 4> amplitudes;
    std::optional<double> theta;
};

/// Schmidt-form state for theta in [0, pi/4].
SignalState schmidt_state(double theta);

/// Arbitrary pure state; amplitudes must have unit norm.
SignalState state_from_amplitudes(const std::array<Complex, 4>& amplitudes);

/// Haar-like random pure state: four complex Gaussian amplitudes,
/// normalised.
SignalState random_pure_state(Rng& rng);

/// Random mixed state G G^dagger / tr(G G^dagger) with Gaussian G.
ComplexMatrix random_density_matrix(Rng& rng, int dim);

struct Ensemble {
    std::vector<std::pair<double, SignalState>> members;
};

/// Validates probabilities (non-negative, summing to 1).
Ensemble make_ensemble(std::vector<std::pair<double, SignalState>> members);

/// Four equally probable, pairwise orthogonal states
///   cos(theta)|00> + sin(theta)|11>,  sin(theta)|00> - cos(theta)|11>,
///   cos(beta)|01> + sin(beta)|10>,    sin(beta)|01> - cos(beta)|10>
/// for angles in [0, pi/2].
Ensemble figure1_ensemble(double theta, double beta);

/// Rank-1 projector |psi><psi|.
ComplexMatrix density_matrix(const SignalState& state);

/// Expansion of a two-qubit density matrix over tensor products of identity
/// and Pauli operators: local vectors lambda1, lambda2 and the correlation
/// tensor chi (chi[k][l] multiplies sigma_k x sigma_l).
struct BlochDecomposition {
    std::array<double, 3> lambda1;
    std::array<double, 3> lambda2;
    std::array<std::array<double, 3>, 3> chi;
};

BlochDecomposition bloch_decompose(const ComplexMatrix& rho);
ComplexMatrix bloch_reconstruct(const BlochDecomposition& d);

struct SchmidtCoefficients {
    double c1; // c1 >= c2 >= 0, c1^2 + c2^2 = 1
    double c2;
};

/// Closed-form 2x2 singular values of the amplitude array.
SchmidtCoefficients schmidt_decompose(const SignalState& state);

/// Binary entropy (base 2) of the Schmidt weights; 0 for product states,
/// 1 bit for maximally entangled ones.
double entanglement_entropy(const SignalState& state);

} // namespace depolar
