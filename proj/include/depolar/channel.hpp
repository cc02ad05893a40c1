#pragma once

#include <optional>
#include <string>
#include <vector>

#include "depolar/complex_matrix.hpp"

namespace depolar {

/// A qubit channel given by its action (Kraus) operators A_k with
/// sum_k A_k^dagger A_k = 1l.
struct KrausChannel {
    std::vector<ComplexMatrix> operators;
    std::string label;
    std::optional<double> eta; // set for the depolarising family
};

/// max-norm of sum_k A_k^dagger A_k - 1l.
double completeness_error(const std::vector<ComplexMatrix>& operators);

/// Depolarising channel with shrink factor eta in [0,1]:
/// A_0 = (1/2)sqrt(1+3eta) 1l, A_{x,y,z} = (1/2)sqrt(1-eta) sigma_{x,y,z}.
KrausChannel depolarising(double eta);

/// General Pauli channel with operators sqrt(p_k) sigma_k. The probabilities
/// must be non-negative and sum to 1.
KrausChannel pauli_channel(double p0, double px, double py, double pz);

/// Linear extension of the channel map M -> sum_k A_k M A_k^dagger to an
/// arbitrary single-qubit operator. No density-matrix validation; this is
/// the entry point for checking the Pauli shrink law on traceless input.
ComplexMatrix apply_to_operator(const KrausChannel& channel, const ComplexMatrix& op);

/// Single use of the channel on a valid single-qubit density matrix.
ComplexMatrix apply(const KrausChannel& channel, const ComplexMatrix& state);

/// Memoryless n-fold extension: the sum over all n-tuples of Kraus indices
/// of tensored operators conjugating the state. Implemented as the literal
/// 4^n-term sum; the Bloch shrink shortcut is used only as a test oracle.
ComplexMatrix apply_n(const KrausChannel& channel, const ComplexMatrix& state, int n);

} // namespace depolar
