#pragma once

#include <vector>

#include "depolar/complex_matrix.hpp"

namespace depolar {

struct SpectrumResult {
    /// Real eigenvalues, sorted descending.
    std::vector<double> eigenvalues;
    /// max-norm of M*v - lambda*v over the returned eigenpairs.
    double residual = 0.0;
};

/// Full real spectrum of a Hermitian matrix.
///
/// The n x n Hermitian matrix A + iB is embedded as the 2n x 2n real
/// symmetric matrix [[A, -B], [B, A]] and diagonalised with cyclic Jacobi
/// rotations. Every eigenvalue of the input appears twice in the embedding;
/// the doubled spectrum is deduplicated by averaging adjacent sorted pairs.
/// A real eigenvector (x; y) of the embedding maps back to the complex
/// eigenvector x + iy, which is used for the residual diagnostic.
///
/// Throws std::invalid_argument for non-Hermitian input and
/// std::runtime_error if the sweep budget (50) is exhausted.
SpectrumResult hermitian_eigenvalues(const ComplexMatrix& m);

/// Smallest eigenvalue; convenience wrapper for positivity checks.
double min_eigenvalue(const ComplexMatrix& m);

/// Checks Hermiticity, unit trace and positive semidefiniteness against the
/// shared tolerances; throws std::invalid_argument with a reason if violated.
void validate_density_matrix(const ComplexMatrix& rho);

} // namespace depolar
