#pragma once

#include <complex>
#include <vector>

namespace depolar {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Entries are validated to be
/// finite on every write; NaN/Inf never enters a matrix.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim);
    ComplexMatrix(int dim, std::vector<Complex> entries);

    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    const Complex& operator()(int row, int col) const {
        return entries_[static_cast<std::size_t>(row) * dim_ + col];
    }
    void set(int row, int col, const Complex& value);

    const std::vector<Complex>& entries() const { return entries_; }

private:
    int dim_;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const Complex& scalar, const ComplexMatrix& a);
ComplexMatrix operator*(double scalar, const ComplexMatrix& a);

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    return mat_mul(a, b);
}

/// Kronecker product. The first factor acts on qubit 1, i.e. the leftmost
/// slot in the basis ordering {|00>,|01>,|10>,|11>}.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);

/// Traces out one qubit of a two-qubit operator. `subsystem` is the qubit
/// that is removed (1 or 2); the result acts on the remaining qubit.
ComplexMatrix partial_trace(const ComplexMatrix& a, int subsystem);

/// Largest entry modulus.
double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_{j,k} |M[j][k] - conj(M[k][j])|
double hermiticity_error(const ComplexMatrix& a);

// Pauli matrices; sigma(0) is the 2x2 identity.
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& sigma(int k);

} // namespace depolar
