#include "depolar/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace depolar {

namespace {

void check_dim(int dim) {
    if (dim <= 0)
        throw std::invalid_argument("ComplexMatrix: dimension must be positive");
}

void check_finite(const Complex& v) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::invalid_argument("ComplexMatrix: non-finite entry");
}

} // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    check_dim(dim);
    entries_.assign(static_cast<std::size_t>(dim) * dim, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    check_dim(dim);
    if (entries_.size() != static_cast<std::size_t>(dim) * dim)
        throw std::invalid_argument("ComplexMatrix: entry count does not match dimension");
    for (const Complex& v : entries_) check_finite(v);
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.set(i, i, Complex(1.0, 0.0));
    return m;
}

void ComplexMatrix::set(int row, int col, const Complex& value) {
    check_finite(value);
    entries_[static_cast<std::size_t>(row) * dim_ + col] = value;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("matrix add: dimension mismatch");
    ComplexMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out.set(r, c, a(r, c) + b(r, c));
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("matrix subtract: dimension mismatch");
    ComplexMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out.set(r, c, a(r, c) - b(r, c));
    return out;
}

ComplexMatrix operator*(const Complex& scalar, const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out.set(r, c, scalar * a(r, c));
    return out;
}

ComplexMatrix operator*(double scalar, const ComplexMatrix& a) {
    return Complex(scalar, 0.0) * a;
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("mat_mul: dimension mismatch");
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            Complex acc(0.0, 0.0);
            for (int k = 0; k < n; ++k) acc += a(r, k) * b(k, c);
            out.set(r, c, acc);
        }
    }
    return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int na = a.dim();
    const int nb = b.dim();
    ComplexMatrix out(na * nb);
    for (int ra = 0; ra < na; ++ra)
        for (int ca = 0; ca < na; ++ca)
            for (int rb = 0; rb < nb; ++rb)
                for (int cb = 0; cb < nb; ++cb)
                    out.set(ra * nb + rb, ca * nb + cb, a(ra, ca) * b(rb, cb));
    return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out.set(r, c, std::conj(a(c, r)));
    return out;
}

Complex trace(const ComplexMatrix& a) {
    Complex acc(0.0, 0.0);
    for (int i = 0; i < a.dim(); ++i) acc += a(i, i);
    return acc;
}

ComplexMatrix partial_trace(const ComplexMatrix& a, int subsystem) {
    if (a.dim() != 4)
        throw std::invalid_argument("partial_trace: expected a two-qubit (4x4) matrix");
    if (subsystem != 1 && subsystem != 2)
        throw std::invalid_argument("partial_trace: subsystem must be 1 or 2");
    ComplexMatrix out(2);
    // Row index 2a+b addresses |ab>, qubit 1 in the high bit.
    if (subsystem == 1) {
        for (int b = 0; b < 2; ++b)
            for (int bp = 0; bp < 2; ++bp)
                out.set(b, bp, a(0 + b, 0 + bp) + a(2 + b, 2 + bp));
    } else {
        for (int q = 0; q < 2; ++q)
            for (int qp = 0; qp < 2; ++qp)
                out.set(q, qp, a(2 * q + 0, 2 * qp + 0) + a(2 * q + 1, 2 * qp + 1));
    }
    return out;
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const Complex& v : a.entries()) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return max_abs(a - b);
}

double hermiticity_error(const ComplexMatrix& a) {
    double m = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c)
            m = std::max(m, std::abs(a(r, c) - std::conj(a(c, r))));
    return m;
}

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m(2, {Complex(0, 0), Complex(1, 0),
                                     Complex(1, 0), Complex(0, 0)});
    return m;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m(2, {Complex(0, 0), Complex(0, -1),
                                     Complex(0, 1), Complex(0, 0)});
    return m;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m(2, {Complex(1, 0), Complex(0, 0),
                                     Complex(0, 0), Complex(-1, 0)});
    return m;
}

const ComplexMatrix& sigma(int k) {
    static const ComplexMatrix id = ComplexMatrix::identity(2);
    switch (k) {
    case 0: return id;
    case 1: return pauli_x();
    case 2: return pauli_y();
    case 3: return pauli_z();
    default: throw std::invalid_argument("sigma: index must be 0..3");
    }
}

} // namespace depolar
