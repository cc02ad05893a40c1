#include "depolar/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "depolar/tolerances.hpp"

namespace depolar {

namespace {

constexpr int kMaxSweeps = 50;

// Plain symmetric storage for the 2n x 2n embedding.
struct RealSym {
    int n;
    std::vector<double> a; // row-major
    double& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    double at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
};

double offdiag_norm(const RealSym& s) {
    double acc = 0.0;
    for (int p = 0; p < s.n; ++p)
        for (int q = p + 1; q < s.n; ++q) acc += s.at(p, q) * s.at(p, q);
    return std::sqrt(2.0 * acc);
}

double frobenius_norm(const RealSym& s) {
    double acc = 0.0;
    for (double v : s.a) acc += v * v;
    return std::sqrt(acc);
}

// One Jacobi rotation in the (p,q) plane, annihilating s[p][q].
// V accumulates the eigenvector matrix (V <- V J).
void rotate(RealSym& s, std::vector<double>& v, int p, int q) {
    const int n = s.n;
    const double apq = s.at(p, q);
    if (apq == 0.0) return;
    const double tau = (s.at(q, q) - s.at(p, p)) / (2.0 * apq);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double sn = t * c;

    const double app = s.at(p, p);
    const double aqq = s.at(q, q);
    s.at(p, p) = app - t * apq;
    s.at(q, q) = aqq + t * apq;
    s.at(p, q) = 0.0;
    s.at(q, p) = 0.0;
    for (int i = 0; i < n; ++i) {
        if (i == p || i == q) continue;
        const double aip = s.at(i, p);
        const double aiq = s.at(i, q);
        s.at(i, p) = c * aip - sn * aiq;
        s.at(p, i) = s.at(i, p);
        s.at(i, q) = sn * aip + c * aiq;
        s.at(q, i) = s.at(i, q);
    }
    for (int i = 0; i < n; ++i) {
        const double vip = v[static_cast<std::size_t>(i) * n + p];
        const double viq = v[static_cast<std::size_t>(i) * n + q];
        v[static_cast<std::size_t>(i) * n + p] = c * vip - sn * viq;
        v[static_cast<std::size_t>(i) * n + q] = sn * vip + c * viq;
    }
}

} // namespace

SpectrumResult hermitian_eigenvalues(const ComplexMatrix& m) {
    if (hermiticity_error(m) > tol::hermiticity)
        throw std::invalid_argument("hermitian_eigenvalues: input is not Hermitian");

    const int n = m.dim();
    const int N = 2 * n;
    RealSym s{N, std::vector<double>(static_cast<std::size_t>(N) * N, 0.0)};
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const double re = m(r, c).real();
            const double im = m(r, c).imag();
            s.at(r, c) = re;
            s.at(r + n, c + n) = re;
            s.at(r, c + n) = -im;
            s.at(r + n, c) = im;
        }
    }
    std::vector<double> v(static_cast<std::size_t>(N) * N, 0.0);
    for (int i = 0; i < N; ++i) v[static_cast<std::size_t>(i) * N + i] = 1.0;

    const double scale = std::max(frobenius_norm(s), 1e-300);
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_norm(s) <= 1e-14 * scale) {
            converged = true;
            break;
        }
        for (int p = 0; p < N - 1; ++p)
            for (int q = p + 1; q < N; ++q) rotate(s, v, p, q);
    }
    if (!converged && offdiag_norm(s) > 1e-14 * scale)
        throw std::runtime_error("hermitian_eigenvalues: no convergence within 50 sweeps");

    // Sort the doubled spectrum descending, keeping eigenvector columns.
    std::vector<int> order(N);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return s.at(i, i) > s.at(j, j); });

    SpectrumResult result;
    result.eigenvalues.reserve(n);
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        const int ia = order[2 * j];
        const int ib = order[2 * j + 1];
        const double lambda = 0.5 * (s.at(ia, ia) + s.at(ib, ib));
        result.eigenvalues.push_back(lambda);

        // Complex eigenvector from the embedding column (x; y) -> x + iy.
        std::vector<Complex> vec(n);
        double norm = 0.0;
        for (int k = 0; k < n; ++k) {
            vec[k] = Complex(v[static_cast<std::size_t>(k) * N + ia],
                             v[static_cast<std::size_t>(k + n) * N + ia]);
            norm += std::norm(vec[k]);
        }
        norm = std::sqrt(norm);
        for (int k = 0; k < n; ++k) {
            const Complex vk = vec[k] / norm;
            Complex mv(0.0, 0.0);
            for (int l = 0; l < n; ++l) mv += m(k, l) * (vec[l] / norm);
            worst = std::max(worst, std::abs(mv - lambda * vk));
        }
    }
    result.residual = worst;
    return result;
}

double min_eigenvalue(const ComplexMatrix& m) {
    return hermitian_eigenvalues(m).eigenvalues.back();
}

void validate_density_matrix(const ComplexMatrix& rho) {
    if (hermiticity_error(rho) > tol::hermiticity)
        throw std::invalid_argument("density matrix: not Hermitian");
    const Complex tr = trace(rho);
    if (std::abs(tr - Complex(1.0, 0.0)) > tol::trace_unit)
        throw std::invalid_argument("density matrix: trace differs from 1");
    if (min_eigenvalue(rho) < tol::psd_floor)
        throw std::invalid_argument("density matrix: negative eigenvalue");
}

} // namespace depolar
