#include "depolar/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "depolar/tolerances.hpp"

namespace depolar {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kHalfPi = std::numbers::pi / 2.0;

double norm_squared(const std::array<Complex, 4>& a) {
    double acc = 0.0;
    for (const Complex& v : a) acc += std::norm(v);
    return acc;
}

double entropy_term(double p) {
    return p > tol::spectrum_clamp ? -p * std::log2(p) : 0.0;
}

} // namespace

SignalState schmidt_state(double theta) {
    if (!(theta >= 0.0 && theta <= kQuarterPi))
        throw std::invalid_argument("schmidt_state: theta must lie in [0, pi/4]");
    return SignalState{{Complex(std::cos(theta), 0.0), Complex(0.0, 0.0),
                        Complex(0.0, 0.0), Complex(std::sin(theta), 0.0)},
                       theta};
}

SignalState state_from_amplitudes(const std::array<Complex, 4>& amplitudes) {
    if (std::abs(norm_squared(amplitudes) - 1.0) > tol::unit_norm)
        throw std::invalid_argument("state_from_amplitudes: amplitudes are not unit norm");
    return SignalState{amplitudes, std::nullopt};
}

SignalState random_pure_state(Rng& rng) {
    std::array<Complex, 4> a;
    for (Complex& v : a) v = Complex(rng.gaussian(), rng.gaussian());
    const double norm = std::sqrt(norm_squared(a));
    for (Complex& v : a) v /= norm;
    return SignalState{a, std::nullopt};
}

ComplexMatrix random_density_matrix(Rng& rng, int dim) {
    ComplexMatrix g(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g.set(r, c, Complex(rng.gaussian(), rng.gaussian()));
    ComplexMatrix rho = g * dagger(g);
    const double tr = trace(rho).real();
    return (1.0 / tr) * rho;
}

Ensemble make_ensemble(std::vector<std::pair<double, SignalState>> members) {
    double sum = 0.0;
    for (const auto& [p, state] : members) {
        if (!(p >= 0.0))
            throw std::invalid_argument("ensemble: negative probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > tol::probability_sum)
        throw std::invalid_argument("ensemble: probabilities must sum to 1");
    return Ensemble{std::move(members)};
}

Ensemble figure1_ensemble(double theta, double beta) {
    if (!(theta >= 0.0 && theta <= kHalfPi) || !(beta >= 0.0 && beta <= kHalfPi))
        throw std::invalid_argument("figure1_ensemble: angles must lie in [0, pi/2]");
    const double ct = std::cos(theta), st = std::sin(theta);
    const double cb = std::cos(beta), sb = std::sin(beta);
    const Complex zero(0.0, 0.0);
    std::vector<std::pair<double, SignalState>> members;
    members.reserve(4);
    members.emplace_back(0.25, SignalState{{Complex(ct, 0), zero, zero, Complex(st, 0)}, std::nullopt});
    members.emplace_back(0.25, SignalState{{Complex(st, 0), zero, zero, Complex(-ct, 0)}, std::nullopt});
    members.emplace_back(0.25, SignalState{{zero, Complex(cb, 0), Complex(sb, 0), zero}, std::nullopt});
    members.emplace_back(0.25, SignalState{{zero, Complex(sb, 0), Complex(-cb, 0), zero}, std::nullopt});
    return Ensemble{std::move(members)};
}

ComplexMatrix density_matrix(const SignalState& state) {
    ComplexMatrix rho(4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            rho.set(r, c, state.amplitudes[r] * std::conj(state.amplitudes[c]));
    return rho;
}

BlochDecomposition bloch_decompose(const ComplexMatrix& rho) {
    if (rho.dim() != 4)
        throw std::invalid_argument("bloch_decompose: expected a 4x4 matrix");
    if (hermiticity_error(rho) > tol::hermiticity)
        throw std::invalid_argument("bloch_decompose: input is not Hermitian");
    if (std::abs(trace(rho) - Complex(1.0, 0.0)) > tol::trace_unit)
        throw std::invalid_argument("bloch_decompose: trace differs from 1");

    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    auto component = [&](const ComplexMatrix& op) {
        const Complex t = trace(rho * op);
        if (std::abs(t.imag()) > tol::hermiticity)
            throw std::invalid_argument("bloch_decompose: non-real component");
        return t.real();
    };

    BlochDecomposition d;
    for (int k = 0; k < 3; ++k) {
        d.lambda1[k] = component(tensor(sigma(k + 1), id2));
        d.lambda2[k] = component(tensor(id2, sigma(k + 1)));
        for (int l = 0; l < 3; ++l)
            d.chi[k][l] = component(tensor(sigma(k + 1), sigma(l + 1)));
    }
    return d;
}

ComplexMatrix bloch_reconstruct(const BlochDecomposition& d) {
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    ComplexMatrix acc = tensor(id2, id2);
    for (int k = 0; k < 3; ++k) {
        acc = acc + d.lambda1[k] * tensor(sigma(k + 1), id2);
        acc = acc + d.lambda2[k] * tensor(id2, sigma(k + 1));
        for (int l = 0; l < 3; ++l)
            acc = acc + d.chi[k][l] * tensor(sigma(k + 1), sigma(l + 1));
    }
    return 0.25 * acc;
}

SchmidtCoefficients schmidt_decompose(const SignalState& state) {
    const auto& a = state.amplitudes;
    // Singular values of the 2x2 amplitude array M with M[j][k] = <jk|psi>:
    // c1 c2 = |det M| and c1^2 + c2^2 = ||M||_F^2.
    const double t = norm_squared(a);
    const double d = std::abs(a[0] * a[3] - a[1] * a[2]);
    const double plus = std::sqrt(t + 2.0 * d);
    const double minus = std::sqrt(std::max(t - 2.0 * d, 0.0));
    return SchmidtCoefficients{0.5 * (plus + minus), 0.5 * (plus - minus)};
}

double entanglement_entropy(const SignalState& state) {
    const SchmidtCoefficients c = schmidt_decompose(state);
    return entropy_term(c.c1 * c.c1) + entropy_term(c.c2 * c.c2);
}

} // namespace depolar
