#include "depolar/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "depolar/hermitian_eigen.hpp"
#include "depolar/tolerances.hpp"

namespace depolar {

double completeness_error(const std::vector<ComplexMatrix>& operators) {
    if (operators.empty())
        throw std::invalid_argument("channel: empty operator list");
    const int dim = operators.front().dim();
    ComplexMatrix acc(dim);
    for (const ComplexMatrix& a : operators) acc = acc + dagger(a) * a;
    return max_abs_diff(acc, ComplexMatrix::identity(dim));
}

namespace {

KrausChannel make_channel(std::vector<ComplexMatrix> operators, std::string label,
                          std::optional<double> eta) {
    if (completeness_error(operators) > tol::completeness)
        throw std::invalid_argument("channel: Kraus operators violate completeness");
    return KrausChannel{std::move(operators), std::move(label), eta};
}

} // namespace

KrausChannel depolarising(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0))
        throw std::invalid_argument("depolarising: eta must lie in [0,1]");
    const double w0 = 0.5 * std::sqrt(1.0 + 3.0 * eta);
    const double wp = 0.5 * std::sqrt(1.0 - eta);
    std::vector<ComplexMatrix> ops{w0 * ComplexMatrix::identity(2), wp * pauli_x(),
                                   wp * pauli_y(), wp * pauli_z()};
    return make_channel(std::move(ops), "depolarising", eta);
}

KrausChannel pauli_channel(double p0, double px, double py, double pz) {
    const double probs[4] = {p0, px, py, pz};
    double sum = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0))
            throw std::invalid_argument("pauli_channel: negative probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > tol::probability_sum)
        throw std::invalid_argument("pauli_channel: probabilities must sum to 1");
    std::vector<ComplexMatrix> ops;
    ops.reserve(4);
    for (int k = 0; k < 4; ++k) ops.push_back(std::sqrt(probs[k]) * sigma(k));
    return make_channel(std::move(ops), "pauli", std::nullopt);
}

ComplexMatrix apply_to_operator(const KrausChannel& channel, const ComplexMatrix& op) {
    if (op.dim() != channel.operators.front().dim())
        throw std::invalid_argument("apply_to_operator: dimension mismatch");
    ComplexMatrix out(op.dim());
    for (const ComplexMatrix& a : channel.operators) out = out + a * op * dagger(a);
    return out;
}

ComplexMatrix apply(const KrausChannel& channel, const ComplexMatrix& state) {
    validate_density_matrix(state);
    return apply_to_operator(channel, state);
}

ComplexMatrix apply_n(const KrausChannel& channel, const ComplexMatrix& state, int n) {
    if (n < 1)
        throw std::invalid_argument("apply_n: n must be positive");
    const int dim = 1 << n;
    if (state.dim() != dim)
        throw std::invalid_argument("apply_n: state dimension must be 2^n");
    validate_density_matrix(state);

    const std::size_t k = channel.operators.size();
    std::size_t tuples = 1;
    for (int i = 0; i < n; ++i) tuples *= k;

    ComplexMatrix out(dim);
    for (std::size_t t = 0; t < tuples; ++t) {
        // Decode the index tuple and build A_{k_1} x ... x A_{k_n}.
        std::size_t rest = t;
        ComplexMatrix op = channel.operators[rest % k];
        rest /= k;
        for (int i = 1; i < n; ++i) {
            op = tensor(op, channel.operators[rest % k]);
            rest /= k;
        }
        out = out + op * state * dagger(op);
    }
    return out;
}

} // namespace depolar
