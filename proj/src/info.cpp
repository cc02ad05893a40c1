#include "depolar/info.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "depolar/hermitian_eigen.hpp"
#include "depolar/tolerances.hpp"

namespace depolar {

namespace {

double entropy_of_spectrum(const std::vector<double>& eigenvalues) {
    double acc = 0.0;
    for (double lambda : eigenvalues)
        if (lambda > tol::spectrum_clamp) acc -= lambda * std::log2(lambda);
    return acc;
}

double xlog2x(double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

} // namespace

double von_neumann_entropy(const ComplexMatrix& rho) {
    validate_density_matrix(rho);
    return entropy_of_spectrum(hermitian_eigenvalues(rho).eigenvalues);
}

MutualInformationReport mutual_information(const KrausChannel& channel,
                                           const Ensemble& ensemble) {
    if (ensemble.members.empty())
        throw std::invalid_argument("mutual_information: empty ensemble");
    ComplexMatrix average(4);
    MutualInformationReport report{};
    report.per_state_entropies.reserve(ensemble.members.size());
    for (const auto& [p, state] : ensemble.members) {
        const ComplexMatrix out = apply_n(channel, density_matrix(state), 2);
        const double s = von_neumann_entropy(out);
        report.per_state_entropies.push_back(s);
        report.conditional_sum += p * s;
        average = average + p * out;
    }
    report.total_entropy = von_neumann_entropy(average);
    report.mutual_information = report.total_entropy - report.conditional_sum;
    return report;
}

std::array<double, 4> output_spectrum_closed_form(double eta, double theta) {
    if (!(eta >= 0.0 && eta <= 1.0))
        throw std::invalid_argument("output_spectrum_closed_form: eta must lie in [0,1]");
    if (!(theta >= 0.0 && theta <= std::numbers::pi / 4.0))
        throw std::invalid_argument("output_spectrum_closed_form: theta must lie in [0, pi/4]");
    const double c = std::cos(2.0 * theta);
    const double s = std::sin(2.0 * theta);
    const double root = std::sqrt(c * c + eta * eta * s * s);
    std::array<double, 4> alpha{0.25 * (1.0 + eta * eta + 2.0 * eta * root),
                                0.25 * (1.0 - eta * eta),
                                0.25 * (1.0 - eta * eta),
                                0.25 * (1.0 + eta * eta - 2.0 * eta * root)};
    std::sort(alpha.begin(), alpha.end(), std::greater<>());
    return alpha;
}

double i2_max(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0))
        throw std::invalid_argument("i2_max: eta must lie in [0,1]");
    return xlog2x(1.0 + eta) + xlog2x(1.0 - eta);
}

double one_shot_capacity(double eta) {
    return 0.5 * i2_max(eta);
}

} // namespace depolar
