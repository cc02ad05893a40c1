#include "depolar/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "depolar/hermitian_eigen.hpp"
#include "depolar/info.hpp"
#include "depolar/optimize.hpp"
#include "depolar/states.hpp"

namespace depolar {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

} // namespace

double shrink_law_max_error(const KrausChannel& channel, double claimed_eta) {
    double worst = 0.0;
    for (int l = 1; l <= 3; ++l) {
        const ComplexMatrix image = apply_to_operator(channel, sigma(l));
        worst = std::max(worst, max_abs_diff(image, claimed_eta * sigma(l)));
    }
    return worst;
}

double two_qubit_shrink_max_error(const KrausChannel& channel, double claimed_eta,
                                  int samples, std::uint64_t seed) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
        const ComplexMatrix rho = random_density_matrix(rng, 4);
        const BlochDecomposition in = bloch_decompose(rho);
        const BlochDecomposition out = bloch_decompose(apply_n(channel, rho, 2));
        for (int k = 0; k < 3; ++k) {
            worst = std::max(worst, std::abs(out.lambda1[k] - claimed_eta * in.lambda1[k]));
            worst = std::max(worst, std::abs(out.lambda2[k] - claimed_eta * in.lambda2[k]));
            for (int l = 0; l < 3; ++l)
                worst = std::max(worst, std::abs(out.chi[k][l] -
                                                 claimed_eta * claimed_eta * in.chi[k][l]));
        }
    }
    return worst;
}

double spectrum_oracle_max_error(int eta_points, int theta_points) {
    double worst = 0.0;
    for (int a = 0; a < eta_points; ++a) {
        const double eta = static_cast<double>(a) / (eta_points - 1);
        const KrausChannel channel = depolarising(eta);
        for (int b = 0; b < theta_points; ++b) {
            const double theta = kQuarterPi * (static_cast<double>(b) / (theta_points - 1));
            const ComplexMatrix out =
                apply_n(channel, density_matrix(schmidt_state(theta)), 2);
            const SpectrumResult numeric = hermitian_eigenvalues(out);
            const std::array<double, 4> closed = output_spectrum_closed_form(eta, theta);
            for (int j = 0; j < 4; ++j)
                worst = std::max(worst, std::abs(numeric.eigenvalues[j] - closed[j]));
        }
    }
    return worst;
}

double stationarity_max_residual(const std::vector<double>& etas) {
    double worst = 0.0;
    for (double eta : etas) {
        worst = std::max(worst, std::abs(stationarity_residual(eta, 0.0)));
        worst = std::max(worst, std::abs(stationarity_residual(eta, kQuarterPi)));
    }
    return worst;
}

double stationarity_max_derivative(const std::vector<double>& etas) {
    const double h = 1e-5;
    double worst = 0.0;
    for (double eta : etas) {
        for (double theta : {0.0, kQuarterPi}) {
            const double d = (per_state_output_entropy(eta, theta + h) -
                              per_state_output_entropy(eta, theta - h)) /
                             (2.0 * h);
            worst = std::max(worst, std::abs(d));
        }
    }
    return worst;
}

double closed_form_equality_max_error(int eta_points) {
    double worst = 0.0;
    for (int a = 0; a < eta_points; ++a) {
        const double eta = static_cast<double>(a) / (eta_points - 1);
        const double pipeline =
            mutual_information(depolarising(eta), figure1_ensemble(0.0, 0.0))
                .mutual_information;
        worst = std::max(worst, std::abs(pipeline - i2_max(eta)));
    }
    return worst;
}

std::vector<CheckResult> run_verification_suite() {
    const std::vector<double> etas{0.25, 0.5, 0.75, 0.9};
    std::vector<CheckResult> results;

    auto add = [&](std::string name, double worst, double tolerance) {
        results.push_back(CheckResult{std::move(name), worst, tolerance,
                                      worst <= tolerance});
    };

    double shrink_worst = 0.0;
    double shrink2_worst = 0.0;
    for (double eta : etas) {
        const KrausChannel channel = depolarising(eta);
        shrink_worst = std::max(shrink_worst, shrink_law_max_error(channel, eta));
        shrink2_worst = std::max(shrink2_worst,
                                 two_qubit_shrink_max_error(channel, eta, 25, 20201));
    }
    add("pauli-shrink-law", shrink_worst, 1e-12);
    add("two-qubit-shrink-law", shrink2_worst, 1e-12);
    add("output-spectrum-closed-form", spectrum_oracle_max_error(17, 9), 1e-10);
    add("stationarity-residual", stationarity_max_residual({0.3, 0.5, 0.8}), 1e-12);
    add("stationarity-derivative", stationarity_max_derivative({0.3, 0.5, 0.8}), 1e-6);
    add("maximal-i2-closed-form", closed_form_equality_max_error(101), 1e-9);
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

} // namespace depolar
