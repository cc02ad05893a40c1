#include "depolar/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "depolar/hermitian_eigen.hpp"

namespace depolar {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kThetaTol = 1e-8;
constexpr int kGoldenBudget = 500;
constexpr int kCoarsePoints = 65;

double theta_grid_point(int j, int points) {
    return kQuarterPi * (static_cast<double>(j) / (points - 1));
}

SignalState extended_schmidt_state(double theta) {
    // Unit norm for any real theta; bypasses the [0, pi/4] constructor so
    // finite differences can step across the domain boundary.
    return state_from_amplitudes({Complex(std::cos(theta), 0.0), Complex(0.0, 0.0),
                                  Complex(0.0, 0.0), Complex(std::sin(theta), 0.0)});
}

double i2_at(const KrausChannel& channel, double theta, double beta) {
    return mutual_information(channel, figure1_ensemble(theta, beta)).mutual_information;
}

// Golden-section minimisation over [a, b]; returns the bracket midpoint
// once the bracket is narrower than 2*kThetaTol.
template <typename F>
double golden_minimize(F f, double a, double b) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int iter = 0; iter < kGoldenBudget; ++iter) {
        if (b - a <= 2.0 * kThetaTol) return 0.5 * (a + b);
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    throw std::runtime_error("locate_extrema: golden-section budget exceeded");
}

Classification classify(double eta, double theta) {
    if (std::abs(stationarity_residual(eta, theta)) > 1e-9)
        return Classification::interior_non_stationary;
    const double h = 1e-4;
    const double d2 = symmetric_family_i2(eta, theta + h) -
                      2.0 * symmetric_family_i2(eta, theta) +
                      symmetric_family_i2(eta, theta - h);
    return d2 < 0.0 ? Classification::maximum : Classification::minimum;
}

StationarityReport make_report(double eta, double theta) {
    return StationarityReport{theta, stationarity_residual(eta, theta), classify(eta, theta)};
}

} // namespace

double stationarity_residual(double eta, double theta) {
    if (!(eta > 0.0 && eta <= 1.0))
        throw std::invalid_argument("stationarity_residual: requires 0 < eta <= 1");
    if (!(theta >= 0.0 && theta <= kQuarterPi))
        throw std::invalid_argument("stationarity_residual: theta must lie in [0, pi/4]");
    const double c = std::cos(2.0 * theta);
    const double s = std::sin(2.0 * theta);
    const double prefactor = c * s;
    if (prefactor == 0.0) return 0.0; // annihilates the (possibly infinite) log difference
    const double root = std::sqrt(c * c + eta * eta * s * s);
    const double plus = 1.0 + eta * eta + 2.0 * eta * root;
    const double minus = std::max(1.0 + eta * eta - 2.0 * eta * root, 0.0);
    return prefactor * (std::log2(plus) - std::log2(minus));
}

double per_state_output_entropy(double eta, double theta) {
    const KrausChannel channel = depolarising(eta);
    const ComplexMatrix out = apply_n(channel, density_matrix(extended_schmidt_state(theta)), 2);
    return von_neumann_entropy(out);
}

double symmetric_family_i2(double eta, double theta) {
    return 2.0 - per_state_output_entropy(eta, theta);
}

std::vector<ThetaScanPoint> scan_theta(double eta, int points) {
    if (points < 2)
        throw std::invalid_argument("scan_theta: need at least 2 points");
    const KrausChannel channel = depolarising(eta);
    std::vector<ThetaScanPoint> out(points);
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j < points; ++j) {
        const double theta = theta_grid_point(j, points);
        out[j] = ThetaScanPoint{theta, i2_at(channel, theta, theta)};
    }
    return out;
}

std::vector<ThetaScanPoint> scan_theta_serial(double eta, int points) {
    if (points < 2)
        throw std::invalid_argument("scan_theta: need at least 2 points");
    const KrausChannel channel = depolarising(eta);
    std::vector<ThetaScanPoint> out(points);
    for (int j = 0; j < points; ++j) {
        const double theta = theta_grid_point(j, points);
        out[j] = ThetaScanPoint{theta, i2_at(channel, theta, theta)};
    }
    return out;
}

ExtremaResult locate_extrema(double eta) {
    if (!(eta > 0.0 && eta < 1.0))
        throw std::invalid_argument("locate_extrema: requires 0 < eta < 1");

    const std::vector<ThetaScanPoint> scan = scan_theta(eta, kCoarsePoints);
    int best = 0, worst = 0;
    for (int j = 1; j < kCoarsePoints; ++j) {
        if (scan[j].i2 > scan[best].i2) best = j;
        if (scan[j].i2 < scan[worst].i2) worst = j;
    }

    auto bracket = [&](int j) {
        const double lo = scan[std::max(j - 1, 0)].theta;
        const double hi = scan[std::min(j + 1, kCoarsePoints - 1)].theta;
        return std::pair<double, double>{lo, hi};
    };
    const KrausChannel channel = depolarising(eta);
    auto entropy = [&](double theta) {
        return von_neumann_entropy(
            apply_n(channel, density_matrix(extended_schmidt_state(theta)), 2));
    };

    // Max of I2 = min of the per-state entropy, and vice versa.
    const auto [alo, ahi] = bracket(best);
    const double theta_max = golden_minimize(entropy, alo, ahi);
    const auto [blo, bhi] = bracket(worst);
    const double theta_min =
        golden_minimize([&](double t) { return -entropy(t); }, blo, bhi);

    return ExtremaResult{make_report(eta, theta_max), make_report(eta, theta_min)};
}

namespace {

SampleRecord sample_one(const KrausChannel& channel, int size, std::uint64_t seed,
                        int index) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(index));
    const std::vector<double> probs = rng.simplex(size);
    std::vector<std::pair<double, SignalState>> members;
    members.reserve(size);
    double max_ent = 0.0;
    for (int s = 0; s < size; ++s) {
        SignalState state = random_pure_state(rng);
        max_ent = std::max(max_ent, entanglement_entropy(state));
        members.emplace_back(probs[s], std::move(state));
    }
    const double i2 =
        mutual_information(channel, make_ensemble(std::move(members))).mutual_information;
    return SampleRecord{seed, index, size, i2, max_ent};
}

void validate_sampler_args(int count, int size) {
    if (count < 1)
        throw std::invalid_argument("sample_random_ensembles: count must be >= 1");
    if (size < 2 || size > 16)
        throw std::invalid_argument("sample_random_ensembles: size must lie in [2, 16]");
}

} // namespace

std::vector<SampleRecord> sample_random_ensembles(double eta, int count, int size,
                                                  std::uint64_t seed) {
    validate_sampler_args(count, size);
    const KrausChannel channel = depolarising(eta);
    std::vector<SampleRecord> out(count);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) out[i] = sample_one(channel, size, seed, i);
    return out;
}

std::vector<SampleRecord> sample_random_ensembles_serial(double eta, int count, int size,
                                                         std::uint64_t seed) {
    validate_sampler_args(count, size);
    const KrausChannel channel = depolarising(eta);
    std::vector<SampleRecord> out(count);
    for (int i = 0; i < count; ++i) out[i] = sample_one(channel, size, seed, i);
    return out;
}

} // namespace depolar
