#include "depolar/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace depolar {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed + splitmix64(index)));
}

double Rng::uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform(); // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
}

double Rng::exponential() {
    return -std::log(1.0 - uniform());
}

std::vector<double> Rng::simplex(int size) {
    if (size < 1)
        throw std::invalid_argument("simplex: size must be positive");
    std::vector<double> p(size);
    double sum = 0.0;
    for (double& x : p) {
        x = exponential();
        sum += x;
    }
    for (double& x : p) x /= sum;
    return p;
}

} // namespace depolar
