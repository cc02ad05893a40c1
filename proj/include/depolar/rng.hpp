#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace depolar {

/// Deterministic random source. mt19937_64 has a standard-mandated output
/// sequence and all variate transforms are done by hand, so a given seed
/// produces identical draws on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Independent stream for task `index` of a run seeded with `seed`.
    /// Parallel loops give each iteration its own stream so that results
    /// do not depend on scheduling.
    static Rng stream(std::uint64_t seed, std::uint64_t index);

    /// Uniform on [0, 1).
    double uniform();

    /// Standard normal via Box-Muller.
    double gaussian();

    /// Unit-rate exponential.
    double exponential();

    /// Uniform point on the probability simplex (normalised exponentials).
    std::vector<double> simplex(int size);

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace depolar
