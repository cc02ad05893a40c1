// Compares the OpenMP grid/sampler kernels against their serial reference
// implementations and reports wall times. The outputs must agree exactly:
// every cell is computed independently and merged by index.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "depolar/figures.hpp"
#include "depolar/optimize.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
    const auto t0 = clock_type::now();
    f();
    const auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif

    const double eta = 0.8;
    const int grid = 49;

    std::vector<depolar::Fig1Row> serial_rows, parallel_rows;
    const double t_serial = time_ms([&] { serial_rows = depolar::fig1_grid_serial(eta, grid); });
    const double t_parallel = time_ms([&] { parallel_rows = depolar::fig1_grid(eta, grid); });
    double worst = 0.0;
    for (std::size_t i = 0; i < serial_rows.size(); ++i)
        worst = std::max(worst, std::abs(serial_rows[i].i2 - parallel_rows[i].i2));
    std::printf("fig1 grid %dx%d   serial %8.1f ms   parallel %8.1f ms   speedup %.2fx   max diff %.1e\n",
                grid, grid, t_serial, t_parallel, t_serial / t_parallel, worst);

    const int count = 512;
    const int size = 6;
    std::vector<depolar::SampleRecord> serial_s, parallel_s;
    const double s_serial =
        time_ms([&] { serial_s = depolar::sample_random_ensembles_serial(eta, count, size, 42); });
    const double s_parallel =
        time_ms([&] { parallel_s = depolar::sample_random_ensembles(eta, count, size, 42); });
    worst = 0.0;
    for (int i = 0; i < count; ++i)
        worst = std::max(worst, std::abs(serial_s[i].mutual_information -
                                         parallel_s[i].mutual_information));
    std::printf("sampler %d x %d    serial %8.1f ms   parallel %8.1f ms   speedup %.2fx   max diff %.1e\n",
                count, size, s_serial, s_parallel, s_serial / s_parallel, worst);
    return 0;
}
