#include "depolar/figures.hpp"

#include <numbers>
#include <stdexcept>

namespace depolar {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kQuarterPi = std::numbers::pi / 4.0;

double angle_grid_point(int j, int grid) {
    return kHalfPi * (static_cast<double>(j) / (grid - 1));
}

Fig1Row fig1_cell(const KrausChannel& channel, int cell, int grid) {
    const double theta = angle_grid_point(cell / grid, grid);
    const double beta = angle_grid_point(cell % grid, grid);
    const double i2 =
        mutual_information(channel, figure1_ensemble(theta, beta)).mutual_information;
    return Fig1Row{theta, beta, i2};
}

Fig2Row fig2_point(int j, int steps) {
    const double eta = static_cast<double>(j) / (steps - 1);
    const KrausChannel channel = depolarising(eta);
    const double product =
        mutual_information(channel, figure1_ensemble(0.0, 0.0)).mutual_information;
    const double bell =
        mutual_information(channel, figure1_ensemble(kQuarterPi, kQuarterPi)).mutual_information;
    return Fig2Row{eta, product, bell};
}

} // namespace

std::vector<Fig1Row> fig1_grid(double eta, int grid) {
    if (grid < 2)
        throw std::invalid_argument("fig1_grid: grid must be >= 2");
    const KrausChannel channel = depolarising(eta);
    std::vector<Fig1Row> rows(static_cast<std::size_t>(grid) * grid);
    const int cells = grid * grid;
#pragma omp parallel for schedule(dynamic)
    for (int cell = 0; cell < cells; ++cell) rows[cell] = fig1_cell(channel, cell, grid);
    return rows;
}

std::vector<Fig1Row> fig1_grid_serial(double eta, int grid) {
    if (grid < 2)
        throw std::invalid_argument("fig1_grid: grid must be >= 2");
    const KrausChannel channel = depolarising(eta);
    std::vector<Fig1Row> rows(static_cast<std::size_t>(grid) * grid);
    const int cells = grid * grid;
    for (int cell = 0; cell < cells; ++cell) rows[cell] = fig1_cell(channel, cell, grid);
    return rows;
}

std::vector<Fig2Row> fig2_sweep(int steps) {
    if (steps < 2)
        throw std::invalid_argument("fig2_sweep: steps must be >= 2");
    std::vector<Fig2Row> rows(steps);
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j < steps; ++j) rows[j] = fig2_point(j, steps);
    return rows;
}

std::vector<Fig2Row> fig2_sweep_serial(int steps) {
    if (steps < 2)
        throw std::invalid_argument("fig2_sweep: steps must be >= 2");
    std::vector<Fig2Row> rows(steps);
    for (int j = 0; j < steps; ++j) rows[j] = fig2_point(j, steps);
    return rows;
}

} // namespace depolar
