#pragma once

#include <vector>

#include "depolar/info.hpp"

namespace depolar {

struct Fig1Row {
    double theta;
    double beta;
    double i2;
};

/// I2 of figure1_ensemble(theta, beta) on a grid x grid lattice over
/// [0, pi/2]^2; theta is the outer (slower) index, both axes ascending.
/// The plain version fills cells in parallel; _serial is the reference and
/// produces identical rows.
std::vector<Fig1Row> fig1_grid(double eta, int grid);
std::vector<Fig1Row> fig1_grid_serial(double eta, int grid);

struct Fig2Row {
    double eta;
    double i2_product; // figure1_ensemble(0, 0)
    double i2_bell;    // figure1_ensemble(pi/4, pi/4)
};

/// Both curves on a uniform eta grid over [0, 1], endpoints included.
std::vector<Fig2Row> fig2_sweep(int steps);
std::vector<Fig2Row> fig2_sweep_serial(int steps);

} // namespace depolar
