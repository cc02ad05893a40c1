#pragma once

// Shared numerical tolerances. Keep these in one place: the entropy clamp in
// particular must agree between the eigensolver and every entropy consumer.
namespace depolar::tol {

inline constexpr double hermiticity = 1e-12;
inline constexpr double trace_unit = 1e-12;
inline constexpr double psd_floor = -1e-10;   // minimum admissible eigenvalue
inline constexpr double completeness = 1e-12; // Kraus sum vs identity
inline constexpr double unit_norm = 1e-12;
inline constexpr double probability_sum = 1e-12;

// Eigenvalues with |lambda| <= spectrum_clamp are treated as exact zeros
// before any 0*log(0) evaluation.
inline constexpr double spectrum_clamp = 1e-12;

} // namespace depolar::tol
