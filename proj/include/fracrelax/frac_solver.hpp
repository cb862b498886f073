#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracrelax/time_grid.hpp"

namespace fracrelax {

/// Caputo derivative of order alpha of a sampled function at grid node
/// `index`, by the L1 scheme (product integration of the piecewise-linear
/// interpolant). Exact for affine samples. alpha = 1 degenerates to the
/// backward difference. Requires index >= 1 and strictly increasing times.
double caputo_derivative(std::span<const double> times, std::span<const double> values,
                         double alpha, std::size_t index);

double caputo_derivative(const RelaxationTrajectory& traj, double alpha, std::size_t index);

/// Direct time-stepping solution of the fractional relaxation problem
///   D^alpha psi = -psi, psi(0) = 1,
/// via its Volterra form psi(t) = 1 - (1/Gamma(alpha)) int_0^t (t-s)^{alpha-1} psi ds.
/// Implicit product-trapezoidal weights; on uniform grids a small set of
/// starting weights makes the quadrature exact on the t^{alpha k} terms that
/// dominate near zero, restoring second-order convergence despite the kink.
/// At alpha = 1 the weights collapse to the trapezoidal rule. O(N^2) history
/// cost. Grid must start at 0.
RelaxationTrajectory solve_fde(double alpha, const TimeGrid& grid);

/// Discrete residual caputo(psi, alpha, j) + psi_j of a trajectory at every
/// node past the origin (size grid.size() - 1, entry i for node i + 1).
/// Small for any valid trajectory regardless of how it was produced.
std::vector<double> residual_check(const RelaxationTrajectory& traj, double alpha);

} // namespace fracrelax
