#pragma once

// Finite-difference simulation of u_tt - u_xx + lambda0 u_t - u + u^3 = 0 on
// a bounded interval with Dirichlet values clamped to the kink asymptotics.
//
// Leapfrog in time with the damping term centred:
//   u+ = [2u - u- + dt^2 (D2 u + u - u^3) + (lambda0 dt / 2) u-] / (1 + lambda0 dt / 2)

#include <cstddef>
#include <utility>
#include <vector>

#include "kinkfac/factorizer.hpp"

namespace kinkfac {

struct GridConfig {
  double x_min = -40.0;
  double x_max = 80.0;
  double dx = 0.05;
  double dt = 0.02;
  double t_max = 30.0;
  double lambda0 = 1.0;
  int output_every = 5;

  /// Number of grid points, including both boundary nodes.
  std::size_t size() const;
  double x(std::size_t i) const noexcept { return x_min + dx * static_cast<double>(i); }
  std::size_t steps() const;
  /// Throws Range unless dt <= dx/2, (x_max - x_min)/dx is an integer >= 100,
  /// t_max > 0 and output_every >= 1.
  void validate() const;
};

struct FieldState {
  std::vector<double> u_prev;
  std::vector<double> u_curr;
  double t = 0.0;
};

struct Crossing {
  double t;
  double x;
};

struct SpeedFit {
  std::vector<Crossing> crossings;  // the ones used by the fit
  double speed = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;  // in x units
  double speed_stderr = 0.0;
};

struct Snapshot {
  double t;
  std::vector<double> u;
};

struct RunResult {
  std::vector<Snapshot> snapshots;  // t = 0 and every output_every steps
  std::vector<Crossing> crossings;  // one per snapshot that has a front
  double front_level = 0.0;
};

/// u_curr(x) = kink(x), u_prev(x) = kink(x + alpha dt); the boundary nodes
/// hold the kink's limits. Throws Placement when the front center is closer
/// than 10 to either boundary.
FieldState init_state(const GridConfig& cfg, const KinkSolution& kink, double alpha);

/// Spatially uniform state at rest.
FieldState init_flat(const GridConfig& cfg, double value);

/// One time step. Throws Instability if any value becomes non-finite.
FieldState step(const FieldState& state, const GridConfig& cfg);
void step_in_place(FieldState& state, const GridConfig& cfg, std::vector<double>& scratch);

/// First x (scanning from x_min) where u crosses level, linearly
/// interpolated; false when there is none.
bool find_crossing(const std::vector<double>& u, const GridConfig& cfg, double level, double& x_out);

/// Advances to t_max, snapshotting every output_every steps and recording
/// the crossing of front_level in each snapshot.
RunResult run(const GridConfig& cfg, FieldState state, double front_level);
RunResult run(const GridConfig& cfg, const KinkSolution& kink, double alpha);

/// Default fit window [5, 0.8 t_max].
std::pair<double, double> default_window(const GridConfig& cfg) noexcept;

/// Least-squares x = speed t + intercept over crossings inside t_window.
/// Throws NoFront with fewer than 10 crossings in the window.
SpeedFit measure_speed(const std::vector<Crossing>& crossings, std::pair<double, double> t_window);

/// sum over cells dx [u_t^2/2 + u_x^2/2 - u^2/2 + u^4/4], with
/// u_t = (u_curr - u_prev)/dt and the remaining terms taken at the
/// average of the two levels.
double energy(const FieldState& state, const GridConfig& cfg);

}  // namespace kinkfac
