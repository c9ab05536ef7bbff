#include "kinkfac/pde_sim.hpp"

#include <cmath>
#include <string>

#include "kinkfac/error.hpp"

namespace kinkfac {
namespace {

double cells_exact(const GridConfig& cfg) { return (cfg.x_max - cfg.x_min) / cfg.dx; }

double potential(double u) noexcept {
  const double u2 = u * u;
  return -0.5 * u2 + 0.25 * u2 * u2;
}

}  // namespace

std::size_t GridConfig::size() const { return static_cast<std::size_t>(std::llround(cells_exact(*this))) + 1; }

std::size_t GridConfig::steps() const { return static_cast<std::size_t>(std::llround(t_max / dt)); }

void GridConfig::validate() const {
  if (!(dx > 0.0) || !(dt > 0.0) || !(x_max > x_min)) {
    throw Error(ErrorCode::Range, "grid: need dx > 0, dt > 0 and x_max > x_min");
  }
  if (dt > 0.5 * dx) throw Error(ErrorCode::Range, "grid: CFL bound dt <= dx/2 violated");
  const double cells = cells_exact(*this);
  if (std::abs(cells - std::round(cells)) > 1e-9 * cells || std::round(cells) < 100.0) {
    throw Error(ErrorCode::Range, "grid: (x_max - x_min)/dx must be an integer >= 100");
  }
  if (!(t_max > 0.0)) throw Error(ErrorCode::Range, "grid: t_max must be positive");
  if (output_every < 1) throw Error(ErrorCode::Range, "grid: output_every must be >= 1");
  if (lambda0 < 0.0) throw Error(ErrorCode::Range, "grid: lambda0 must be >= 0");
}

FieldState init_state(const GridConfig& cfg, const KinkSolution& kink, double alpha) {
  cfg.validate();
  if (kink.tau0 - cfg.x_min < 10.0 || cfg.x_max - kink.tau0 < 10.0) {
    throw Error(ErrorCode::Placement, "front must start at least 10 units from both boundaries");
  }
  const std::size_t n = cfg.size();
  FieldState state;
  state.u_prev.resize(n);
  state.u_curr.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = cfg.x(i);
    state.u_curr[i] = kink_eval(kink, x).f;
    state.u_prev[i] = kink_eval(kink, x + alpha * cfg.dt).f;
  }
  const double left = kink.kappa > 0.0 ? kink.r_target : 0.0;
  const double right = kink.kappa > 0.0 ? 0.0 : kink.r_target;
  state.u_prev.front() = state.u_curr.front() = left;
  state.u_prev.back() = state.u_curr.back() = right;
  return state;
}

FieldState init_flat(const GridConfig& cfg, double value) {
  cfg.validate();
  FieldState state;
  state.u_prev.assign(cfg.size(), value);
  state.u_curr.assign(cfg.size(), value);
  return state;
}

void step_in_place(FieldState& state, const GridConfig& cfg, std::vector<double>& scratch) {
  const std::size_t n = state.u_curr.size();
  const auto& u = state.u_curr;
  const auto& up = state.u_prev;
  scratch.resize(n);

  const double dt2 = cfg.dt * cfg.dt;
  const double inv_dx2 = 1.0 / (cfg.dx * cfg.dx);
  const double half_damp = 0.5 * cfg.lambda0 * cfg.dt;
  const double inv_norm = 1.0 / (1.0 + half_damp);

  bool finite = true;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double lap = (u[i + 1] - 2.0 * u[i] + u[i - 1]) * inv_dx2;
    const double force = lap + u[i] - u[i] * u[i] * u[i];
    const double next = (2.0 * u[i] - up[i] + dt2 * force + half_damp * up[i]) * inv_norm;
    finite = finite && std::isfinite(next);
    scratch[i] = next;
  }
  scratch.front() = u.front();
  scratch.back() = u.back();

  const double t_next = state.t + cfg.dt;
  if (!finite) {
    throw Error(ErrorCode::Instability, "non-finite field value at t = " + std::to_string(t_next));
  }
  state.u_prev.swap(state.u_curr);
  state.u_curr.swap(scratch);
  state.t = t_next;
}

FieldState step(const FieldState& state, const GridConfig& cfg) {
  FieldState next = state;
  std::vector<double> scratch;
  step_in_place(next, cfg, scratch);
  return next;
}

bool find_crossing(const std::vector<double>& u, const GridConfig& cfg, double level, double& x_out) {
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    const double d0 = u[i] - level;
    const double d1 = u[i + 1] - level;
    if (d0 == 0.0) {
      x_out = cfg.x(i);
      return true;
    }
    if ((d0 < 0.0) != (d1 < 0.0) && d1 != 0.0) {
      x_out = cfg.x(i) + cfg.dx * d0 / (d0 - d1);
      return true;
    }
  }
  return false;
}

RunResult run(const GridConfig& cfg, FieldState state, double front_level) {
  cfg.validate();
  RunResult result;
  result.front_level = front_level;

  const auto record = [&](double t) {
    double x = 0.0;
    if (find_crossing(state.u_curr, cfg, front_level, x)) result.crossings.push_back({t, x});
    result.snapshots.push_back({t, state.u_curr});
  };

  record(0.0);
  std::vector<double> scratch;
  const std::size_t steps = cfg.steps();
  for (std::size_t s = 1; s <= steps; ++s) {
    step_in_place(state, cfg, scratch);
    // keep time exact rather than accumulated
    state.t = static_cast<double>(s) * cfg.dt;
    if (s % static_cast<std::size_t>(cfg.output_every) == 0) record(state.t);
  }
  return result;
}

RunResult run(const GridConfig& cfg, const KinkSolution& kink, double alpha) {
  return run(cfg, init_state(cfg, kink, alpha), 0.5 * kink.r_target);
}

std::pair<double, double> default_window(const GridConfig& cfg) noexcept { return {5.0, 0.8 * cfg.t_max}; }

SpeedFit measure_speed(const std::vector<Crossing>& crossings, std::pair<double, double> t_window) {
  SpeedFit fit;
  for (const auto& c : crossings) {
    if (c.t >= t_window.first && c.t <= t_window.second) fit.crossings.push_back(c);
  }
  const std::size_t n = fit.crossings.size();
  if (n < 10) {
    throw Error(ErrorCode::NoFront,
                "no front: " + std::to_string(n) + " crossings in the fit window, need at least 10");
  }

  double t_mean = 0.0;
  double x_mean = 0.0;
  for (const auto& c : fit.crossings) {
    t_mean += c.t;
    x_mean += c.x;
  }
  t_mean /= static_cast<double>(n);
  x_mean /= static_cast<double>(n);

  double stt = 0.0;
  double stx = 0.0;
  for (const auto& c : fit.crossings) {
    stt += (c.t - t_mean) * (c.t - t_mean);
    stx += (c.t - t_mean) * (c.x - x_mean);
  }
  fit.speed = stx / stt;
  fit.intercept = x_mean - fit.speed * t_mean;

  double ssr = 0.0;
  for (const auto& c : fit.crossings) {
    const double r = c.x - (fit.intercept + fit.speed * c.t);
    ssr += r * r;
  }
  fit.rms_residual = std::sqrt(ssr / static_cast<double>(n));
  fit.speed_stderr = std::sqrt(ssr / static_cast<double>(n - 2) / stt);
  return fit;
}

double energy(const FieldState& state, const GridConfig& cfg) {
  const auto& uc = state.u_curr;
  const auto& up = state.u_prev;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < uc.size(); ++i) {
    const double ut0 = (uc[i] - up[i]) / cfg.dt;
    const double ut1 = (uc[i + 1] - up[i + 1]) / cfg.dt;
    const double m0 = 0.5 * (uc[i] + up[i]);
    const double m1 = 0.5 * (uc[i + 1] + up[i + 1]);
    const double ux = (m1 - m0) / cfg.dx;
    total += 0.25 * (ut0 * ut0 + ut1 * ut1) + 0.5 * ux * ux + 0.5 * (potential(m0) + potential(m1));
  }
  return total * cfg.dx;
}

}  // namespace kinkfac
