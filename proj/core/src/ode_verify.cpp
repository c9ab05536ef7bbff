#include "kinkfac/ode_verify.hpp"

#include <algorithm>
#include <cmath>

#include "kinkfac/error.hpp"

namespace kinkfac {
namespace {

struct TravelingSystem {
  double damping;  // alpha lambda0 / (1 - alpha^2)
  double inertia;  // 1 / (1 - alpha^2)

  PhaseState operator()(const PhaseState& y) const noexcept {
    return {y.df, -damping * y.df - inertia * (y.f - y.f * y.f * y.f)};
  }
};

PhaseState axpy(const PhaseState& y, double h, const PhaseState& k) noexcept {
  return {y.f + h * k.f, y.df + h * k.df};
}

// first index i with the level crossed on [i, i+1], or at i itself
bool first_crossing(const Trajectory& traj, double level, double& tau_out) {
  const auto& v = traj.values;
  if (v.empty()) return false;
  if (v[0].f == level) {
    tau_out = traj.taus[0];
    return true;
  }
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const double d0 = v[i].f - level;
    const double d1 = v[i + 1].f - level;
    if (d1 == 0.0) {
      tau_out = traj.taus[i + 1];
      return true;
    }
    if ((d0 < 0.0) != (d1 < 0.0)) {
      const double w = d0 / (d0 - d1);
      tau_out = traj.taus[i] + w * (traj.taus[i + 1] - traj.taus[i]);
      return true;
    }
  }
  return false;
}

}  // namespace

std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::MonotoneFront: return "monotone-front";
    case Classification::Oscillatory: return "oscillatory";
    case Classification::Diverged: return "diverged";
    case Classification::Unsettled: return "unsettled";
  }
  return "unknown";
}

Trajectory integrate(double alpha, double lambda0, double f0, double fp0,
                     std::pair<double, double> tau_span, double step) {
  const double denom = 1.0 - alpha * alpha;
  if (denom == 0.0) throw Error(ErrorCode::SingularFrame, "singular frame: |alpha| = 1");
  if (!(step > 0.0)) throw Error(ErrorCode::Range, "integrate: step must be positive");
  const double length = tau_span.second - tau_span.first;
  if (!(length > 0.0)) throw Error(ErrorCode::Range, "integrate: empty tau span");

  const TravelingSystem rhs{alpha * lambda0 / denom, 1.0 / denom};
  const auto n = static_cast<std::size_t>(std::llround(length / step));

  Trajectory traj;
  traj.alpha = alpha;
  traj.lambda0 = lambda0;
  traj.taus.reserve(n + 1);
  traj.values.reserve(n + 1);
  traj.taus.push_back(tau_span.first);
  traj.values.push_back({f0, fp0});

  PhaseState y{f0, fp0};
  for (std::size_t i = 1; i <= n; ++i) {
    const PhaseState k1 = rhs(y);
    const PhaseState k2 = rhs(axpy(y, 0.5 * step, k1));
    const PhaseState k3 = rhs(axpy(y, 0.5 * step, k2));
    const PhaseState k4 = rhs(axpy(y, step, k3));
    y.f += step / 6.0 * (k1.f + 2.0 * k2.f + 2.0 * k3.f + k4.f);
    y.df += step / 6.0 * (k1.df + 2.0 * k2.df + 2.0 * k3.df + k4.df);
    if (!std::isfinite(y.f) || !std::isfinite(y.df) || std::abs(y.f) > kDivergenceBound) {
      traj.diverged = true;
      break;
    }
    traj.taus.push_back(tau_span.first + static_cast<double>(i) * step);
    traj.values.push_back(y);
  }
  return traj;
}

double compare_to_kink(const Trajectory& traj, const KinkSolution& kink) {
  if (traj.diverged) throw Error(ErrorCode::NoFront, "compare_to_kink: trajectory diverged");
  double center = 0.0;
  if (!first_crossing(traj, 0.5 * kink.r_target, center)) {
    throw Error(ErrorCode::NoFront, "no front: trajectory never crosses r_target/2");
  }
  KinkSolution aligned = kink;
  aligned.tau0 = center;
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.values.size(); ++i) {
    worst = std::max(worst, std::abs(traj.values[i].f - kink_eval(aligned, traj.taus[i]).f));
  }
  return worst;
}

Classification classify(const Trajectory& traj) {
  if (traj.diverged) return Classification::Diverged;
  const auto& v = traj.values;
  if (v.empty()) return Classification::Unsettled;

  int sign_changes = 0;
  int last_sign = 0;
  for (std::size_t i = v.size() / 10; i < v.size(); ++i) {
    const int s = (v[i].df > 0.0) - (v[i].df < 0.0);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) ++sign_changes;
    last_sign = s;
  }
  if (sign_changes >= 2) return Classification::Oscillatory;

  const double f_end = v.back().f;
  if (sign_changes == 0 && std::abs(f_end - f_end * f_end * f_end) < 1e-6) {
    return Classification::MonotoneFront;
  }
  return Classification::Unsettled;
}

}  // namespace kinkfac
