#pragma once

// Direct integration of the traveling-frame equation
//   (1 - alpha^2) f'' + alpha lambda0 f' + f - f^3 = 0
// with fixed-step classical RK4, plus comparison and classification helpers.

#include <string_view>
#include <utility>
#include <vector>

#include "kinkfac/factorizer.hpp"

namespace kinkfac {

struct PhaseState {
  double f;
  double df;
};

struct Trajectory {
  double alpha = 0.0;
  double lambda0 = 0.0;
  std::vector<double> taus;  // uniform step, strictly increasing
  std::vector<PhaseState> values;
  bool diverged = false;  // truncated at the first sample with |f| > 1e3
};

inline constexpr double kDivergenceBound = 1e3;

/// Throws SingularFrame when |alpha| == 1, Range on step <= 0 or an empty span.
/// The number of steps is round((span.second - span.first) / step).
Trajectory integrate(double alpha, double lambda0, double f0, double fp0,
                     std::pair<double, double> tau_span, double step);

/// Shifts the kink so its r_target/2 crossing coincides with the first
/// crossing in the trajectory, then returns max |f_traj - f_kink|.
/// Throws NoFront if the trajectory never crosses r_target/2 or diverged.
double compare_to_kink(const Trajectory& traj, const KinkSolution& kink);

enum class Classification {
  MonotoneFront,  // f' keeps one sign and |g(f_end)| < 1e-6
  Oscillatory,    // f' changes sign at least twice
  Diverged,
  Unsettled,      // bounded, but neither of the above within the span
};

std::string_view to_string(Classification c) noexcept;

/// The first 10% of the samples are treated as transient and skipped.
Classification classify(const Trajectory& traj);

}  // namespace kinkfac
