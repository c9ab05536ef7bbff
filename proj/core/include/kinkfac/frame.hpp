#pragma once

// Traveling frame tau = x - alpha t for
//   u_tt - u_xx + lambda0 u_t - u + u^3 = 0,
// which reduces to (1 - alpha^2) f'' + alpha lambda0 f' + f - f^3 = 0.
//
// Two admissibility models are provided:
//  * Paper: beta = alpha lambda0 / (1 - alpha^2) with g = f - f^3 left
//    unscaled, so beta = +-3/sqrt(2) gives
//    alpha^2 +- (sqrt(2)/3) lambda0 alpha - 1 = 0 (branches alpha1..alpha4).
//  * Exact: dividing through by (1 - alpha^2) also scales g, which gives
//    alpha^2 (2 lambda0^2 + 9) = 9 (branches exact_plus, exact_minus).
// Both agree at lambda0 = 0 and for large lambda0. The dynamics follow the
// exact model.

#include <array>
#include <string_view>
#include <vector>

#include "kinkfac/factorizer.hpp"

namespace kinkfac {

struct TravelingFrame {
  double alpha;
  double lambda0;
  double beta;

  static TravelingFrame make(double alpha, double lambda0);
};

enum class Branch { Alpha1, Alpha2, Alpha3, Alpha4, ExactPlus, ExactMinus };
enum class CurveModel { Paper, Exact };

std::string_view to_string(Branch branch) noexcept;
std::string_view to_string(CurveModel model) noexcept;

struct CurvePoint {
  double lambda0;
  double alpha;
  Branch branch;
  double residual;  // defect in the defining equation of the branch

  /// Paper branches can leave |alpha| < 1; no traveling kink exists there.
  bool subluminal() const noexcept;
};

/// alpha lambda0 / (1 - alpha^2); throws SingularFrame when |alpha| == 1.
double beta_of(double alpha, double lambda0);

/// alpha1, alpha2 (upper sign) then alpha3, alpha4 (lower sign), each pair in
/// descending order. Throws Range for lambda0 < 0.
std::array<CurvePoint, 4> paper_alphas(double lambda0);

/// exact_plus, exact_minus found by bracketed root finding on
/// alpha lambda0 = +-(3/sqrt(2)) sqrt(1 - alpha^2). Throws DegenerateBranch
/// for lambda0 <= 0.
std::array<CurvePoint, 2> exact_alphas(double lambda0);

/// Defect |alpha^2 (2 lambda0^2 + 9) - 9| of the exact admissibility curve.
double exact_curve_defect(double alpha, double lambda0) noexcept;

/// Logistic kink 0 <-> -1 with the width of the exact chain at velocity
/// alpha: kappa = s / sqrt(2 (1 - alpha^2)), s = sign(alpha) (+1 at 0).
/// beta is the standard-form coefficient of the exactly scaled equation.
/// Defined for any |alpha| < 1; it is a traveling solution only on the
/// exact curve.
KinkSolution comoving_kink(double alpha, double lambda0);

/// Kink of the traveling-frame equation, built by factorizing
/// g(f) / (1 - alpha^2). Throws NotAdmissible unless
/// exact_curve_defect(alpha, lambda0) <= 1e-9 with lambda0 > 0.
KinkSolution exact_kink(double alpha, double lambda0, double tau0 = 0.0);

/// (1 - alpha^2) f'' + alpha lambda0 f' + f - f^3 along the kink.
double traveling_residual(double alpha, double lambda0, const KinkSolution& kink,
                          double tau) noexcept;

/// n equispaced lambda0 samples per branch, ordered by (branch, lambda0).
/// For the exact model a sample at lambda0 = 0 carries the limit alpha = +-1.
/// Throws Range unless 0 <= lambda0_min < lambda0_max and n >= 2.
std::vector<CurvePoint> sweep_curves(CurveModel model, double lambda0_min, double lambda0_max,
                                     int n);

}  // namespace kinkfac
