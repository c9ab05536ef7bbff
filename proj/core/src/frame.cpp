#include "kinkfac/frame.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kinkfac/error.hpp"

namespace kinkfac {
namespace {

// beta of the factorized kinks of f - f^3
constexpr double kBetaFactor = 3.0 / std::numbers::sqrt2;
constexpr double kSqrt2Over3 = std::numbers::sqrt2 / 3.0;

CurvePoint paper_point(double lambda0, double alpha, Branch branch) {
  const double sign = (branch == Branch::Alpha1 || branch == Branch::Alpha2) ? 1.0 : -1.0;
  const double defect = alpha * alpha + sign * kSqrt2Over3 * lambda0 * alpha - 1.0;
  return {lambda0, alpha, branch, std::abs(defect)};
}

}  // namespace

std::string_view to_string(Branch branch) noexcept {
  switch (branch) {
    case Branch::Alpha1: return "alpha1";
    case Branch::Alpha2: return "alpha2";
    case Branch::Alpha3: return "alpha3";
    case Branch::Alpha4: return "alpha4";
    case Branch::ExactPlus: return "exact_plus";
    case Branch::ExactMinus: return "exact_minus";
  }
  return "unknown";
}

std::string_view to_string(CurveModel model) noexcept {
  return model == CurveModel::Paper ? "paper" : "exact";
}

bool CurvePoint::subluminal() const noexcept { return std::abs(alpha) < 1.0; }

TravelingFrame TravelingFrame::make(double alpha, double lambda0) {
  return {alpha, lambda0, beta_of(alpha, lambda0)};
}

double beta_of(double alpha, double lambda0) {
  const double denom = 1.0 - alpha * alpha;
  if (denom == 0.0) {
    throw Error(ErrorCode::SingularFrame, "singular frame: |alpha| = 1 removes the second-order term");
  }
  return alpha * lambda0 / denom;
}

std::array<CurvePoint, 4> paper_alphas(double lambda0) {
  if (lambda0 < 0.0) throw Error(ErrorCode::Range, "paper_alphas: lambda0 must be >= 0");
  const double b = kSqrt2Over3 * lambda0;
  const RootPair upper = quadratic_roots(1.0, b, -1.0);
  const RootPair lower = quadratic_roots(1.0, -b, -1.0);
  return {paper_point(lambda0, upper.first, Branch::Alpha1),
          paper_point(lambda0, upper.second, Branch::Alpha2),
          paper_point(lambda0, lower.first, Branch::Alpha3),
          paper_point(lambda0, lower.second, Branch::Alpha4)};
}

double exact_curve_defect(double alpha, double lambda0) noexcept {
  return std::abs(alpha * alpha * (2.0 * lambda0 * lambda0 + 9.0) - 9.0);
}

std::array<CurvePoint, 2> exact_alphas(double lambda0) {
  if (!(lambda0 > 0.0)) {
    throw Error(ErrorCode::DegenerateBranch, "exact branch degenerates for lambda0 <= 0 (zero-width front)");
  }
  // alpha lambda0 / (1 - alpha^2) = +-beta_factor / sqrt(1 - alpha^2)
  const auto plus = [lambda0](double alpha) {
    return alpha * lambda0 - kBetaFactor * std::sqrt(1.0 - alpha * alpha);
  };
  const auto minus = [lambda0](double alpha) {
    return alpha * lambda0 + kBetaFactor * std::sqrt(1.0 - alpha * alpha);
  };
  const double ap = bisect_root(plus, 0.0, 1.0);
  const double am = bisect_root(minus, -1.0, 0.0);
  return {CurvePoint{lambda0, ap, Branch::ExactPlus, exact_curve_defect(ap, lambda0)},
          CurvePoint{lambda0, am, Branch::ExactMinus, exact_curve_defect(am, lambda0)}};
}

KinkSolution comoving_kink(double alpha, double lambda0) {
  const double denom = 1.0 - alpha * alpha;
  if (!(denom > 0.0)) throw Error(ErrorCode::SingularFrame, "comoving kink requires |alpha| < 1");
  const double sign = alpha < 0.0 ? -1.0 : 1.0;
  return {-1.0, sign / std::sqrt(2.0 * denom), 0.0, alpha * lambda0 / denom};
}

KinkSolution exact_kink(double alpha, double lambda0, double tau0) {
  if (!(lambda0 > 0.0) || !(std::abs(alpha) < 1.0) || exact_curve_defect(alpha, lambda0) > 1e-9) {
    throw Error(ErrorCode::NotAdmissible,
                "(alpha, lambda0) is not on the exact admissibility curve alpha^2 (2 lambda0^2 + 9) = 9");
  }
  const double denom = 1.0 - alpha * alpha;
  const double beta = alpha * lambda0 / denom;
  const Poly scaled = (1.0 / denom) * Poly{0.0, 1.0, 0.0, -1.0};

  // the 0 <-> -1 front whose factorization beta has the frame's sign
  const Factorization* pick = nullptr;
  const auto facts = enumerate_factorizations(scaled);
  for (const auto& fact : facts) {
    if (fact.r1 < 0.0 && (fact.beta > 0.0) == (beta > 0.0)) pick = &fact;
  }
  if (pick == nullptr) throw Error(ErrorCode::NotAdmissible, "no factorization matches the frame's beta");
  KinkSolution kink = kink_from(*pick, tau0);
  kink.beta = beta;
  return kink;
}

double traveling_residual(double alpha, double lambda0, const KinkSolution& kink,
                          double tau) noexcept {
  const KinkSample k = kink_eval(kink, tau);
  return (1.0 - alpha * alpha) * k.d2f + alpha * lambda0 * k.df + k.f - k.f * k.f * k.f;
}

std::vector<CurvePoint> sweep_curves(CurveModel model, double lambda0_min, double lambda0_max,
                                     int n) {
  if (!(lambda0_min >= 0.0) || !(lambda0_min < lambda0_max) || n < 2) {
    throw Error(ErrorCode::Range, "sweep_curves: need 0 <= lambda0_min < lambda0_max and n >= 2");
  }
  const auto sample = [&](int i) {
    return lambda0_min + (lambda0_max - lambda0_min) * static_cast<double>(i) / static_cast<double>(n - 1);
  };

  std::vector<CurvePoint> out;
  if (model == CurveModel::Paper) {
    out.resize(4 * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const auto pts = paper_alphas(sample(i));
      for (std::size_t b = 0; b < 4; ++b) out[b * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = pts[b];
    }
  } else {
    out.resize(2 * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const double lambda0 = sample(i);
      std::array<CurvePoint, 2> pts{};
      if (lambda0 == 0.0) {
        pts = {CurvePoint{0.0, 1.0, Branch::ExactPlus, 0.0}, CurvePoint{0.0, -1.0, Branch::ExactMinus, 0.0}};
      } else {
        pts = exact_alphas(lambda0);
      }
      for (std::size_t b = 0; b < 2; ++b) out[b * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = pts[b];
    }
  }
  return out;
}

}  // namespace kinkfac
