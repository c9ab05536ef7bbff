#include "kinkfac/factorizer.hpp"

#include <cmath>

#include "kinkfac/error.hpp"

namespace kinkfac {

Poly SplitCubic::expand() const { return c * (Poly{0.0, 1.0} * Poly{-r1, 1.0} * Poly{-r2, 1.0}); }

Poly Factorization::phi1() const { return Poly{-a * r1, a}; }

Poly Factorization::phi2() const {
  const double b = c / a;
  return Poly{-b * r2, b};
}

SplitCubic split_cubic(const Poly& g) {
  if (g.degree() != 3) {
    throw Error(ErrorCode::UnsupportedNonlinearity, "nonlinearity must be a cubic polynomial");
  }
  if (g.coeff(0) != 0.0) {
    throw Error(ErrorCode::UnsupportedNonlinearity, "nonlinearity must vanish at f = 0");
  }
  // g(f) / f = g3 f^2 + g2 f + g1
  const RootPair roots = quadratic_roots(g.coeff(3), g.coeff(2), g.coeff(1));
  if (roots.kind == RootPair::Kind::ComplexPair) {
    throw Error(ErrorCode::NoRealSplit, "no real split: g(f)/f has complex roots");
  }
  return {g.coeff(3), roots.second, roots.first};
}

std::vector<Factorization> enumerate_factorizations(const SplitCubic& split) {
  if (split.c == 0.0) throw Error(ErrorCode::DegenerateNonlinearity, "cubic scale c is zero");
  std::vector<Factorization> out;
  if (split.c > 0.0) return out;

  const double mag = std::sqrt(-split.c / 2.0);
  out.reserve(4);
  for (const double a : {mag, -mag}) {
    for (const auto& [r1, r2] : {std::pair{split.r1, split.r2}, std::pair{split.r2, split.r1}}) {
      out.push_back({a, r1, r2, split.c, a * r1 + (split.c / a) * r2});
    }
  }
  return out;
}

std::vector<Factorization> enumerate_factorizations(const Poly& g) {
  return enumerate_factorizations(split_cubic(g));
}

KinkSolution kink_from(const Factorization& fact, double tau0) {
  if (fact.a == 0.0 || fact.r1 == 0.0) {
    throw Error(ErrorCode::TrivialKink, "f' = a f^2 has no bounded front (r1 = 0)");
  }
  return {fact.r1, fact.a * fact.r1, tau0, fact.beta};
}

KinkSample kink_eval(const KinkSolution& kink, double tau) noexcept {
  // s = 1/(1+e^z) and 1-s, each computed without overflow
  const double z = kink.kappa * (tau - kink.tau0);
  double s = 0.0;
  double sc = 0.0;
  if (z >= 0.0) {
    const double e = std::exp(-z);
    s = e / (1.0 + e);
    sc = 1.0 / (1.0 + e);
  } else {
    const double e = std::exp(z);
    s = 1.0 / (1.0 + e);
    sc = e / (1.0 + e);
  }
  const double r = kink.r_target;
  const double k = kink.kappa;
  return {r * s, -k * r * s * sc, k * k * r * s * sc * (sc - s)};
}

double ode_residual(const Poly& g, double beta, const KinkSolution& kink, double tau) noexcept {
  const KinkSample k = kink_eval(kink, tau);
  return k.d2f + beta * k.df + poly_eval(g, k.f);
}

}  // namespace kinkfac
