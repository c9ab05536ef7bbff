#pragma once

// Factorization of f'' + beta f' + g(f) = 0 for cubic g with g(0) = 0.
//
// The equation is written as [D - phi2(f)][D - phi1(f)] f = 0 with
//   phi1(f) phi2(f) f = g(f),   beta = -(phi1 + phi2 + f dphi1/df).
// For g = c f (f - r1)(f - r2) the choice phi1 = a (f - r1),
// phi2 = (c/a)(f - r2) makes beta independent of f iff a^2 = -c/2, and then
// beta = a r1 + (c/a) r2. Every solution of the first-order equation
// f' = phi1(f) f also solves the second-order one.

#include <vector>

#include "kinkfac/algebra.hpp"

namespace kinkfac {

/// g(f) = c f (f - r1)(f - r2) with r1 <= r2.
struct SplitCubic {
  double c;
  double r1;
  double r2;

  Poly expand() const;
};

struct Factorization {
  double a;   // scale of phi1
  double r1;  // root carried by phi1
  double r2;  // root carried by phi2
  double c;
  double beta;

  Poly phi1() const;  // a (f - r1)
  Poly phi2() const;  // (c/a) (f - r2)
};

/// Logistic front f(tau) = r_target / (1 + exp(kappa (tau - tau0))).
/// Equivalently (r_target/2) (1 - tanh(kappa (tau - tau0) / 2)).
struct KinkSolution {
  double r_target;
  double kappa;
  double tau0;
  double beta;  // damping coefficient of the standard-form equation it solves
};

struct KinkSample {
  double f;
  double df;
  double d2f;
};

/// Throws UnsupportedNonlinearity unless deg g == 3 and g(0) == 0 exactly,
/// NoRealSplit when g(f)/f has complex roots.
SplitCubic split_cubic(const Poly& g);

/// All constant-beta factorizations, ordered by a descending then r1
/// ascending. Empty when c > 0. Throws DegenerateNonlinearity when c == 0.
std::vector<Factorization> enumerate_factorizations(const SplitCubic& split);
std::vector<Factorization> enumerate_factorizations(const Poly& g);

/// Kink solving f' = a f (f - r1): r_target = r1, kappa = a r1.
/// Throws TrivialKink when a == 0 or r1 == 0.
KinkSolution kink_from(const Factorization& fact, double tau0 = 0.0);

/// Closed-form value and analytic first/second derivatives.
KinkSample kink_eval(const KinkSolution& kink, double tau) noexcept;

/// f'' + beta f' + g(f) along the kink.
double ode_residual(const Poly& g, double beta, const KinkSolution& kink, double tau) noexcept;

}  // namespace kinkfac
