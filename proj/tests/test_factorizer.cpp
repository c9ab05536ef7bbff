#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kinkfac/error.hpp"
#include "kinkfac/factorizer.hpp"
#include "oracles/oracles.hpp"

using namespace kinkfac;

namespace {

const Poly kPhi4{0.0, 1.0, 0.0, -1.0};  // f - f^3
constexpr double kBeta = 3.0 / std::numbers::sqrt2;
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Range;
}

oracle::Coeffs to_coeffs(const Poly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

}  // namespace

TEST_CASE("split_cubic") {
  SUBCASE("f - f^3") {
    const SplitCubic s = split_cubic(kPhi4);
    CHECK(s.c == -1.0);
    CHECK(s.r1 == -1.0);
    CHECK(s.r2 == 1.0);
    CHECK(s.expand() == kPhi4);
  }
  SUBCASE("f^3 has a double root at the origin") {
    const SplitCubic s = split_cubic(Poly{0.0, 0.0, 0.0, 1.0});
    CHECK(s.c == 1.0);
    CHECK(s.r1 == 0.0);
    CHECK(s.r2 == 0.0);
  }
  SUBCASE("errors") {
    CHECK(code_of([] { split_cubic(Poly{0.0, 1.0, 0.0, 1.0}); }) == ErrorCode::NoRealSplit);
    CHECK(code_of([] { split_cubic(Poly{0.5, 1.0, 0.0, -1.0}); }) == ErrorCode::UnsupportedNonlinearity);
    CHECK(code_of([] { split_cubic(Poly{0.0, 1.0, -1.0}); }) == ErrorCode::UnsupportedNonlinearity);
    CHECK(code_of([] { split_cubic(Poly{0.0, -1.0, 0.0, -1.0}); }) == ErrorCode::NoRealSplit);
  }
}

TEST_CASE("enumerate_factorizations for f - f^3") {
  const auto facts = enumerate_factorizations(kPhi4);
  REQUIRE(facts.size() == 4);

  // a descending, then r1 ascending
  CHECK(facts[0].a == doctest::Approx(kInvSqrt2));
  CHECK(facts[0].r1 == -1.0);
  CHECK(facts[1].r1 == 1.0);
  CHECK(facts[2].a == doctest::Approx(-kInvSqrt2));
  CHECK(facts[2].r1 == -1.0);

  int plus = 0, minus = 0;
  for (const auto& f : facts) {
    if (std::abs(f.beta - kBeta) < 1e-12) ++plus;
    if (std::abs(f.beta + kBeta) < 1e-12) ++minus;
  }
  CHECK(plus == 2);
  CHECK(minus == 2);

  // phi1 = -(1/sqrt2)(1 + f), phi2 = -sqrt2 (1 - f)
  const Factorization& printed = facts[2];
  CHECK(printed.beta == doctest::Approx(kBeta).epsilon(1e-15));
  const Poly phi1 = printed.phi1();
  const Poly phi2 = printed.phi2();
  CHECK(phi1.coeff(0) == doctest::Approx(-kInvSqrt2).epsilon(1e-15));
  CHECK(phi1.coeff(1) == doctest::Approx(-kInvSqrt2).epsilon(1e-15));
  CHECK(phi2.coeff(0) == doctest::Approx(-std::numbers::sqrt2).epsilon(1e-15));
  CHECK(phi2.coeff(1) == doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
}

TEST_CASE("enumerate_factorizations for 2f - 2f^3 against the symbolic beta oracle") {
  const auto facts = enumerate_factorizations(Poly{0.0, 2.0, 0.0, -2.0});
  REQUIRE(facts.size() == 4);
  for (const auto& f : facts) {
    CHECK(std::abs(f.a) == doctest::Approx(1.0).epsilon(1e-15));
    // beta = -(phi1 + phi2 + f phi1') must be f-independent
    const auto expr = oracle::beta_expression(to_coeffs(f.phi1()), to_coeffs(f.phi2()));
    CHECK(std::abs(oracle::coeff(expr, 1)) < 1e-12);
    CHECK(-oracle::coeff(expr, 0) == doctest::Approx(f.beta).epsilon(1e-14));
    CHECK(std::abs(std::abs(f.beta) - 3.0) < 1e-12);
  }
  // the (r1, r2) = (-1, 1) assignments give beta = -+3 for a = +-1
  CHECK(facts[0].beta == doctest::Approx(-3.0));
  CHECK(facts[2].beta == doctest::Approx(3.0));
}

TEST_CASE("enumerate_factorizations edge cases") {
  CHECK(enumerate_factorizations(Poly{0.0, 0.0, 0.0, 1.0}).empty());  // c > 0
  CHECK(enumerate_factorizations(Poly{0.0, -1.0, 0.0, 1.0}).empty());
  CHECK(code_of([] { enumerate_factorizations(SplitCubic{0.0, -1.0, 1.0}); }) ==
        ErrorCode::DegenerateNonlinearity);
  CHECK(code_of([] { enumerate_factorizations(Poly{0.0, -1.0, 0.0, -1.0}); }) == ErrorCode::NoRealSplit);
}

TEST_CASE("property: round-trip and beta constancy on random splittable cubics") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> root(-3.0, 3.0);
  std::uniform_real_distribution<double> scale(-4.0, -0.1);
  for (int trial = 0; trial < 300; ++trial) {
    const SplitCubic s{scale(rng), root(rng), root(rng)};
    const Poly g = s.expand();
    for (const auto& f : enumerate_factorizations(g)) {
      const auto prod = oracle::mul(oracle::Coeffs{0.0, 1.0}, oracle::mul(to_coeffs(f.phi1()), to_coeffs(f.phi2())));
      const double gscale = std::max({std::abs(g.coeff(1)), std::abs(g.coeff(2)), std::abs(g.coeff(3))});
      for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(oracle::coeff(prod, i) - g.coeff(i)) <= 1e-12 * gscale);
      }
      const auto expr = oracle::beta_expression(to_coeffs(f.phi1()), to_coeffs(f.phi2()));
      CHECK(std::abs(oracle::coeff(expr, 1)) < 1e-12);
      CHECK(std::abs(2.0 * f.a + f.c / f.a) < 1e-12);
      CHECK(std::abs(f.beta - (f.a * f.r1 + (f.c / f.a) * f.r2)) < 1e-12);
    }
  }
}

TEST_CASE("kink_from and the midpoint property") {
  const auto facts = enumerate_factorizations(kPhi4);
  const KinkSolution k = kink_from(facts[2]);
  CHECK(k.r_target == -1.0);
  CHECK(k.kappa == doctest::Approx(kInvSqrt2).epsilon(1e-15));
  CHECK(k.beta == facts[2].beta);
  CHECK(kink_eval(k, 0.0).f == -0.5);
  CHECK(kink_eval(kink_from(facts[2], 3.25), 3.25).f == -0.5);

  // f(tau) = -1/(1 + e^{tau/sqrt2})
  for (double tau : {-7.0, -1.0, 0.3, 4.0}) {
    CHECK(kink_eval(k, tau).f == doctest::Approx(-1.0 / (1.0 + std::exp(tau * kInvSqrt2))).epsilon(1e-14));
  }
  CHECK(kink_eval(k, -60.0).f == doctest::Approx(-1.0));
  CHECK(std::abs(kink_eval(k, 60.0).f) < 1e-18);

  // mirror kink for beta = -3/sqrt2
  const KinkSolution m = kink_from(facts[0]);
  CHECK(facts[0].beta == doctest::Approx(-kBeta));
  for (double tau : {-3.0, 0.5, 2.0}) {
    CHECK(kink_eval(m, tau).f == doctest::Approx(kink_eval(k, -tau).f).epsilon(1e-15));
  }
}

TEST_CASE("kink_from agrees with direct integration of f' = -(1/sqrt2) f (1 + f)") {
  const KinkSolution k = kink_from(enumerate_factorizations(kPhi4)[2]);
  const auto rhs = [](double f) { return -kInvSqrt2 * f * (1.0 + f); };
  for (const int n : {1000, 4000}) {
    const double h = 1e-3;
    CHECK(oracle::rk4_scalar(rhs, -0.5, h, n) == doctest::Approx(kink_eval(k, n * h).f).epsilon(1e-11));
    CHECK(oracle::rk4_scalar(rhs, -0.5, -h, n) == doctest::Approx(kink_eval(k, -n * h).f).epsilon(1e-11));
  }
}

TEST_CASE("kink_from rejects a vanishing root") {
  const auto facts = enumerate_factorizations(Poly{0.0, 0.0, 0.0, -1.0});  // -f^3: roots {0, 0}
  REQUIRE(facts.size() == 4);
  CHECK(code_of([&] { kink_from(facts[0]); }) == ErrorCode::TrivialKink);
}

TEST_CASE("kink_eval derivatives") {
  const KinkSolution k = kink_from(enumerate_factorizations(kPhi4)[2]);
  const KinkSample mid = kink_eval(k, 0.0);
  CHECK(mid.df == doctest::Approx(1.0 / (4.0 * std::numbers::sqrt2)).epsilon(1e-15));
  CHECK(mid.df == doctest::Approx(0.1767767).epsilon(1e-7));
  CHECK(mid.d2f == doctest::Approx(0.0).epsilon(1e-18));

  const auto f = [&](double t) { return kink_eval(k, t).f; };
  for (double tau : {-5.0, -1.2, 0.7, 3.0}) {
    const KinkSample s = kink_eval(k, tau);
    CHECK(s.df == doctest::Approx(oracle::central_difference(f, tau, 1e-5)).epsilon(1e-8));
    const auto df = [&](double t) { return kink_eval(k, t).df; };
    CHECK(s.d2f == doctest::Approx(oracle::central_difference(df, tau, 1e-5)).epsilon(1e-7));
  }

  const KinkSample far_right = kink_eval(k, 2000.0);
  CHECK(far_right.f == 0.0);
  CHECK(far_right.df == 0.0);
  CHECK(far_right.d2f == 0.0);
  const KinkSample far_left = kink_eval(k, -2000.0);
  CHECK(far_left.f == -1.0);
  CHECK(far_left.df == 0.0);
  CHECK(far_left.d2f == 0.0);
}

TEST_CASE("ode_residual") {
  const auto facts = enumerate_factorizations(kPhi4);
  for (const auto& fact : facts) {
    const KinkSolution k = kink_from(fact);
    double worst = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double tau = -20.0 + 0.1 * i;
      worst = std::max(worst, std::abs(ode_residual(kPhi4, fact.beta, k, tau)));
    }
    CHECK(worst < 1e-10);
  }

  const KinkSolution k = kink_from(facts[2]);
  CHECK(ode_residual(kPhi4, 0.0, k, 0.0) == doctest::Approx(-0.375).epsilon(1e-14));

  const KinkSolution flat{0.0, 1.0, 0.0, 0.0};
  CHECK(ode_residual(kPhi4, 1.0, flat, 2.0) == 0.0);
}

TEST_CASE("odd symmetry: the negated kink connects 0 and +1 and solves the same equation") {
  for (const auto& fact : enumerate_factorizations(kPhi4)) {
    KinkSolution neg = kink_from(fact);
    neg.r_target = -neg.r_target;
    double worst = 0.0;
    for (int i = 0; i <= 400; ++i) {
      worst = std::max(worst, std::abs(ode_residual(kPhi4, fact.beta, neg, -20.0 + 0.1 * i)));
    }
    CHECK(worst < 1e-10);
  }
}
