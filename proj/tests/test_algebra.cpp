#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "kinkfac/algebra.hpp"
#include "kinkfac/error.hpp"
#include "oracles/oracles.hpp"

using namespace kinkfac;

TEST_CASE("poly_eval on g = f - f^3") {
  const Poly g{0.0, 1.0, 0.0, -1.0};
  CHECK(poly_eval(g, 0.0) == 0.0);
  CHECK(poly_eval(g, 1.0) == 0.0);
  CHECK(poly_eval(g, 2.0) == -6.0);
  CHECK(g(-1.0) == 0.0);
}

TEST_CASE("zero polynomial") {
  const Poly zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  for (double x : {-3.0, 0.0, 1e300}) CHECK(poly_eval(zero, x) == 0.0);
  CHECK(Poly{0.0, 0.0, 0.0}.is_zero());
}

TEST_CASE("trailing zeros are trimmed") {
  const Poly p{1.0, 2.0, 0.0, 0.0};
  CHECK(p.degree() == 1);
  CHECK(p.coeffs().back() != 0.0);
  CHECK(p.coeff(7) == 0.0);
}

TEST_CASE("degree above 4 is rejected") {
  const std::array<double, 6> six{1.0, 0.0, 0.0, 0.0, 0.0, 1.0};
  CHECK_THROWS_AS(Poly(std::span<const double>(six)), Error);
  const Poly quad{1.0, 1.0, 1.0};
  const Poly cubic{1.0, 1.0, 1.0, 1.0};
  CHECK_THROWS_AS(quad * cubic, Error);
}

TEST_CASE("poly_derivative") {
  CHECK(poly_derivative(Poly{0.0, 1.0, 0.0, -1.0}) == Poly{1.0, 0.0, -3.0});
  CHECK(poly_derivative(Poly{5.0}).is_zero());
  CHECK(poly_derivative(Poly{0.0, 0.0, 1.0}) == Poly{0.0, 2.0});
  // degree drops by exactly one
  CHECK(poly_derivative(Poly{1.0, 2.0, 3.0, 4.0, 5.0}).degree() == 3);
}

TEST_CASE("arithmetic") {
  const Poly x{0.0, 1.0};
  CHECK(x * x == Poly{0.0, 0.0, 1.0});
  CHECK((Poly{1.0, 1.0} * Poly{-1.0, 1.0}) == Poly{-1.0, 0.0, 1.0});
  CHECK((Poly{1.0, 2.0} - Poly{1.0, 2.0}).is_zero());
  CHECK((0.0 * x).is_zero());
}

TEST_CASE("quadratic_roots examples") {
  SUBCASE("two real, symmetric") {
    const RootPair r = quadratic_roots(1.0, 0.0, -1.0);
    CHECK(r.kind == RootPair::Kind::TwoReal);
    CHECK(r.first == 1.0);
    CHECK(r.second == -1.0);
  }
  SUBCASE("golden ratio pair against the textbook formula") {
    const auto [hi, lo] = oracle::textbook_quadratic(1.0, 1.0, -1.0);
    const RootPair r = quadratic_roots(1.0, 1.0, -1.0);
    CHECK(r.kind == RootPair::Kind::TwoReal);
    CHECK(r.first == doctest::Approx(hi).epsilon(1e-15));
    CHECK(r.second == doctest::Approx(lo).epsilon(1e-15));
    CHECK(r.first == doctest::Approx(0.6180340).epsilon(1e-7));
    CHECK(r.second == doctest::Approx(-1.6180340).epsilon(1e-7));
  }
  SUBCASE("complex pair") {
    const RootPair r = quadratic_roots(1.0, 0.0, 1.0);
    CHECK(r.kind == RootPair::Kind::ComplexPair);
    CHECK(r.first == 0.0);
    CHECK(r.second == 1.0);
  }
  SUBCASE("double root") {
    const RootPair r = quadratic_roots(1.0, -2.0, 1.0);
    CHECK(r.kind == RootPair::Kind::DoubleReal);
    CHECK(r.first == 1.0);
    CHECK(r.second == 1.0);
  }
  SUBCASE("degenerate leading coefficient") {
    try {
      quadratic_roots(0.0, 1.0, 1.0);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegenerateInput);
    }
  }
}

TEST_CASE("quadratic_roots avoids cancellation") {
  // roots 1e8 and 1e-8; the textbook formula loses the small one
  const RootPair r = quadratic_roots(1.0, -(1e8 + 1e-8), 1.0);
  CHECK(r.first == doctest::Approx(1e8).epsilon(1e-15));
  CHECK(r.second == doctest::Approx(1e-8).epsilon(1e-14));
}

TEST_CASE("property: Vieta and reconstruction for random two-real quadratics") {
  std::mt19937_64 rng(20040208);
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  int checked = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const double c2 = coef(rng), c1 = coef(rng), c0 = coef(rng);
    if (c2 == 0.0) continue;
    const RootPair r = quadratic_roots(c2, c1, c0);
    CHECK((r.kind == RootPair::Kind::ComplexPair) == (c1 * c1 - 4.0 * c2 * c0 < 0.0));
    if (r.kind != RootPair::Kind::TwoReal) continue;
    ++checked;
    CHECK(r.first >= r.second);
    const double prod = c0 / c2;
    const double sum = -c1 / c2;
    CHECK(std::abs(r.first * r.second - prod) <= 1e-12 * std::max(1.0, std::abs(prod)));
    CHECK(std::abs(r.first + r.second - sum) <= 1e-12 * std::max({1.0, std::abs(sum), std::abs(r.first)}));
  }
  CHECK(checked > 1000);
}

TEST_CASE("property: derivative matches central finite difference") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_real_distribution<double> point(-10.0, 10.0);
  for (int trial = 0; trial < 500; ++trial) {
    const Poly p{coef(rng), coef(rng), coef(rng), coef(rng), coef(rng)};
    const Poly dp = poly_derivative(p);
    const double x = point(rng);
    // extended precision keeps the difference quotient's roundoff far below 1e-8
    const auto eval_ld = [&](long double t) {
      long double acc = 0.0L;
      for (int i = 4; i >= 0; --i) acc = acc * t + static_cast<long double>(p.coeff(static_cast<std::size_t>(i)));
      return acc;
    };
    const long double h = 1e-5L;
    const long double fd = (eval_ld(x + h) - eval_ld(x - h)) / (2.0L * h);
    CHECK(std::abs(static_cast<long double>(poly_eval(dp, x)) - fd) < 1e-8L);
  }
}

TEST_CASE("bisect_root") {
  const double r = bisect_root([](double x) { return x * x - 2.0; }, 0.0, 2.0);
  CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(bisect_root([](double x) { return x * x + 1.0; }, 0.0, 2.0), Error);
}
