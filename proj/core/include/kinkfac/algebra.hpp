#pragma once

// Real polynomials of degree <= 4 and low-degree root finding.

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>

#include "kinkfac/error.hpp"

namespace kinkfac {

/// Dense real polynomial; coeffs()[i] multiplies x^i. Trailing zeros are
/// trimmed on construction so the highest stored coefficient is nonzero
/// unless the polynomial is identically zero.
class Poly {
 public:
  static constexpr std::size_t kMaxDegree = 4;

  Poly() = default;
  Poly(std::initializer_list<double> coeffs);
  explicit Poly(std::span<const double> coeffs);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(size_) - 1; }
  bool is_zero() const noexcept { return size_ == 0; }
  std::span<const double> coeffs() const noexcept { return {coeffs_.data(), size_}; }
  /// Coefficient of x^i; zero past the degree.
  double coeff(std::size_t i) const noexcept { return i < size_ ? coeffs_[i] : 0.0; }

  double operator()(double x) const noexcept;

  friend Poly operator+(const Poly& lhs, const Poly& rhs);
  friend Poly operator-(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(double scale, const Poly& p);
  friend bool operator==(const Poly& lhs, const Poly& rhs) = default;

 private:
  void assign(std::span<const double> coeffs);

  std::array<double, kMaxDegree + 1> coeffs_{};
  std::size_t size_ = 0;
};

/// Horner evaluation.
double poly_eval(const Poly& p, double x) noexcept;

/// Formal derivative. The derivative of a constant is the one-term
/// polynomial [0] (which trims to zero).
Poly poly_derivative(const Poly& p);

struct RootPair {
  enum class Kind { TwoReal, DoubleReal, ComplexPair };

  Kind kind;
  /// TwoReal: larger root. DoubleReal: the root. ComplexPair: real part.
  double first;
  /// TwoReal: smaller root. DoubleReal: the root. ComplexPair: |imaginary part|.
  double second;
};

/// Roots of c2 x^2 + c1 x + c0. Uses the cancellation-free branch
/// q = -(c1 + sign(c1) sqrt(D)) / 2 and recovers the partner root from the
/// product c0 / q. Throws Error(DegenerateInput) when c2 == 0.
RootPair quadratic_roots(double c2, double c1, double c0);

/// Bisection on a bracket [lo, hi] with fn(lo) and fn(hi) of opposite sign,
/// run until the bracket cannot shrink further in double precision.
template <class Fn>
double bisect_root(Fn&& fn, double lo, double hi) {
  double flo = fn(lo);
  const double fhi = fn(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!(lo < hi) || (flo < 0.0) == (fhi < 0.0)) {
    throw Error(ErrorCode::Range, "bisect_root: interval does not bracket a sign change");
  }
  for (int iter = 0; iter < 2100; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double fmid = fn(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

}  // namespace kinkfac
