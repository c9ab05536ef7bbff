#include "kinkfac/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kinkfac/error.hpp"

namespace kinkfac {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateInput: return "degenerate input";
    case ErrorCode::UnsupportedNonlinearity: return "unsupported nonlinearity";
    case ErrorCode::NoRealSplit: return "no real split";
    case ErrorCode::DegenerateNonlinearity: return "degenerate nonlinearity";
    case ErrorCode::TrivialKink: return "trivial kink";
    case ErrorCode::SingularFrame: return "singular frame";
    case ErrorCode::DegenerateBranch: return "degenerate branch";
    case ErrorCode::NotAdmissible: return "not admissible";
    case ErrorCode::Range: return "range";
    case ErrorCode::NoFront: return "no front";
    case ErrorCode::Placement: return "placement";
    case ErrorCode::Instability: return "instability";
  }
  return "unknown";
}

Poly::Poly(std::initializer_list<double> coeffs) { assign({coeffs.begin(), coeffs.size()}); }

Poly::Poly(std::span<const double> coeffs) { assign(coeffs); }

void Poly::assign(std::span<const double> coeffs) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == 0.0) --n;
  if (n > kMaxDegree + 1) {
    throw Error(ErrorCode::DegenerateInput,
                "polynomial degree " + std::to_string(n - 1) + " exceeds the supported maximum of 4");
  }
  coeffs_.fill(0.0);
  std::copy_n(coeffs.begin(), n, coeffs_.begin());
  size_ = n;
}

double Poly::operator()(double x) const noexcept { return poly_eval(*this, x); }

Poly operator+(const Poly& lhs, const Poly& rhs) {
  std::array<double, Poly::kMaxDegree + 1> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs.coeff(i) + rhs.coeff(i);
  return Poly(std::span<const double>(out));
}

Poly operator-(const Poly& lhs, const Poly& rhs) { return lhs + (-1.0) * rhs; }

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::array<double, 2 * Poly::kMaxDegree + 1> out{};
  for (std::size_t i = 0; i < lhs.size_; ++i) {
    for (std::size_t j = 0; j < rhs.size_; ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly(std::span<const double>(out.data(), lhs.size_ + rhs.size_ - 1));
}

Poly operator*(double scale, const Poly& p) {
  Poly out = p;
  for (std::size_t i = 0; i < out.size_; ++i) out.coeffs_[i] *= scale;
  // scale == 0 must still leave a trimmed polynomial
  return Poly(out.coeffs());
}

double poly_eval(const Poly& p, double x) noexcept {
  const auto c = p.coeffs();
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly poly_derivative(const Poly& p) {
  if (p.degree() < 1) return Poly{0.0};
  std::array<double, Poly::kMaxDegree> out{};
  for (int i = 1; i <= p.degree(); ++i) {
    out[static_cast<std::size_t>(i - 1)] = static_cast<double>(i) * p.coeff(static_cast<std::size_t>(i));
  }
  return Poly(std::span<const double>(out.data(), static_cast<std::size_t>(p.degree())));
}

RootPair quadratic_roots(double c2, double c1, double c0) {
  if (c2 == 0.0) throw Error(ErrorCode::DegenerateInput, "quadratic_roots: leading coefficient is zero");

  const double disc = c1 * c1 - 4.0 * c2 * c0;
  const double scale = std::max({1.0, c1 * c1, std::abs(c2 * c0)});
  if (std::abs(disc) <= 1e-14 * scale) {
    const double root = -c1 / (2.0 * c2);
    return {RootPair::Kind::DoubleReal, root, root};
  }
  if (disc < 0.0) {
    return {RootPair::Kind::ComplexPair, -c1 / (2.0 * c2), std::sqrt(-disc) / (2.0 * std::abs(c2))};
  }

  const double sq = std::sqrt(disc);
  const double q = -0.5 * (c1 >= 0.0 ? c1 + sq : c1 - sq);
  double x1 = q / c2;
  double x2 = c0 / q;
  if (x1 < x2) std::swap(x1, x2);
  return {RootPair::Kind::TwoReal, x1, x2};
}

}  // namespace kinkfac
