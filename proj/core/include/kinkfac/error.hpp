#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kinkfac {

enum class ErrorCode {
  DegenerateInput,          // leading coefficient of a quadratic is zero
  UnsupportedNonlinearity,  // g(0) != 0 or deg g != 3
  NoRealSplit,              // g(f)/f has complex roots
  DegenerateNonlinearity,   // cubic scale c == 0
  TrivialKink,              // r1 == 0 or a == 0
  SingularFrame,            // |alpha| == 1
  DegenerateBranch,         // exact branch at lambda0 <= 0
  NotAdmissible,            // (alpha, lambda0) off the exact curve
  Range,                    // malformed sweep / grid / span parameters
  NoFront,                  // no front crossing where one was required
  Placement,                // initial front too close to a boundary
  Instability,              // non-finite field value during time stepping
};

std::string_view to_string(ErrorCode code) noexcept;

/// Numerical failures surface as Instability; everything else is a domain
/// error caused by the inputs.
constexpr bool is_numerical(ErrorCode code) noexcept { return code == ErrorCode::Instability; }

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kinkfac
