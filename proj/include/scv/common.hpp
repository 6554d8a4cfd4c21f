// Shared aliases, constants, error types, and small numeric helpers used by
// every module in the library.
//
// Error taxonomy (mapped to process exit codes by the CLI):
//   GuardError     -- an input or configuration lies outside the supported
//                     range of an operation (the operation refuses to run).
//   NumericalError -- an operation ran but an internal numerical
//                     self-consistency check failed (the result cannot be
//                     certified).
// Plain std::invalid_argument is reserved for malformed arguments that are
// wrong for structural reasons (e.g. a non-reduced fraction) rather than for
// being out of range.
#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace scv {

using u32  = std::uint32_t;
using u64  = std::uint64_t;
using i64  = std::int64_t;
using i128 = __int128;
using u128 = unsigned __int128;
using cplx = std::complex<double>;

inline constexpr double PI        = 3.14159265358979323846264338327950288;
inline constexpr double TWO_PI    = 2.0 * PI;
inline constexpr double EULER_GAMMA = 0.57721566490153286060651209008240243;
inline constexpr double ZETA2     = 1.64493406684822643647241516664602519;  // pi^2/6
inline constexpr cplx   I_UNIT{0.0, 1.0};

/// Guard violation: the request is well-formed but outside the supported range.
class GuardError : public std::invalid_argument {
 public:
  explicit GuardError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Numerical self-check failure: a result could not be certified.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// e(x) = exp(2 pi i x), the standard additive character on R/Z.
inline cplx e_of(double x) {
  // Reduce to [0,1) first so that huge rationals like e(a/c) stay accurate.
  double r = x - std::floor(x);
  return {std::cos(TWO_PI * r), std::sin(TWO_PI * r)};
}

/// Kahan--Neumaier compensated accumulator for double sums.
class Kahan {
 public:
  void add(double x) {
    double t = s_ + x;
    if (std::abs(s_) >= std::abs(x))
      c_ += (s_ - t) + x;
    else
      c_ += (x - t) + s_;
    s_ = t;
  }
  double value() const { return s_ + c_; }

 private:
  double s_ = 0.0, c_ = 0.0;
};

/// Compensated accumulator for complex sums (independent real/imag channels).
class KahanC {
 public:
  void add(cplx z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  cplx value() const { return {re_.value(), im_.value()}; }

 private:
  Kahan re_, im_;
};

}  // namespace scv
