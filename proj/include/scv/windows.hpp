// Smooth compactly supported test functions, their Fourier and Mellin
// transforms, and the special functions (complex log-gamma, Bessel Y0/K0)
// that the summation-formula modules are built on.
//
// Window profiles
//   standard_bump    w(t) = exp(-1/(1-u^2)) with u = (2t-a-b)/(b-a),
//                    peak-normalized: w((a+b)/2) = 1, supported on [a, b].
//   shifted_bump     the same bump rescaled to unit mass: psi = bump / I0
//                    with I0 = integral of the bump over its support, so
//                    that the integral of psi is exactly 1.  This is the
//                    kernel profile used by the delta-method module.
//   product_modified standard bump multiplied by t^(-s0); requires a > 0.
//
// Transform conventions
//   fourier_transform(w, xi) = integral w(t) e(-xi t) dt,  e(x) = exp(2 pi i x)
//   mellin_transform(w, s)   = integral w(t) t^(s-1) dt    (requires a > 0)
#pragma once

#include <unordered_map>

#include "scv/common.hpp"
#include "scv/quad.hpp"

namespace scv {

enum class WindowProfile { standard_bump, shifted_bump, product_modified };

/// A smooth window supported on [a, b], evaluable with its exact analytic
/// derivative.  Instances are value types; copies are cheap.
class SmoothWindow {
 public:
  /// Standard peak-normalized bump on [a, b].  Pre: a < b.
  static SmoothWindow bump(double a, double b);

  /// Mass-normalized bump on [a, b] (integral exactly 1).  Pre: a < b.
  static SmoothWindow mass_bump(double a, double b);

  /// The canonical delta-method kernel: mass-normalized bump on [-1, 1].
  static SmoothWindow psi_kernel() { return mass_bump(-1.0, 1.0); }

  /// Standard bump on [a, b] times t^(-s0).  Pre: 0 < a < b.
  static SmoothWindow modified_bump(double a, double b, double s0);

  double a() const { return a_; }
  double b() const { return b_; }
  WindowProfile profile() const { return profile_; }
  double modifier() const { return s0_; }

  /// Window value at t (0 outside the support).
  double operator()(double t) const;

  /// Exact analytic derivative at t (0 outside the support).
  double derivative(double t) const;

 private:
  SmoothWindow(double a, double b, WindowProfile p, double s0, double scale)
      : a_(a), b_(b), profile_(p), s0_(s0), scale_(scale) {}
  double a_, b_;
  WindowProfile profile_;
  double s0_;     // exponent of the t^(-s0) modifier (product_modified only)
  double scale_;  // 1 for peak normalization, 1/I0 for mass normalization
};

/// make_bump(a, b): the standard peak-normalized bump window on [a, b].
inline SmoothWindow make_bump(double a, double b) {
  return SmoothWindow::bump(a, b);
}

/// Fourier transform  integral w(t) e(-xi t) dt  to absolute accuracy 1e-12.
cplx fourier_transform(const SmoothWindow& w, double xi);

/// Mellin transform  integral w(t) t^(s-1) dt  to absolute accuracy 1e-12.
/// Pre: the support satisfies a > 0.  Throws GuardError otherwise.
cplx mellin_transform(const SmoothWindow& w, cplx s);

/// Memoizing wrapper around the two transforms of a fixed window.  Repeated
/// queries at the same point return bit-identical values; fresh instances
/// recompute through the same deterministic quadrature, so results agree
/// across runs to full precision (far better than the 1e-12 contract).
class TransformCache {
 public:
  explicit TransformCache(const SmoothWindow& w) : w_(w) {}

  const SmoothWindow& window() const { return w_; }
  cplx fourier(double xi);
  cplx mellin(cplx s);
  std::size_t size() const { return fcache_.size() + mcache_.size(); }

 private:
  SmoothWindow w_;
  std::unordered_map<u64, cplx> fcache_;
  struct PairHash {
    std::size_t operator()(const std::pair<u64, u64>& k) const {
      return std::hash<u64>()(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
    }
  };
  std::unordered_map<std::pair<u64, u64>, cplx, PairHash> mcache_;
};

/// Principal-branch complex log-gamma, relative accuracy 1e-12.
/// Agrees with the real log Gamma on (0, infinity) and is analytic on the
/// plane cut along (-infinity, 0].  Throws GuardError at the poles
/// (non-positive integers).
cplx log_gamma(cplx z);

/// Bessel Y0(x).  Pre: x > 0.  Relative accuracy better than 1e-10 on
/// [1e-3, 1e3].
double bessel_y0(double x);

/// Bessel K0(x).  Pre: x > 0.  Relative accuracy better than 1e-10 wherever
/// the value is representable (underflows to 0 for x beyond ~745).
double bessel_k0(double x);

/// exp(x) * K0(x), finite and accurate over the whole range [1e-3, 1e3].
double bessel_k0_scaled(double x);

}  // namespace scv
