#include "scv/windows.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_bessel.h>

#include <bit>
#include <cmath>

namespace scv {

namespace {

const double LOG_2PI = std::log(2.0 * PI);
const double LOG_PI = std::log(PI);

struct GslQuiet {
  GslQuiet() { gsl_set_error_handler_off(); }
};
const GslQuiet kGslQuiet;

// Integral of exp(-1/(1-t^2)) over [-1, 1], computed once by quadrature.
double unit_bump_mass() {
  static const double m = 2.0 * integrate(
                                    [](double t) {
                                      double d = 1.0 - t * t;
                                      return d > 0 ? std::exp(-1.0 / d) : 0.0;
                                    },
                                    0.0, 1.0, 1e-15, 1e-14);
  return m;
}

}  // namespace

SmoothWindow SmoothWindow::bump(double a, double b) {
  if (!(a < b)) throw GuardError("SmoothWindow: need a < b");
  // Peak normalization: exp(-1/(1-u^2)) tops out at exp(-1), so scale by e.
  return SmoothWindow(a, b, WindowProfile::standard_bump, 0.0, std::exp(1.0));
}

SmoothWindow SmoothWindow::mass_bump(double a, double b) {
  if (!(a < b)) throw GuardError("SmoothWindow: need a < b");
  double mass = unit_bump_mass() * (b - a) / 2.0;
  return SmoothWindow(a, b, WindowProfile::shifted_bump, 0.0, 1.0 / mass);
}

SmoothWindow SmoothWindow::modified_bump(double a, double b, double s0) {
  if (!(0.0 < a && a < b))
    throw GuardError("SmoothWindow: modified profile needs 0 < a < b");
  return SmoothWindow(a, b, WindowProfile::product_modified, s0, std::exp(1.0));
}

double SmoothWindow::operator()(double t) const {
  double u = (2.0 * t - a_ - b_) / (b_ - a_);
  double d = 1.0 - u * u;
  if (d <= 0.0) return 0.0;
  double v = scale_ * std::exp(-1.0 / d);
  if (profile_ == WindowProfile::product_modified) v *= std::pow(t, -s0_);
  return v;
}

double SmoothWindow::derivative(double t) const {
  double u = (2.0 * t - a_ - b_) / (b_ - a_);
  double d = 1.0 - u * u;
  if (d <= 0.0) return 0.0;
  double core = scale_ * std::exp(-1.0 / d);
  double dcore = core * (-2.0 * u / (d * d)) * (2.0 / (b_ - a_));
  if (profile_ != WindowProfile::product_modified) return dcore;
  double p = std::pow(t, -s0_);
  return dcore * p - s0_ * core * p / t;
}

cplx fourier_transform(const SmoothWindow& w, double xi) {
  return integrate_osc([&](double t) { return w(t) * e_of(-xi * t); }, w.a(),
                       w.b(), xi, 1e-14, 1e-13);
}

cplx mellin_transform(const SmoothWindow& w, cplx s) {
  if (!(w.a() > 0.0))
    throw GuardError("mellin_transform: support must satisfy a > 0");
  double cycles_per_unit =
      std::abs(s.imag()) * (std::log(w.b()) - std::log(w.a())) /
      (TWO_PI * (w.b() - w.a()));
  return integrate_osc(
      [&](double t) {
        return w(t) * std::exp((s - 1.0) * std::log(t));
      },
      w.a(), w.b(), cycles_per_unit, 1e-14, 1e-13);
}

cplx TransformCache::fourier(double xi) {
  u64 key = std::bit_cast<u64>(xi);
  auto it = fcache_.find(key);
  if (it != fcache_.end()) return it->second;
  cplx v = fourier_transform(w_, xi);
  fcache_.emplace(key, v);
  return v;
}

cplx TransformCache::mellin(cplx s) {
  std::pair<u64, u64> key{std::bit_cast<u64>(s.real()),
                          std::bit_cast<u64>(s.imag())};
  auto it = mcache_.find(key);
  if (it != mcache_.end()) return it->second;
  cplx v = mellin_transform(w_, s);
  mcache_.emplace(key, v);
  return v;
}

// ------------------------------------------------------------------ log-gamma

namespace {

// Stirling coefficients B_{2n} / ((2n)(2n-1)).
constexpr double kStirling[] = {
    1.0 / 12,       -1.0 / 360,        1.0 / 1260,  -1.0 / 1680,
    1.0 / 1188,     -691.0 / 360360,   1.0 / 156,   -3617.0 / 122400,
};

// log Gamma for Re z > 0 via upward recursion into |z| >= 16 + Stirling.
// The recursion log Gamma(z) = log Gamma(z+1) - Log z holds with principal
// logs throughout the right half-plane.
cplx lgamma_right(cplx z) {
  cplx shift = 0.0;
  while (std::abs(z) < 16.0) {
    shift += std::log(z);
    z += 1.0;
  }
  cplx zi = 1.0 / z, zi2 = zi * zi;
  cplx series = 0.0;
  cplx p = zi;
  for (double c : kStirling) {
    series += c * p;
    p *= zi2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * LOG_2PI + series - shift;
}

// Continuation of log sin(pi z) from (0,1) into the closed upper half-plane:
// sin(pi z) = (i/2) e(-z/2) (1 - e(z)), and |e(z)| <= 1 keeps 1 - e(z) in the
// right half-plane, so the principal log below never crosses a branch cut.
cplx logsinpi_upper(cplx z) {
  cplx w = std::exp(cplx(0.0, TWO_PI) * z);
  return -std::log(2.0) + cplx(0.0, PI / 2.0) - cplx(0.0, PI) * z +
         std::log(1.0 - w);
}

}  // namespace

cplx log_gamma(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 &&
      z.real() == std::floor(z.real()))
    throw GuardError("log_gamma: pole at non-positive integer");
  if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
  if (z.real() >= 0.5) return lgamma_right(z);
  // Reflection; 1 - z has Re >= 0.5 and Im <= 0.
  cplx lg1mz = std::conj(lgamma_right(std::conj(1.0 - z)));
  return LOG_PI - logsinpi_upper(z) - lg1mz;
}

// --------------------------------------------------------------------- bessel

double bessel_y0(double x) {
  if (!(x > 0.0)) throw GuardError("bessel_y0: need x > 0");
  gsl_sf_result r;
  int status = gsl_sf_bessel_Y0_e(x, &r);
  if (status != 0 && status != GSL_EUNDRFLW)
    throw NumericalError("bessel_y0 failed at x = " + std::to_string(x));
  return r.val;
}

double bessel_k0_scaled(double x) {
  if (!(x > 0.0)) throw GuardError("bessel_k0_scaled: need x > 0");
  gsl_sf_result r;
  int status = gsl_sf_bessel_K0_scaled_e(x, &r);
  if (status != 0)
    throw NumericalError("bessel_k0_scaled failed at x = " + std::to_string(x));
  return r.val;
}

double bessel_k0(double x) {
  // exp(-x) * scaled value keeps full relative accuracy until the final
  // product underflows (x beyond ~745), where it degrades to 0 gracefully.
  return std::exp(-x) * bessel_k0_scaled(x);
}

}  // namespace scv
