// Thin adaptive-quadrature layer over GSL's CQUAD routine.
//
// All integrals in the library go through these wrappers so that tolerance
// handling, thread-local workspace reuse, and oscillatory panel splitting are
// implemented exactly once.  Complex integrands are integrated as two real
// integrals.  For integrands containing a factor e(freq*t) the interval is
// pre-split into sub-period panels before adaptive refinement, which keeps
// CQUAD honest at high frequency.
#pragma once

#include <functional>

#include "scv/common.hpp"

namespace scv {

/// Adaptive integral of a real function over [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-13, double rel_tol = 1e-12);

/// Adaptive integral of a complex function over [a, b].
cplx integrate_c(const std::function<cplx(double)>& f, double a, double b,
                 double abs_tol = 1e-13, double rel_tol = 1e-12);

/// Adaptive integral of a complex function over [a, b] whose dominant
/// oscillation is e(freq * t); the interval is split into panels no longer
/// than half a period before each panel is integrated adaptively.
cplx integrate_osc(const std::function<cplx(double)>& f, double a, double b,
                   double freq, double abs_tol = 1e-13,
                   double rel_tol = 1e-12);

}  // namespace scv
