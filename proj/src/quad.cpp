#include "scv/quad.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

namespace scv {

namespace {

// Integrals nest (e.g. a transform evaluated inside an outer quadrature), so
// each recursion depth gets its own workspace, per thread.
struct WsPool {
  std::vector<gsl_integration_cquad_workspace*> pool;
  int depth = 0;
  WsPool() { gsl_set_error_handler_off(); }
  ~WsPool() {
    for (auto* w : pool) gsl_integration_cquad_workspace_free(w);
  }
};

thread_local WsPool g_ws_pool;

struct WsLease {
  gsl_integration_cquad_workspace* ws;
  WsLease() {
    if (g_ws_pool.depth == int(g_ws_pool.pool.size()))
      g_ws_pool.pool.push_back(gsl_integration_cquad_workspace_alloc(400));
    ws = g_ws_pool.pool[g_ws_pool.depth++];
  }
  ~WsLease() { --g_ws_pool.depth; }
};

double gsl_call(double x, void* p) {
  return (*static_cast<const std::function<double(double)>*>(p))(x);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, double rel_tol) {
  if (a == b) return 0.0;
  gsl_function gf;
  gf.function = &gsl_call;
  gf.params = const_cast<std::function<double(double)>*>(&f);
  double result = 0.0, abserr = 0.0;
  size_t nevals = 0;
  WsLease lease;
  int status = gsl_integration_cquad(&gf, a, b, abs_tol, rel_tol, lease.ws,
                                     &result, &abserr, &nevals);
  if (status != 0 && status != GSL_EMAXITER && status != GSL_EROUND)
    throw NumericalError("integrate: quadrature failed with status " +
                         std::to_string(status));
  return result;
}

cplx integrate_c(const std::function<cplx(double)>& f, double a, double b,
                 double abs_tol, double rel_tol) {
  double re = integrate([&](double x) { return f(x).real(); }, a, b, abs_tol,
                        rel_tol);
  double im = integrate([&](double x) { return f(x).imag(); }, a, b, abs_tol,
                        rel_tol);
  return {re, im};
}

cplx integrate_osc(const std::function<cplx(double)>& f, double a, double b,
                   double freq, double abs_tol, double rel_tol) {
  if (a == b) return 0.0;
  double cycles = std::abs(freq) * (b - a);
  int panels = std::max(1, int(std::ceil(2.0 * cycles)));
  if (panels == 1) return integrate_c(f, a, b, abs_tol, rel_tol);
  // Split the tolerance across panels so the total stays within budget, but
  // keep the per-panel goal above what the rule can certify: below ~1e-15 a
  // smooth panel subdivides to the workspace limit chasing sub-epsilon error
  // estimates, multiplying the cost by orders of magnitude for no accuracy.
  double panel_abs = std::max(abs_tol / panels, 1e-15);
  double h = (b - a) / panels;
  KahanC acc;
  for (int i = 0; i < panels; ++i) {
    double lo = a + i * h;
    double hi = (i + 1 == panels) ? b : lo + h;
    acc.add(integrate_c(f, lo, hi, panel_abs, rel_tol));
  }
  return acc.value();
}

}  // namespace scv
