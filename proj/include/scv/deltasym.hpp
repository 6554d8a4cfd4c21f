// Two delta-symbol constructions over Farey fractions of level Q resp. C:
//
//  * the smoothed L2-approximation chi(alpha) built from a weight omega on
//    moduli and a bump psi, with its exact Fourier side
//      c_l = (1/L) sum_q omega(q) r_q(l) psihat(delta l),   c_0 = 1,
//    and the Parseval evaluation of the approximation error; and
//
//  * the exact Farey-dissection identity
//      [n = 0] = sum_{c <= C} sum_b int e((b/c + z) n) dz
//    over mediant-bounded arcs, together with its Fourier-expanded form in
//    which the neighbor-denominator constraint is detected by a unit sum.
//
// Everything here is either an exact identity (checked to quadrature
// accuracy) or a bound monitored as an empirical envelope; nothing is
// estimated by the bounds themselves.
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "scv/arith.hpp"
#include "scv/common.hpp"
#include "scv/windows.hpp"

namespace scv {

/// No admissible prime survives the sieve defining the weight.
class EmptyWeight : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested Fourier truncation leaves a tail above the accuracy target.
class TailTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weight q -> omega(q) on moduli: omega(q) = sum over primes
/// p in [Q1/2, Q1] with p dividing none of `excluded`, and t with pt = q,
/// of rho(t/Q2).  Materialized exactly on its finite support.
struct OmegaWeight {
  double Q1 = 1.0;
  double Q2 = 1.0;
  std::vector<u64> excluded;  // values whose prime factors disqualify p
  std::vector<std::pair<u64, double>> support;  // (q, omega(q)), q ascending
  double sup_norm = 0.0;
};

/// Build the sieved weight.  Pre: Q1, Q2 >= 1.  Throws EmptyWeight when no
/// admissible prime exists in [Q1/2, Q1].
OmegaWeight build_omega(double Q1, double Q2, const SmoothWindow& rho,
                        const std::vector<u64>& excluded);

/// Flat test weight: omega = 1 on the integers of [Q/2, Q].  Pre: Q >= 1.
OmegaWeight flat_omega(double Q);

/// The smoothed delta approximation
///   chi(alpha) = (1/(delta L)) sum_q omega(q) sum_{(a,q)=1} sum_k
///                 psi((alpha - a/q + k)/delta),
/// with L = sum_q phi(q) omega(q).  Immutable after construction except for
/// the internal transform cache (not safe for concurrent Fourier-side calls
/// on one instance; use one instance per thread when scanning in parallel).
class JutilaDelta {
 public:
  /// Pre: delta in (0, 1/2); omega nonempty with L > 0.
  JutilaDelta(OmegaWeight omega, double delta,
              SmoothWindow psi = SmoothWindow::psi_kernel());

  double delta() const { return delta_; }
  double L() const { return L_; }
  /// Nominal modulus scale: the largest q in the support.
  double Q() const { return Q_; }
  double sup_omega() const { return omega_.sup_norm; }
  const OmegaWeight& omega() const { return omega_; }
  const SmoothWindow& psi() const { return psi_; }
  /// Cached Fourier transform of psi at xi.
  cplx psi_hat(double xi) const;

 private:
  OmegaWeight omega_;
  double delta_;
  SmoothWindow psi_;
  double L_ = 0.0;
  double Q_ = 0.0;
  mutable TransformCache cache_;
};

/// Pointwise chi(alpha) by the defining triple sum (alpha reduced mod 1).
double jutila_chi_direct(const JutilaDelta& J, double alpha);

/// Fourier coefficient (1/L) sum_q omega(q) r_q(l) psihat(delta l); real,
/// even in l, and equal to 1 at l = 0.
double jutila_fourier_coeff(const JutilaDelta& J, i64 ell);

/// Parseval evaluation of the L2 approximation error
///   int_0^1 (1 - chi)^2 = (c_0 - 1)^2 + sum_{0 < |l| <= ell_max} c_l^2,
/// guarded: throws TailTooLarge unless the neglected tail is provably
/// below 1e-10 (window-decay envelope times the trivial coefficient bound).
double jutila_l2_error(const JutilaDelta& J, i64 ell_max);

/// jutila_l2_error divided by the predicted shape
/// Q^2 ||omega||_inf |log delta|^3 / (L^2 delta); reported by monitors.
double jutila_l2_bound_ratio(const JutilaDelta& J, i64 ell_max);

/// Local expansion of chi at b/c + z:
///   (1/(delta L)) sum_q omega(q) sum_{d | q} mu(q/d)
///                 sum_{l = b d (mod c)} psi((l/(c d) + z)/delta).
/// Pre: gcd(b, c) = 1.  Agrees with jutila_chi_direct(b/c + z).
double jutila_local_rep(const JutilaDelta& J, i64 b, u64 c, double z);

/// One arc of the level-C Farey dissection: the fraction b/c with its
/// mediant-bounded z-range [z_minus, z_plus],
///   z_minus = -1/(c (c + c_left)),   z_plus = 1/(c (c + c_right)),
/// where c_left, c_right are the neighbor denominators.  Endpoints are exact
/// rationals (the denominators stay below 2 C^2).
struct FareyInterval {
  i64 b = 0;
  u64 c = 1;
  u64 c_left = 1;   // denominator of the left Farey neighbor
  u64 c_right = 1;  // denominator of the right Farey neighbor
  i64 zm_num = 0;
  u64 zm_den = 1;
  i64 zp_num = 0;
  u64 zp_den = 1;
};

/// All arcs for reduced fractions in [0, 1) at level C, ascending in b/c.
/// The arcs tile a unit-length interval exactly.  Pre: 1 <= C <= 10^5.
std::vector<FareyInterval> farey_intervals(u64 C);

/// The dissection identity evaluated with closed-form z-integrals:
/// returns sum_{c <= C} sum_b int e((b/c + z) n) dz, which is [n = 0].
double farey_delta(u64 C, i64 n);

/// The neighbor-denominator range (C - c, max(1/(c|z|) - c, C)] as a pair
/// (lo, hi]; hi is +infinity when z = 0.  Pre: 1 <= c <= C.
std::pair<double, double> farey_I(u64 c, double z, u64 C);

/// The Fourier-expanded form of farey_delta: the neighbor constraint is
/// detected by (1/c) sum_u e(u t / c) e(+-u bbar / c) over t in the
/// admissible range (capped at C), and the z-integrals are evaluated by
/// piecewise quadrature.  Pre: C <= 40 (cost guard).  Equals farey_delta.
double farey_expanded_delta(u64 C, i64 n);

}  // namespace scv
