#include "scv/deltasym.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "scv/charsums.hpp"
#include "scv/quad.hpp"

namespace scv {

namespace {

// Reduce a/b with b > 0 to lowest terms in 128-bit arithmetic.
void reduce_frac(i128& a, i128& b) {
  if (b < 0) {
    a = -a;
    b = -b;
  }
  i128 x = a < 0 ? -a : a;
  i128 y = b;
  while (y != 0) {
    i128 t = x % y;
    x = y;
    y = t;
  }
  if (x > 1) {
    a /= x;
    b /= x;
  }
}

double frac_to_double(i128 num, i128 den) {
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

OmegaWeight build_omega(double Q1, double Q2, const SmoothWindow& rho,
                        const std::vector<u64>& excluded) {
  if (!(Q1 >= 1.0) || !(Q2 >= 1.0))
    throw GuardError("build_omega: need Q1 >= 1 and Q2 >= 1");
  if (Q1 > 1e6 || Q2 > 1e6) throw GuardError("build_omega: scale too large");

  std::vector<u64> primes = primes_up_to(static_cast<u64>(std::floor(Q1)));
  std::vector<u64> admissible;
  for (u64 p : primes) {
    if (2.0 * static_cast<double>(p) < Q1) continue;  // want p >= Q1/2
    bool ok = true;
    for (u64 e : excluded) {
      if (e % p == 0) {
        ok = false;
        break;
      }
    }
    if (ok) admissible.push_back(p);
  }
  if (admissible.empty())
    throw EmptyWeight("build_omega: no admissible prime in [Q1/2, Q1]");

  // t contributes when t/Q2 lies in the open interior of rho's support.
  const double tlo = rho.a() * Q2;
  const double thi = rho.b() * Q2;
  i64 t_first = static_cast<i64>(std::ceil(tlo));
  i64 t_last = static_cast<i64>(std::floor(thi));
  if (t_first < 1) t_first = 1;

  std::map<u64, double> acc;
  for (u64 p : admissible) {
    for (i64 t = t_first; t <= t_last; ++t) {
      double w = rho(static_cast<double>(t) / Q2);
      if (w == 0.0) continue;
      acc[p * static_cast<u64>(t)] += w;
    }
  }

  OmegaWeight out;
  out.Q1 = Q1;
  out.Q2 = Q2;
  out.excluded = excluded;
  for (const auto& [q, w] : acc) {
    if (w == 0.0) continue;
    out.support.emplace_back(q, w);
    out.sup_norm = std::max(out.sup_norm, std::abs(w));
  }
  if (out.support.empty())
    throw EmptyWeight("build_omega: weight vanishes on all moduli");
  return out;
}

OmegaWeight flat_omega(double Q) {
  if (!(Q >= 1.0) || Q > 1e6) throw GuardError("flat_omega: need 1 <= Q <= 1e6");
  u64 lo = static_cast<u64>(std::ceil(Q / 2.0));
  u64 hi = static_cast<u64>(std::floor(Q));
  if (lo < 1) lo = 1;
  OmegaWeight out;
  out.Q1 = Q;
  out.Q2 = 1.0;
  for (u64 q = lo; q <= hi; ++q) out.support.emplace_back(q, 1.0);
  out.sup_norm = 1.0;
  if (out.support.empty()) throw EmptyWeight("flat_omega: empty support");
  return out;
}

JutilaDelta::JutilaDelta(OmegaWeight omega, double delta, SmoothWindow psi)
    : omega_(std::move(omega)),
      delta_(delta),
      psi_(std::move(psi)),
      cache_(psi_) {
  if (!(delta > 0.0) || !(delta < 0.5))
    throw GuardError("JutilaDelta: need delta in (0, 1/2)");
  if (omega_.support.empty()) throw GuardError("JutilaDelta: empty weight");
  Kahan L;
  for (const auto& [q, w] : omega_.support) {
    L.add(static_cast<double>(euler_phi(q)) * w);
    Q_ = std::max(Q_, static_cast<double>(q));
  }
  L_ = L.value();
  if (!(L_ > 0.0)) throw GuardError("JutilaDelta: need L > 0");
}

cplx JutilaDelta::psi_hat(double xi) const { return cache_.fourier(xi); }

double jutila_chi_direct(const JutilaDelta& J, double alpha) {
  alpha -= std::floor(alpha);  // reduce to [0, 1)
  const double d = J.delta();
  const SmoothWindow& psi = J.psi();
  Kahan acc;
  for (const auto& [q, w] : J.omega().support) {
    const double qd = static_cast<double>(q);
    for (u64 a = (q == 1 ? 0 : 1); a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      const double base = alpha - static_cast<double>(a) / qd;
      for (int k = -1; k <= 1; ++k) {
        const double t = (base + k) / d;
        if (t <= psi.a() || t >= psi.b()) continue;
        acc.add(w * psi(t));
      }
    }
  }
  return acc.value() / (d * J.L());
}

double jutila_fourier_coeff(const JutilaDelta& J, i64 ell) {
  Kahan acc;
  for (const auto& [q, w] : J.omega().support)
    acc.add(w * static_cast<double>(ramanujan_sum(q, ell)));
  const cplx hat = J.psi_hat(J.delta() * static_cast<double>(ell));
  const cplx val = acc.value() * hat / J.L();
  if (std::abs(val.imag()) > 1e-9)
    throw NumericalError("jutila_fourier_coeff: coefficient not real");
  return val.real();
}

namespace {

// Fitted decay envelope K4 = max |psihat(xi)| (1 + xi)^4 over a grid
// reaching past xi_max (the transform decays faster than any power, so the
// grid maximum is an honest global ceiling once the grid extends beyond the
// envelope's peak).
double psihat_envelope4(const JutilaDelta& J, double xi_max) {
  double K4 = 0.0;
  const double hi = std::max(xi_max, 4.0) + 40.0;
  for (double xi = 0.0; xi <= hi; xi += 0.25) {
    double v = std::abs(J.psi_hat(xi)) * std::pow(1.0 + xi, 4);
    K4 = std::max(K4, v);
  }
  return K4;
}

}  // namespace

double jutila_l2_error(const JutilaDelta& J, i64 ell_max) {
  if (ell_max < 1) throw GuardError("jutila_l2_error: need ell_max >= 1");
  const double d = J.delta();

  // Trivial coefficient bound |c_l| <= (R/L) |psihat(delta l)| with
  // R = sum_q omega(q) q >= sup_l sum_q omega(q) |r_q(l)|.
  Kahan Rsum;
  for (const auto& [q, w] : J.omega().support)
    Rsum.add(std::abs(w) * static_cast<double>(q));
  const double R = Rsum.value();

  const double K4 = psihat_envelope4(J, d * static_cast<double>(ell_max));
  // sum_{|l| > ell_max} |psihat(delta l)|^2 <= 2 K4^2 int_{ell_max}^inf
  // (1 + d x)^{-8} dx = 2 K4^2 / (7 d (1 + d ell_max)^7).
  const double tail = (R / J.L()) * (R / J.L()) * 2.0 * K4 * K4 /
                      (7.0 * d * std::pow(1.0 + d * static_cast<double>(ell_max), 7));
  if (!(tail < 1e-10))
    throw TailTooLarge("jutila_l2_error: truncation tail above 1e-10");

  Kahan err;
  const double c0 = jutila_fourier_coeff(J, 0);
  err.add((c0 - 1.0) * (c0 - 1.0));
  for (i64 ell = 1; ell <= ell_max; ++ell) {
    const double c = jutila_fourier_coeff(J, ell);
    err.add(2.0 * c * c);  // coefficients are even in ell
  }
  return err.value();
}

double jutila_l2_bound_ratio(const JutilaDelta& J, i64 ell_max) {
  const double err = jutila_l2_error(J, ell_max);
  const double ld = std::abs(std::log(J.delta()));
  const double shape = J.Q() * J.Q() * J.sup_omega() * ld * ld * ld /
                       (J.L() * J.L() * J.delta());
  return err / shape;
}

double jutila_local_rep(const JutilaDelta& J, i64 b, u64 c, double z) {
  if (c < 1) throw GuardError("jutila_local_rep: need c >= 1");
  i64 br = b % static_cast<i64>(c);
  if (br < 0) br += static_cast<i64>(c);
  if (std::gcd(static_cast<u64>(br), c) != 1)
    throw GuardError("jutila_local_rep: need gcd(b, c) = 1");

  const double d = J.delta();
  const SmoothWindow& psi = J.psi();
  Kahan acc;
  for (const auto& [q, w] : J.omega().support) {
    for (u64 dd : divisors(q)) {
      const int mu = mobius(q / dd);
      if (mu == 0) continue;
      const double cd = static_cast<double>(c) * static_cast<double>(dd);
      // psi((l/(c d) + z)/delta) != 0 needs l in cd*(delta*a - z, delta*b - z).
      const double lo = cd * (d * psi.a() - z);
      const double hi = cd * (d * psi.b() - z);
      const i64 res = (br * static_cast<i64>(dd)) % static_cast<i64>(c);
      i64 l0 = static_cast<i64>(std::ceil(lo));
      // First l >= l0 with l = res (mod c).
      i64 shift = (res - l0) % static_cast<i64>(c);
      if (shift < 0) shift += static_cast<i64>(c);
      for (i64 l = l0 + shift; static_cast<double>(l) <= hi;
           l += static_cast<i64>(c)) {
        const double t = (static_cast<double>(l) / cd + z) / d;
        if (t <= psi.a() || t >= psi.b()) continue;
        acc.add(static_cast<double>(mu) * w * psi(t));
      }
    }
  }
  return acc.value() / (d * J.L());
}

std::vector<FareyInterval> farey_intervals(u64 C) {
  if (C < 1 || C > 100000) throw GuardError("farey_intervals: need 1 <= C <= 1e5");
  std::vector<FareyInterval> out;
  for (u64 c = 1; c <= C; ++c) {
    for (u64 b = (c == 1 ? 0 : 1); b < std::max<u64>(c, 1); ++b) {
      if (std::gcd(b, c) != 1) continue;
      FareyNeighbors nb = farey_neighbors(static_cast<i64>(b), c, C);
      FareyInterval iv;
      iv.b = static_cast<i64>(b);
      iv.c = c;
      iv.c_left = nb.cl;
      iv.c_right = nb.cr;
      i128 num = -1;
      i128 den = static_cast<i128>(c) * (c + nb.cl);
      reduce_frac(num, den);
      iv.zm_num = static_cast<i64>(num);
      iv.zm_den = static_cast<u64>(den);
      num = 1;
      den = static_cast<i128>(c) * (c + nb.cr);
      reduce_frac(num, den);
      iv.zp_num = static_cast<i64>(num);
      iv.zp_den = static_cast<u64>(den);
      out.push_back(iv);
    }
  }
  std::sort(out.begin(), out.end(), [](const FareyInterval& x, const FareyInterval& y) {
    return static_cast<i128>(x.b) * y.c < static_cast<i128>(y.b) * x.c;
  });
  return out;
}

double farey_delta(u64 C, i64 n) {
  std::vector<FareyInterval> ivs = farey_intervals(C);
  if (n == 0) {
    // Exact rational accumulation of the interval lengths.
    i128 num = 0, den = 1;
    for (const FareyInterval& iv : ivs) {
      // length = zp - zm = zp_num/zp_den + |zm_num|/zm_den.
      i128 a = static_cast<i128>(iv.zp_num) * iv.zm_den -
               static_cast<i128>(iv.zm_num) * iv.zp_den;
      i128 b = static_cast<i128>(iv.zp_den) * iv.zm_den;
      reduce_frac(a, b);
      i128 nn = num * b + a * den;
      i128 dd = den * b;
      reduce_frac(nn, dd);
      num = nn;
      den = dd;
    }
    return frac_to_double(num, den);
  }
  // int_{zm}^{zp} e((b/c + z) n) dz = e(n b / c) (e(n zp) - e(n zm)) / (2 pi i n).
  KahanC acc;
  const cplx denom = cplx(0.0, 2.0 * PI * static_cast<double>(n));
  for (const FareyInterval& iv : ivs) {
    const i64 c = static_cast<i64>(iv.c);
    i64 r = (n % c) * (iv.b % c) % c;
    if (r < 0) r += c;
    const cplx phase = e_of(static_cast<double>(r) / static_cast<double>(c));
    const double zp = frac_to_double(iv.zp_num, iv.zp_den);
    const double zm = frac_to_double(iv.zm_num, iv.zm_den);
    const cplx ez = e_of(static_cast<double>(n) * zp) - e_of(static_cast<double>(n) * zm);
    acc.add(phase * ez / denom);
  }
  cplx v = acc.value();
  if (std::abs(v.imag()) > 1e-9)
    throw NumericalError("farey_delta: sum not real");
  return v.real();
}

std::pair<double, double> farey_I(u64 c, double z, u64 C) {
  if (c < 1 || c > C) throw GuardError("farey_I: need 1 <= c <= C");
  const double lo = static_cast<double>(C) - static_cast<double>(c);
  double hi;
  if (z == 0.0) {
    hi = std::numeric_limits<double>::infinity();
  } else {
    hi = std::max(1.0 / (static_cast<double>(c) * std::abs(z)) - static_cast<double>(c),
                  static_cast<double>(C));
  }
  return {lo, hi};
}

namespace {

// One side (fixed sign of z) of the expanded dissection sum for modulus c:
//   int_over_z e(n z) (1/c) sum_{t in T(z)} sum_u e(s u t / c) B_s[u] dz,
// where B_s[u] = sum_{b unit} e(s u bbar / c + n b / c), s = +1 for z > 0
// (the constraint t = c_right = -bbar mod c), s = -1 for z < 0
// (t = c_left = +bbar mod c), and T(z) = integers of
// (C - c, min(1/(c|z|) - c, C)].  The t-range is constant between the
// breakpoints |z| = 1/(c(c + k)), so each piece is integrated separately;
// the u-sum depends on t only mod c and is hoisted into a residue table.
double expanded_side(u64 C, i64 n, u64 c, int sign) {
  const double cd = static_cast<double>(c);
  const i64 ci = static_cast<i64>(c);
  std::vector<cplx> roots(c);
  for (u64 r = 0; r < c; ++r)
    roots[r] = e_of(static_cast<double>(r) / cd);

  std::vector<cplx> B(c);
  for (u64 u = 0; u < c; ++u) {
    KahanC s;
    for (u64 b = 1; b < c; ++b) {
      if (std::gcd(b, c) != 1) continue;
      const i64 binv = static_cast<i64>(mod_inverse(b, c));
      i64 r = (sign * static_cast<i64>(u) * binv +
               (n % ci) * static_cast<i64>(b)) %
              ci;
      if (r < 0) r += ci;
      s.add(roots[static_cast<u64>(r)]);
    }
    B[u] = s.value();
  }
  // TW[r] = (1/c) sum_u e(u r / c) B[u]: the unit-sum detector of t = r (c).
  std::vector<cplx> TW(c);
  for (u64 r = 0; r < c; ++r) {
    KahanC s;
    for (u64 u = 0; u < c; ++u) s.add(roots[(u * r) % c] * B[u]);
    TW[r] = s.value() / cd;
  }

  // Piece j (j = 0..c-1) is |z| in (1/(c(c+C-j+...)), ...]: between
  // consecutive breakpoints 1/(c(c+k)) the admissible range is the constant
  // set {C-c+1, ..., C-j}, so the t-sum is a per-piece constant and only the
  // oscillatory factor e(sign n z) is integrated.
  const i64 t_lo = static_cast<i64>(C - c) + 1;
  const double sn = static_cast<double>(sign) * static_cast<double>(n);
  KahanC total;
  double prev_cut = 0.0;
  for (u64 j = 0; j < c; ++j) {
    const i64 t_hi = static_cast<i64>(C - j);
    const double cut = 1.0 / (cd * (cd + static_cast<double>(t_hi)));
    KahanC sj;
    for (i64 t = t_lo; t <= t_hi; ++t) {
      i64 r = t % ci;
      if (r < 0) r += ci;
      sj.add(TW[static_cast<u64>(r)]);
    }
    const cplx S = sj.value();
    auto f = [&](double az) -> cplx { return S * e_of(sn * az); };
    total.add(integrate_osc(f, prev_cut, cut, sn));
    prev_cut = cut;
  }
  return total.value().real();
}

}  // namespace

double farey_expanded_delta(u64 C, i64 n) {
  if (C < 1 || C > 40)
    throw GuardError("farey_expanded_delta: need 1 <= C <= 40");
  Kahan acc;
  // c = 1: the single arc around 0 contributes int over |z| <= 1/(C+1).
  {
    const double zmax = 1.0 / (static_cast<double>(C) + 1.0);
    if (n == 0) {
      acc.add(2.0 * zmax);
    } else {
      // int_{-zmax}^{zmax} e(n z) dz = sin(2 pi n zmax) / (pi n).
      acc.add(std::sin(2.0 * PI * static_cast<double>(n) * zmax) /
              (PI * static_cast<double>(n)));
    }
  }
  for (u64 c = 2; c <= C; ++c) {
    acc.add(expanded_side(C, n, c, +1));
    acc.add(expanded_side(C, n, c, -1));
  }
  return acc.value();
}

}  // namespace scv
