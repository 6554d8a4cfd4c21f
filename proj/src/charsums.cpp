#include "scv/charsums.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace scv {

namespace {

constexpr u32 kNoLog = 0xffffffffu;

// One cyclic factor of (Z/q)^*, living inside the component mod pk.
struct CyclicFactor {
  u64 order = 1;
  u64 pk = 1;
  std::vector<u32> dlog;  // indexed by residue mod pk; kNoLog on non-units
};

// One prime-power component p^k of q, owning factors [f_begin, f_begin+f_count).
struct Component {
  u64 p = 1;
  u32 k = 0;
  u64 pk = 1;
  std::size_t f_begin = 0;
  std::size_t f_count = 0;
};

u64 find_primitive_root(u64 p, u64 pk) {
  auto fac = factorize(p - 1);
  u64 g = 2;
  for (;; ++g) {
    bool ok = true;
    for (const auto& pe : fac) {
      if (pow_mod(g, (p - 1) / pe.p, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) break;
  }
  // Lift so g generates mod p^2 (hence mod every p^k).
  if (pk > p && pow_mod(g, p - 1, p * p) == 1) g += p;
  return g;
}

void append_factors(u64 p, u32 k, std::vector<CyclicFactor>& out) {
  u64 pk = 1;
  for (u32 i = 0; i < k; ++i) pk *= p;
  if (p == 2) {
    if (k == 1) {
      CyclicFactor f;
      f.order = 1;
      f.pk = pk;
      f.dlog.assign(pk, kNoLog);
      f.dlog[1] = 0;
      out.push_back(std::move(f));
    } else if (k == 2) {
      CyclicFactor f;
      f.order = 2;
      f.pk = pk;
      f.dlog.assign(pk, kNoLog);
      f.dlog[1] = 0;
      f.dlog[3] = 1;
      out.push_back(std::move(f));
    } else {
      // (Z/2^k)^* = {+-1} x <5>
      CyclicFactor sgn, five;
      sgn.order = 2;
      five.order = pk / 4;
      sgn.pk = five.pk = pk;
      sgn.dlog.assign(pk, kNoLog);
      five.dlog.assign(pk, kNoLog);
      for (u64 s = 0; s < 2; ++s) {
        u64 x = (s == 0) ? 1 : pk - 1;
        for (u64 j = 0; j < pk / 4; ++j) {
          sgn.dlog[x] = u32(s);
          five.dlog[x] = u32(j);
          x = (x * 5) % pk;
        }
      }
      out.push_back(std::move(sgn));
      out.push_back(std::move(five));
    }
  } else {
    u64 phi = pk / p * (p - 1);
    CyclicFactor f;
    f.order = phi;
    f.pk = pk;
    f.dlog.assign(pk, kNoLog);
    u64 g = find_primitive_root(p, pk);
    u64 x = 1;
    for (u64 j = 0; j < phi; ++j) {
      f.dlog[x] = u32(j);
      x = (x * g) % pk;
    }
    out.push_back(std::move(f));
  }
}

std::vector<u64> units_mod(u64 m) {
  std::vector<u64> us;
  if (m == 1) {
    us.push_back(0);
    return us;
  }
  for (u64 x = 1; x < m; ++x)
    if (std::gcd(x, m) == 1) us.push_back(x);
  return us;
}

// inv[x] = x^{-1} mod m for units, 0 elsewhere.
std::vector<u64> inverse_table(u64 m) {
  std::vector<u64> inv(m, 0);
  if (m == 1) return inv;  // inv[0] unused; mod-1 sums are handled explicitly
  for (u64 x = 1; x < m; ++x)
    if (std::gcd(x, m) == 1) inv[x] = mod_inverse(i64(x), m);
  return inv;
}

std::vector<cplx> roots_of_unity(u64 m) {
  std::vector<cplx> r(m);
  for (u64 j = 0; j < m; ++j) r[j] = e_of(double(j) / double(m));
  return r;
}

u64 reduce_mod(i64 a, u64 m) {
  i64 mm = i64(m);
  return u64(((a % mm) + mm) % mm);
}

}  // namespace

DirichletCharacter DirichletCharacter::induce(u64 qq) const {
  if (qq == 0 || qq % q_ != 0)
    throw GuardError("induce: target modulus must be a positive multiple");
  DirichletCharacter out;
  out.q_ = qq;
  out.lambda_ = lambda_;
  out.even_ = even_;
  out.conductor_ = conductor_;
  out.exps_.assign(qq, -1);
  for (u64 x = 0; x < qq; ++x) {
    if (std::gcd(x, qq) != 1) continue;
    out.exps_[x] = exps_[x % q_];
  }
  if (qq == 1) out.exps_[0] = 0;
  return out;
}

CharacterTable::CharacterTable(u64 q) : q_(q) {
  if (q < 1 || q > 1000000)
    throw GuardError("CharacterTable: modulus must be in [1, 10^6]");
  u64 phi = euler_phi(q);
  if (double(phi) * double(q) > 2.0e7)
    throw GuardError("CharacterTable: phi(q)*q exceeds the table memory guard");

  std::vector<CyclicFactor> factors;
  std::vector<Component> comps;
  for (const auto& pe : factorize(q)) {
    Component comp;
    comp.p = pe.p;
    comp.k = pe.e;
    comp.pk = 1;
    for (u32 i = 0; i < pe.e; ++i) comp.pk *= pe.p;
    comp.f_begin = factors.size();
    append_factors(pe.p, pe.e, factors);
    comp.f_count = factors.size() - comp.f_begin;
    comps.push_back(comp);
  }
  const std::size_t nf = factors.size();

  u64 lambda = 1;
  for (const auto& f : factors) lambda = std::lcm(lambda, f.order);

  // Per-residue factor logs, flattened; unit iff every component is a unit.
  std::vector<u64> logs(q * std::max<std::size_t>(nf, 1), 0);
  std::vector<char> unit(q, 1);
  for (u64 x = 0; x < q; ++x) {
    if (q > 1 && std::gcd(x, q) != 1) {
      unit[x] = 0;
      continue;
    }
    for (std::size_t f = 0; f < nf; ++f) {
      u32 d = factors[f].dlog[x % factors[f].pk];
      logs[x * nf + f] = d;
    }
  }

  chars_.reserve(phi);
  for (u64 idx = 0; idx < phi; ++idx) {
    DirichletCharacter ch;
    ch.q_ = q;
    ch.lambda_ = lambda;
    ch.exps_.assign(q, -1);

    // Mixed-radix digits of idx give the exponent along each factor.
    std::vector<u64> a(nf, 0), coef(nf, 0);
    u64 rem = idx;
    for (std::size_t f = 0; f < nf; ++f) {
      a[f] = rem % factors[f].order;
      rem /= factors[f].order;
      coef[f] = (a[f] * (lambda / factors[f].order)) % lambda;
    }

    for (u64 x = 0; x < q; ++x) {
      if (!unit[x]) continue;
      u64 r = 0;
      for (std::size_t f = 0; f < nf; ++f) r += coef[f] * logs[x * nf + f];
      ch.exps_[x] = i64(r % lambda);
    }

    ch.even_ = (q <= 2) || (ch.exps_[q - 1] == 0);

    // Conductor by direct period testing per prime power: for each component
    // p^k, the p-part is p^j with j minimal such that the component character
    // is trivial on every unit x = 1 (mod p^j).
    u64 cond = 1;
    for (const auto& comp : comps) {
      auto comp_exp = [&](u64 x) -> u64 {
        u64 r = 0;
        for (std::size_t f = comp.f_begin; f < comp.f_begin + comp.f_count;
             ++f)
          r += coef[f] * factors[f].dlog[x];
        return r % lambda;
      };
      u32 j = comp.k;
      for (u32 cand = 0; cand <= comp.k; ++cand) {
        u64 pj = 1;
        for (u32 i = 0; i < cand; ++i) pj *= comp.p;
        bool trivial = true;
        for (u64 x = 1; x < comp.pk && trivial; x += pj) {
          if (std::gcd(x, comp.pk) != 1) continue;
          if (comp_exp(x) != 0) trivial = false;
        }
        if (trivial) {
          j = cand;
          break;
        }
      }
      for (u32 i = 0; i < j; ++i) cond *= comp.p;
    }
    ch.conductor_ = cond;
    chars_.push_back(std::move(ch));
  }
}

i64 ramanujan_sum(u64 q, i64 l) {
  if (q == 0) throw GuardError("ramanujan_sum: q must be positive");
  u64 g = std::gcd(q, u64(l < 0 ? -l : l));  // gcd(q, 0) = q
  i64 acc = 0;
  for (u64 d : divisors(g))
    if (q % (q / d) == 0) acc += i64(d) * mobius(q / d);
  return acc;
}

double kloosterman(i64 a, i64 b, u64 c) {
  if (c == 0) throw GuardError("kloosterman: modulus must be positive");
  if (c == 1) return 1.0;
  u64 ar = reduce_mod(a, c), br = reduce_mod(b, c);
  const bool use_table = c <= 2000000;
  std::vector<cplx> roots;
  if (use_table) roots = roots_of_unity(c);
  KahanC acc;
  for (u64 x = 1; x < c; ++x) {
    if (std::gcd(x, c) != 1) continue;
    u64 xb = mod_inverse(i64(x), c);
    u64 num = (u64(u128(ar) * x % c) + u64(u128(br) * xb % c)) % c;
    acc.add(use_table ? roots[num] : e_of(double(num) / double(c)));
  }
  cplx s = acc.value();
  if (std::abs(s.imag()) > 1e-9 * (1.0 + std::abs(s.real())))
    throw NumericalError("kloosterman: accumulated imaginary part too large");
  double g = double(std::gcd(std::gcd(ar, br), c));
  double weil = double(tau_k(2, c)) * std::sqrt(g) * std::sqrt(double(c));
  if (std::abs(s.real()) > weil + 1e-6)
    throw NumericalError("kloosterman: Weil bound violated");
  return s.real();
}

cplx hyper_kloosterman(i64 n, u64 d, u32 m) {
  if (d == 0) throw GuardError("hyper_kloosterman: modulus must be positive");
  if (m < 2) throw GuardError("hyper_kloosterman: m must be >= 2");
  if (d == 1) return 1.0;
  u64 nr = reduce_mod(n, d);

  u64 phi = euler_phi(d);
  if (double(m - 1) * double(d) * double(phi) > 1.0e8)
    throw GuardError("hyper_kloosterman: cost guard exceeded");

  auto roots = roots_of_unity(d);
  auto inv = inverse_table(d);
  auto us = units_mod(d);

  // A_j[r] = Kl_j(r; d), built by Kl_j(r) = sum_h e(h/d) Kl_{j-1}(r hbar).
  std::vector<cplx> prev(d), cur(d);
  for (u64 r = 0; r < d; ++r) prev[r] = roots[r];
  for (u32 j = 2; j <= m; ++j) {
    for (u64 r = 0; r < d; ++r) {
      KahanC acc;
      for (u64 h : us) acc.add(roots[h] * prev[u64(u128(r) * inv[h] % d)]);
      cur[r] = acc.value();
    }
    std::swap(prev, cur);
  }
  cplx val = prev[nr];
  if (m == 3 && is_prime(d) && std::gcd(nr, d) == 1) {
    if (std::abs(val) > 3.0 * double(d) + 1e-6)
      throw NumericalError("hyper_kloosterman: Deligne bound violated");
  }
  return val;
}

cplx gauss_sum(const DirichletCharacter& chi) {
  u64 q = chi.modulus();
  if (q == 1) return 1.0;
  double lam = double(chi.exponent_denominator());
  KahanC acc;
  for (u64 h = 0; h < q; ++h) {
    i64 r = chi.exponent_at(h);
    if (r < 0) continue;
    acc.add(e_of(double(r) / lam + double(h) / double(q)));
  }
  cplx tau = acc.value();
  if (chi.is_primitive()) {
    double rq = std::sqrt(double(q));
    if (std::abs(std::abs(tau) - rq) > 1e-9 * std::max(1.0, rq))
      throw NumericalError("gauss_sum: primitive modulus check failed");
  }
  return tau;
}

cplx sigma_sum(i64 h, i64 d, u64 n1, i64 n2, u64 c) {
  if (c == 0 || n1 == 0 || c % n1 != 0)
    throw GuardError("sigma_sum: need c >= 1 and n1 | c");
  if (c == 1) return 1.0;
  u64 gam = c / n1;
  u64 hr = reduce_mod(h, c), dr = reduce_mod(d, c);

  // stab[v] = S(v, n2; gam)
  std::vector<cplx> stab(gam, 0.0);
  if (gam == 1) {
    stab[0] = 1.0;
  } else {
    u64 n2r = reduce_mod(n2, gam);
    auto roots = roots_of_unity(gam);
    auto inv = inverse_table(gam);
    auto us = units_mod(gam);
    std::vector<KahanC> acc(gam);
    for (u64 x : us) {
      cplx cx = roots[u64(u128(n2r) * inv[x] % gam)];
      for (u64 v = 0; v < gam; ++v) acc[v].add(cx * roots[v * x % gam]);
    }
    for (u64 v = 0; v < gam; ++v) stab[v] = acc[v].value();
  }

  auto rc = roots_of_unity(c);
  KahanC total;
  for (u64 b = 1; b < c; ++b) {
    if (std::gcd(b, c) != 1) continue;
    u64 bb = mod_inverse(i64(b), c);
    u64 num = (u64(u128(hr) * b % c) + u64(u128(dr) * bb % c)) % c;
    total.add(rc[num] * stab[bb % gam]);
  }
  return total.value();
}

double sigma_sum_ratio(i64 h, i64 d, u64 n1, i64 n2, u64 c) {
  cplx s = sigma_sum(h, d, n1, n2, c);
  auto split = sqfree_sqfull_split(c);
  u64 c1 = split.first, c2 = split.second;
  u64 g = std::gcd(std::gcd(n1, c1),
                   std::gcd(u64(d < 0 ? -d : d), u64(h < 0 ? -h : h)));
  double denom =
      double(c) * std::sqrt(double(c2)) * std::sqrt(double(g) / double(n1));
  return std::abs(s) / denom;
}

cplx t_sum(i64 h, i64 d1, i64 d2, u64 n1, i64 n2, u64 p1, u64 p2, u64 t) {
  if (!is_prime(p1) || !is_prime(p2))
    throw GuardError("t_sum: p1 and p2 must be prime");
  if (t == 0 || n1 == 0 || t % n1 != 0)
    throw GuardError("t_sum: need t >= 1 and n1 | t");
  u64 lam = std::lcm(p1, p2) * t;
  if (lam > 3000) throw GuardError("t_sum: [p1,p2]*t exceeds the cost guard");

  u64 cs[2] = {p1 * t, p2 * t};
  i64 ds[2] = {d1, d2};
  std::vector<cplx> F[2];
  for (int i = 0; i < 2; ++i) {
    u64 c = cs[i], gam = c / n1;
    u64 hr = reduce_mod(h, c), dr = reduce_mod(ds[i], c);
    auto rc = roots_of_unity(c);
    auto rg = roots_of_unity(gam);

    // W[r] = sum over units v mod c, v = r mod gam, of e((vbar h + v d)/c)
    std::vector<KahanC> w(gam);
    for (u64 v = 1; v < c; ++v) {
      if (std::gcd(v, c) != 1) continue;
      u64 vb = mod_inverse(i64(v), c);
      u64 num = (u64(u128(vb) * hr % c) + u64(u128(v) * dr % c)) % c;
      w[v % gam].add(rc[num]);
    }

    // G[u] = sum_r W[r] e(r u / gam)
    std::vector<cplx> G(gam);
    for (u64 u = 0; u < gam; ++u) {
      KahanC acc;
      for (u64 r = 0; r < gam; ++r) acc.add(w[r].value() * rg[r * u % gam]);
      G[u] = acc.value();
    }

    // F[x] = sum over units u mod gam of e(x ubar / gam) G[u]
    auto inv = inverse_table(gam);
    auto us = units_mod(gam);
    F[i].assign(gam, 0.0);
    if (gam == 1) {
      F[i][0] = G[0];
    } else {
      for (u64 x = 0; x < gam; ++x) {
        KahanC acc;
        for (u64 u : us) acc.add(rg[x * inv[u] % gam] * G[u]);
        F[i][x] = acc.value();
      }
    }
  }

  u64 n2r = reduce_mod(n2, lam);
  auto rl = roots_of_unity(lam);
  u64 g1 = cs[0] / n1, g2 = cs[1] / n1;
  KahanC total;
  for (u64 x = 0; x < lam; ++x)
    total.add(rl[u64(u128(n2r) * x % lam)] * F[0][x % g1] *
              std::conj(F[1][x % g2]));
  cplx val = total.value();

  // Provable vanishing: coprime h n1, distinct moduli, n2 sharing a factor.
  u64 hn1 = u64(h < 0 ? -h : h) % (p1 * p2) * (n1 % (p1 * p2)) % (p1 * p2);
  bool coprime_case = std::gcd(hn1, p1 * p2) == 1;
  u64 n2g = std::gcd(reduce_mod(n2, p1 * p2), p1 * p2);
  if (coprime_case && p1 != p2 && n2g > 1) {
    double norm = 1.0 + double(lam) * std::pow(double(p1) * double(p2), 1.5) *
                            std::pow(double(t), 2.5);
    if (std::abs(val) > 1e-9 * norm)
      throw NumericalError("t_sum: paired sum expected to vanish");
  }
  return val;
}

cplx k_dual(i64 n, u64 q, KDualForm form) {
  if (q == 0) throw GuardError("k_dual: q must be positive");
  u64 nr = reduce_mod(n, q);
  if (q > 1 && std::gcd(nr, q) != 1)
    throw GuardError("k_dual: n must be coprime to q");
  double q32 = std::pow(double(q), 1.5);

  if (form == KDualForm::definition) {
    KahanC acc;
    for (u64 d : divisors(q)) {
      i64 mu = mobius(q / d);
      if (mu == 0) continue;
      CharacterTable tab(d);
      for (const auto& chi : tab.characters()) {
        if (!chi.is_even()) continue;  // (1 + chi(-1))/2 kills odd chi
        cplx tau = gauss_sum(chi.induce(q));
        acc.add(double(mu) * tau * tau * tau * std::conj(chi(i64(nr))));
      }
    }
    return acc.value() / q32;
  }

  KahanC acc;
  for (u64 d : divisors(q)) {
    u64 e = q / d;
    if (std::gcd(d, e) != 1 || mobius(e) == 0) continue;
    u64 a = 0;
    if (d > 1) {
      u64 e3 = u64(u128(e % d) * (e % d) % d * (e % d) % d);
      u64 w = mod_inverse(i64(e3), d);
      a = u64(u128(nr % d) * w % d);
    }
    cplx kl = hyper_kloosterman(i64(a), d, 3) +
              hyper_kloosterman(-i64(a), d, 3);
    acc.add(double(euler_phi(d)) * kl);
  }
  return acc.value() / (2.0 * q32);
}

}  // namespace scv
