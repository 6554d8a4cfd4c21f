#include "scv/arith.hpp"

#include <algorithm>
#include <numeric>

namespace scv {

namespace {

constexpr u64 kMaxN = (u64(1) << 63);  // exclusive upper bound for inputs

u64 mul_mod(u64 a, u64 b, u64 m) { return u64((u128)a * b % m); }

u64 pow_mod_(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  u64 x = pow_mod_(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent-cycle Pollard rho; returns a nontrivial factor of composite odd n.
u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {  // deterministic seed schedule
    auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
    u64 x = 2, y = 2, d = 1;
    u64 power = 1, lam = 1;
    while (d == 1) {
      if (power == lam) {
        x = y;
        power <<= 1;
        lam = 0;
      }
      y = f(y);
      ++lam;
      u64 diff = x > y ? x - y : y - x;
      if (diff == 0) break;  // cycle without factor: try next c
      d = std::gcd(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

u64 binom_u64(u64 n, u64 k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (u64 i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // always exact: r holds binom(n-k+i, i)
    if (r > (u128)UINT64_MAX)
      throw GuardError("tau_k: value exceeds 64 bits");
  }
  return u64(r);
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull})
    if (!miller_rabin(n, a)) return false;
  return true;
}

std::vector<PrimePower> factorize(u64 n) {
  if (n < 1 || n >= kMaxN) throw GuardError("factorize: n out of range");
  std::vector<u64> ps;
  factor_rec(n, ps);
  std::sort(ps.begin(), ps.end());
  std::vector<PrimePower> out;
  for (size_t i = 0; i < ps.size();) {
    size_t j = i;
    while (j < ps.size() && ps[j] == ps[i]) ++j;
    out.push_back({ps[i], u32(j - i)});
    i = j;
  }
  return out;
}

int mobius(u64 n) {
  auto f = factorize(n);
  for (auto& pp : f)
    if (pp.e >= 2) return 0;
  return (f.size() % 2 == 0) ? 1 : -1;
}

u64 euler_phi(u64 n) {
  u64 r = n;
  for (auto& pp : factorize(n)) r = r / pp.p * (pp.p - 1);
  return r;
}

u64 tau_k(u32 k, u64 n) {
  if (k < 1) throw GuardError("tau_k: k must be >= 1");
  u64 r = 1;
  for (auto& pp : factorize(n)) {
    u64 b = binom_u64(u64(pp.e) + k - 1, k - 1);
    if (b != 0 && r > UINT64_MAX / b)
      throw GuardError("tau_k: value exceeds 64 bits");
    r *= b;
  }
  return r;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (auto& pp : factorize(n)) {
    size_t sz = out.size();
    u64 q = 1;
    for (u32 i = 1; i <= pp.e; ++i) {
      q *= pp.p;
      for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u32 valuation(u64 n, u64 p) {
  if (n == 0 || p < 2) throw GuardError("valuation: need n >= 1, p >= 2");
  u32 v = 0;
  while (n % p == 0) n /= p, ++v;
  return v;
}

u64 mod_inverse(i64 a, u64 m) {
  if (m == 0) throw std::invalid_argument("mod_inverse: modulus must be >= 1");
  if (m == 1) return 0;
  i64 mm = i64(m);
  i64 r0 = mm, r1 = ((a % mm) + mm) % mm;
  i64 t0 = 0, t1 = 1;
  while (r1 != 0) {
    i64 q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1)
    throw std::invalid_argument("mod_inverse: argument not coprime to modulus");
  return u64(((t0 % mm) + mm) % mm);
}

u64 pow_mod(u64 b, u64 e, u64 m) {
  if (m == 0) throw std::invalid_argument("pow_mod: modulus must be >= 1");
  return pow_mod_(b, e, m);
}

std::pair<u64, u64> sqfree_sqfull_split(u64 n) {
  u64 f1 = 1, f2 = 1;
  for (auto& pp : factorize(n)) {
    if (pp.e == 1)
      f1 *= pp.p;
    else
      for (u32 i = 0; i < pp.e; ++i) f2 *= pp.p;
  }
  return {f1, f2};
}

std::pair<u64, u64> b_infinity_part(u64 n, u64 c) {
  if (n < 1 || c < 1) throw GuardError("b_infinity_part: need n, c >= 1");
  u64 n1 = 1;
  u64 g = std::gcd(n, c);
  while (g != 1) {
    // Peel off every factor of n supported on the primes of c.
    while (true) {
      u64 h = std::gcd(n, g);
      if (h == 1) break;
      n1 *= h;
      n /= h;
    }
    g = std::gcd(n, c);
  }
  return {n1, n};
}

FareyNeighbors farey_neighbors(i64 b, i64 c, i64 C) {
  if (c < 1 || c > C) throw std::invalid_argument("farey_neighbors: need 1 <= c <= C");
  if (!((0 <= b && b < c) || (b == 0 && c == 1)))
    throw std::invalid_argument("farey_neighbors: need 0 <= b < c");
  if (std::gcd(b, c) != 1)
    throw std::invalid_argument("farey_neighbors: fraction not reduced");
  // Successor denominator: br*c - b*cr == 1 forces cr == -inv(b) (mod c);
  // predecessor: b*cl - bl*c == 1 forces cl == +inv(b) (mod c).  Each has a
  // unique representative in (C - c, C].
  i64 binv = (c == 1) ? 0 : i64(mod_inverse(b, u64(c)));
  auto lift = [&](i64 r) {  // representative of r mod c in (C - c, C]
    i64 x = ((r % c) + c) % c;
    x += ((C - x) / c) * c;
    return x;
  };
  i64 cl = lift(binv), cr = lift(-binv);
  i64 bl = (b * cl - 1) / c;
  i64 br = (b * cr + 1) / c;
  return {bl, cl, br, cr};
}

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> out;
  if (n < 2) return out;
  std::vector<bool> comp(n + 1, false);
  for (u64 i = 2; i <= n; ++i) {
    if (!comp[i]) {
      out.push_back(i);
      for (u64 j = i * i; j <= n; j += i) comp[j] = true;
    }
  }
  return out;
}

std::vector<u32> spf_table(u32 n) {
  std::vector<u32> spf(size_t(n) + 1, 1);
  for (u32 i = 2; i <= n; ++i) {
    if (spf[i] == 1) {
      for (u64 j = i; j <= n; j += i)
        if (spf[j] == 1) spf[j] = i;
    }
  }
  return spf;
}

}  // namespace scv
