// Unit tests for the elementary-arithmetic module.
//
// The oracles below (sieves, brute-force divisor scans, literal Farey
// sequence construction) are written independently of the library code under
// test: they use only trial division and exhaustive enumeration, never the
// functions being verified.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "scv/arith.hpp"

using namespace scv;

// --------------------------------------------------------------------- oracles

namespace oracle {

// Trial-division factorization (slow, obviously correct).
static std::vector<std::pair<u64, u32>> factor(u64 n) {
  std::vector<std::pair<u64, u32>> out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      u32 e = 0;
      while (n % p == 0) n /= p, ++e;
      out.push_back({p, e});
    }
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

static int mobius(u64 n) {
  auto f = factor(n);
  for (auto& [p, e] : f)
    if (e > 1) return 0;
  return f.size() % 2 ? -1 : 1;
}

static u64 phi(u64 n) {
  u64 c = 0;
  for (u64 a = 1; a <= n; ++a)
    if (std::gcd(a, n) == 1) ++c;
  return c;
}

// tau_3 by direct triple loop over ordered factorizations.
static u64 tau3(u64 n) {
  u64 c = 0;
  for (u64 a = 1; a <= n; ++a) {
    if (n % a) continue;
    u64 m = n / a;
    for (u64 b = 1; b <= m; ++b)
      if (m % b == 0) ++c;  // third factor determined
  }
  return c;
}

// The Farey sequence of level C on [0, 1], as reduced fractions.
static std::vector<std::pair<i64, i64>> farey_seq(i64 C) {
  std::vector<std::pair<i64, i64>> fr;
  for (i64 c = 1; c <= C; ++c)
    for (i64 b = 0; b <= c; ++b)
      if (std::gcd(b, c) == 1) fr.push_back({b, c});
  std::sort(fr.begin(), fr.end(), [](auto& x, auto& y) {
    return x.first * y.second < y.first * x.second;
  });
  fr.erase(std::unique(fr.begin(), fr.end(),
                       [](auto& x, auto& y) {
                         return x.first * y.second == y.first * x.second;
                       }),
           fr.end());
  return fr;
}

}  // namespace oracle

// ----------------------------------------------------------------------- tests

TEST_CASE("factorize matches trial division and recombines") {
  for (u64 n = 1; n <= 3000; ++n) {
    auto f = factorize(n);
    auto g = oracle::factor(n);
    REQUIRE(f.size() == g.size());
    u64 prod = 1;
    for (size_t i = 0; i < f.size(); ++i) {
      CHECK(f[i].p == g[i].first);
      CHECK(f[i].e == g[i].second);
      for (u32 j = 0; j < f[i].e; ++j) prod *= f[i].p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("factorize handles large structured inputs") {
  // 2^61 - 1 is a Mersenne prime.
  auto f = factorize((u64(1) << 61) - 1);
  REQUIRE(f.size() == 1);
  CHECK(f[0].p == (u64(1) << 61) - 1);
  CHECK(f[0].e == 1);

  // Product of the primes up to 47 (15 distinct primes).
  u64 prim = 1;
  for (u64 p : primes_up_to(47)) prim *= p;
  auto g = factorize(prim);
  CHECK(g.size() == 15);
  for (auto& pp : g) CHECK(pp.e == 1);

  // Large semiprime with close factors.
  u64 a = 2147483647, b = 2147483629;  // both prime
  auto h = factorize(a * b);
  REQUIRE(h.size() == 2);
  CHECK(h[0].p == b);
  CHECK(h[1].p == a);

  // A perfect power: 3^37.
  u64 pw = 1;
  for (int i = 0; i < 37; ++i) pw *= 3;
  auto k = factorize(pw);
  REQUIRE(k.size() == 1);
  CHECK(k[0].p == 3);
  CHECK(k[0].e == 37);
}

TEST_CASE("factorize guards") {
  CHECK_THROWS_AS(factorize(0), GuardError);
  CHECK(factorize(1).empty());
}

TEST_CASE("is_prime exact on small range and known values") {
  auto ps = primes_up_to(2000);
  size_t idx = 0;
  for (u64 n = 0; n <= 2000; ++n) {
    bool expect = idx < ps.size() && ps[idx] == n;
    CHECK(is_prime(n) == expect);
    if (expect) ++idx;
  }
  CHECK(is_prime((u64(1) << 61) - 1));
  CHECK(!is_prime((u64(1) << 58) + 1));  // 5 * 576460752303423489... composite
}

TEST_CASE("mobius and euler_phi against sieve oracles") {
  for (u64 n = 1; n <= 4000; ++n) CHECK(mobius(n) == oracle::mobius(n));
  for (u64 n = 1; n <= 1000; ++n) CHECK(euler_phi(n) == oracle::phi(n));
  // Sum of phi(d) over d | n equals n.
  for (u64 n : {360ull, 1024ull, 30030ull, 65536ull}) {
    u64 s = 0;
    for (u64 d : divisors(n)) s += euler_phi(d);
    CHECK(s == n);
  }
}

TEST_CASE("tau_k values and identities") {
  CHECK(tau_k(3, 12) == 18);
  CHECK(tau_k(1, 360) == 1);
  for (u64 n = 1; n <= 500; ++n) {
    CHECK(tau_k(2, n) == divisors(n).size());
    CHECK(tau_k(3, n) == oracle::tau3(n));
  }
  // Dirichlet-convolution recursion: tau_3 = tau_2 * 1.
  for (u64 n = 1; n <= 300; ++n) {
    u64 s = 0;
    for (u64 d : divisors(n)) s += tau_k(2, d);
    CHECK(tau_k(3, n) == s);
  }
  CHECK_THROWS_AS(tau_k(0, 5), GuardError);
}

TEST_CASE("divisors enumerates and sorts") {
  CHECK(divisors(1) == std::vector<u64>{1});
  CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
  for (u64 n = 1; n <= 400; ++n) {
    auto d = divisors(n);
    CHECK(std::is_sorted(d.begin(), d.end()));
    u64 cnt = 0;
    for (u64 a = 1; a <= n; ++a)
      if (n % a == 0) ++cnt;
    CHECK(d.size() == cnt);
  }
}

TEST_CASE("mod_inverse basic and guards") {
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_inverse(1, 1) == 0);
  CHECK(mod_inverse(-3, 7) == 2);  // (-3)*2 = -6 == 1 (mod 7)
  std::mt19937_64 rng(12345);
  for (int it = 0; it < 2000; ++it) {
    u64 m = rng() % 100000 + 2;
    i64 a = i64(rng() % 200001) - 100000;
    if (std::gcd(i64(((a % i64(m)) + i64(m)) % i64(m)), i64(m)) != 1) {
      CHECK_THROWS_AS(mod_inverse(a, m), std::invalid_argument);
    } else {
      u64 x = mod_inverse(a, m);
      CHECK(x < m);
      i64 prod = ((a % i64(m)) * i64(x)) % i64(m);
      CHECK(((prod + i64(m)) % i64(m)) == 1 % i64(m));
    }
  }
}

TEST_CASE("pow_mod against repeated multiplication") {
  std::mt19937_64 rng(999);
  for (int it = 0; it < 200; ++it) {
    u64 m = rng() % 1000 + 1, b = rng() % 1000, e = rng() % 64;
    u64 expect = 1 % m;
    for (u64 i = 0; i < e; ++i) expect = expect * (b % m) % m;
    CHECK(pow_mod(b, e, m) == expect);
  }
  CHECK(pow_mod(2, 64, (u64(1) << 61) - 1) == 8);  // 2^64 mod Mersenne
}

TEST_CASE("sqfree_sqfull_split unique decomposition") {
  CHECK(sqfree_sqfull_split(720) == std::pair<u64, u64>{5, 144});
  CHECK(sqfree_sqfull_split(1) == std::pair<u64, u64>{1, 1});
  for (u64 n = 1; n <= 2000; ++n) {
    auto [f1, f2] = sqfree_sqfull_split(n);
    CHECK(f1 * f2 == n);
    CHECK(std::gcd(f1, f2) == 1);
    CHECK(mobius(f1) != 0);  // squarefree
    for (auto& pp : factorize(f2)) CHECK(pp.e >= 2);  // squarefull
  }
}

TEST_CASE("b_infinity_part splits on the prime support of c") {
  CHECK(b_infinity_part(720, 6) == std::pair<u64, u64>{144, 5});
  CHECK(b_infinity_part(7, 1) == std::pair<u64, u64>{1, 7});
  std::mt19937_64 rng(777);
  for (int it = 0; it < 2000; ++it) {
    u64 n = rng() % 100000 + 1, c = rng() % 1000 + 1;
    auto [n1, n2] = b_infinity_part(n, c);
    CHECK(n1 * n2 == n);
    CHECK(std::gcd(n2, c) == 1);
    for (auto& pp : factorize(n1)) CHECK(c % pp.p == 0);
  }
}

TEST_CASE("farey_neighbors matches the literal Farey sequence") {
  for (i64 C = 1; C <= 30; ++C) {
    auto seq = oracle::farey_seq(C);  // fractions in [0,1], endpoints 0/1, 1/1
    for (size_t i = 0; i < seq.size(); ++i) {
      auto [b, c] = seq[i];
      if (b == c) continue;  // 1/1 is the wrap image of 0/1
      auto nb = farey_neighbors(b, c, C);
      if (i > 0) {
        CHECK(nb.bl == seq[i - 1].first);
        CHECK(nb.cl == seq[i - 1].second);
      } else {  // wrap: predecessor of 0/1 is the reflection of 1/C
        CHECK(nb.bl == -1);
        CHECK(nb.cl == C);
      }
      CHECK(nb.br == seq[i + 1].first);
      CHECK(nb.cr == seq[i + 1].second);
    }
  }
}

TEST_CASE("farey_neighbors postconditions at scale") {
  std::mt19937_64 rng(31337);
  for (int it = 0; it < 3000; ++it) {
    i64 C = i64(rng() % 100000) + 1;
    i64 c = i64(rng() % u64(C)) + 1;
    i64 b = -1;
    for (int tries = 0; tries < 64; ++tries) {
      i64 cand = (c == 1) ? 0 : i64(rng() % u64(c));
      if (std::gcd(cand, c) == 1 && (cand > 0 || c == 1)) {
        b = cand;
        break;
      }
    }
    if (b < 0) continue;
    auto nb = farey_neighbors(b, c, C);
    CHECK(b * nb.cl - nb.bl * c == 1);
    CHECK(nb.br * c - b * nb.cr == 1);
    CHECK(nb.cl > C - c);
    CHECK(nb.cl <= C);
    CHECK(nb.cr > C - c);
    CHECK(nb.cr <= C);
  }
  CHECK_THROWS_AS(farey_neighbors(2, 4, 10), std::invalid_argument);
  CHECK_THROWS_AS(farey_neighbors(1, 5, 4), std::invalid_argument);
}

TEST_CASE("spf_table consistency") {
  auto spf = spf_table(10000);
  for (u32 n = 2; n <= 10000; ++n) {
    CHECK(n % spf[n] == 0);
    CHECK(is_prime(spf[n]));
    for (u32 d = 2; d < spf[n]; ++d) CHECK(n % d != 0);
  }
}
