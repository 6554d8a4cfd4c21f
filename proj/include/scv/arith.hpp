// Elementary arithmetic: deterministic 64-bit factorization and the
// multiplicative functions built on it, modular inverses, squarefree/squarefull
// splitting, and Farey-sequence neighbor computation.
//
// Everything here is exact integer arithmetic; all operations are
// deterministic (the Pollard rho used inside factorize() is run with a fixed
// seed schedule, so repeated calls agree bit-for-bit).
#pragma once

#include <utility>
#include <vector>

#include "scv/common.hpp"

namespace scv {

/// One prime-power piece of a factorization.
struct PrimePower {
  u64 p;
  u32 e;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Factor n into prime powers, sorted by prime.
/// Pre:  1 <= n < 2^63.  Post: product of p^e equals n; the p are distinct
/// primes in increasing order.  factorize(1) == {}.
/// Throws GuardError outside the supported range.
std::vector<PrimePower> factorize(u64 n);

/// Deterministic Miller--Rabin primality test, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Moebius function mu(n) in {-1, 0, +1}.  Pre: 1 <= n < 2^63.
int mobius(u64 n);

/// Euler totient phi(n).  Pre: 1 <= n < 2^63.
u64 euler_phi(u64 n);

/// k-fold divisor function tau_k(n): the number of ordered k-tuples
/// (d_1, ..., d_k) of positive integers with d_1 * ... * d_k = n.
/// Multiplicative with tau_k(p^e) = binom(e + k - 1, k - 1);
/// tau_1 == 1, tau_2 == the usual divisor count.
/// Pre: k >= 1, 1 <= n < 2^63.  Throws GuardError if the value would not fit
/// in 64 bits (never happens for k <= 4 and n < 2^63).
u64 tau_k(u32 k, u64 n);

/// All positive divisors of n, in increasing order.  Pre: 1 <= n < 2^63.
std::vector<u64> divisors(u64 n);

/// p-adic valuation: the largest v with p^v | n.  Pre: n >= 1, p >= 2.
u32 valuation(u64 n, u64 p);

/// Inverse of a modulo m: the unique x in [0, m) with a*x == 1 (mod m).
/// Pre: m >= 1 and gcd(a, m) == 1 (a may be any integer, including negative).
/// Throws std::invalid_argument when no inverse exists.
u64 mod_inverse(i64 a, u64 m);

/// Modular exponentiation b^e mod m (m >= 1), via 128-bit products.
u64 pow_mod(u64 b, u64 e, u64 m);

/// Split n = f1 * f2 with f1 squarefree, f2 squarefull (every prime in f2
/// appears to exponent >= 2), gcd(f1, f2) == 1.  This decomposition is unique.
/// Returns {f1, f2}.  Pre: 1 <= n < 2^63.
std::pair<u64, u64> sqfree_sqfull_split(u64 n);

/// Split n = n1 * n2 where n1 is composed only of primes dividing c
/// (n1 | c^infinity) and gcd(n2, c) == 1.  Returns {n1, n2}.
/// Pre: 1 <= n < 2^63, c >= 1.  For c == 1 the split is {1, n}.
std::pair<u64, u64> b_infinity_part(u64 n, u64 c);

/// The two Farey neighbors of a reduced fraction b/c at level C.
/// left  = b'/c'  is the predecessor, right = b''/c'' the successor, i.e. the
/// mediant relations  b*cl - bl*c == 1  and  br*c - b*cr == 1  hold, with both
/// denominators in (C - c, C].  For b/c = 0/1 the sequence wraps around:
/// left = -1/C and right = 1/C.
struct FareyNeighbors {
  i64 bl, cl;  // predecessor b'/c'
  i64 br, cr;  // successor  b''/c''
};

/// Compute the Farey neighbors of b/c at level C.
/// Pre: 1 <= c <= C, 0 <= b < c or (b, c) == (0, 1), gcd(b, c) == 1.
/// Post: bl/cl < b/c < br/cr are consecutive in the Farey sequence of level C
/// (extended periodically), b*cl - bl*c == 1, br*c - b*cr == 1, and
/// C - c < cl, cr <= C.
FareyNeighbors farey_neighbors(i64 b, i64 c, i64 C);

/// Simple sieve of all primes <= n, in increasing order.
std::vector<u64> primes_up_to(u64 n);

/// Smallest-prime-factor table for 0..n (spf[0] = spf[1] = 1).
std::vector<u32> spf_table(u32 n);

}  // namespace scv
