// Dirichlet characters and the finite exponential sums of the verification
// pipeline: Ramanujan, Kloosterman and hyper-Kloosterman sums, the twisted
// sums Sigma_{h,d,n1,n2}(c) and their paired second-moment combination T,
// and the dual kernel K(n; q) that arises from averaging Gauss-sum cubes
// over primitive even characters.
//
// All sums are evaluated exactly (double loops with compensated summation),
// never through the bounds that estimate them; the bounds (Weil, Deligne,
// the squarefull-split envelope) are monitored as testable properties.
#pragma once

#include <vector>

#include "scv/arith.hpp"
#include "scv/common.hpp"

namespace scv {

/// A Dirichlet character mod q, stored as an exponent table: for units x,
/// chi(x) = e(r(x)/lambda) with r(x) integer and lambda the group exponent;
/// non-units map to 0.  Instances come from CharacterTable or induce().
class DirichletCharacter {
 public:
  u64 modulus() const { return q_; }

  /// chi(n) for any integer n (reduced mod q; 0 on non-units).
  cplx operator()(i64 n) const {
    i64 m = i64(q_);
    u64 x = u64(((n % m) + m) % m);
    i64 r = exps_[x];
    if (r < 0) return 0.0;
    return e_of(double(r) / double(lambda_));
  }

  bool is_even() const { return even_; }
  bool is_odd() const { return !even_; }
  u64 conductor() const { return conductor_; }
  bool is_primitive() const { return conductor_ == q_; }
  bool is_principal() const { return conductor_ == 1; }

  /// The character mod qq induced by this one.  Pre: modulus() | qq.
  DirichletCharacter induce(u64 qq) const;

  /// Exponent denominator lambda and raw exponent at x (-1 on non-units);
  /// exposed so exact-arithmetic consumers can avoid rounding.
  u64 exponent_denominator() const { return lambda_; }
  i64 exponent_at(u64 x) const { return exps_[x % q_]; }

 private:
  friend class CharacterTable;
  DirichletCharacter() = default;
  u64 q_ = 1;
  u64 lambda_ = 1;
  std::vector<i64> exps_;  // size q_, -1 on non-units
  bool even_ = true;
  u64 conductor_ = 1;
};

/// The complete group of characters mod q, built from CRT components with a
/// primitive root per odd prime power and the {-1} x <5> decomposition at
/// powers of two.  Immutable after construction.
class CharacterTable {
 public:
  /// Pre: 1 <= q <= 10^6 and phi(q)*q <= 2*10^8 (memory guard: the table
  /// materializes every character's exponent vector).
  explicit CharacterTable(u64 q);

  u64 modulus() const { return q_; }
  std::size_t size() const { return chars_.size(); }  // = phi(q)
  const DirichletCharacter& chi(std::size_t i) const { return chars_.at(i); }
  const std::vector<DirichletCharacter>& characters() const { return chars_; }
  const DirichletCharacter& principal() const { return chars_[0]; }

 private:
  u64 q_;
  std::vector<DirichletCharacter> chars_;
};

/// Convenience constructor.
inline CharacterTable character_table(u64 q) { return CharacterTable(q); }

/// Ramanujan sum r_q(l) = sum over d | gcd(q, l) of d mu(q/d); r_q(0) = phi(q).
i64 ramanujan_sum(u64 q, i64 l);

/// Kloosterman sum S(a, b; c) = sum over units x mod c of e((ax + b xbar)/c).
/// The sum is real; the imaginary part of the accumulation is checked to be
/// <= 1e-9 and dropped, and the Weil bound tau(c) gcd(a,b,c)^{1/2} c^{1/2}
/// is asserted.  S(a, b; 1) = 1.
double kloosterman(i64 a, i64 b, u64 c);

/// Hyper-Kloosterman sum Kl_m(n; d) = sum over units h_1, ..., h_{m-1} mod d
/// of e((h_1 + ... + h_{m-1} + n (h_1 ... h_{m-1})^{-1}) / d).  Pre: m >= 2.
/// Kl_2(n; d) = S(1, n; d).  For m = 3, prime d, gcd(n, d) = 1, the Deligne
/// bound |Kl_3| <= 3d is asserted.  Cost guard: (m-1) * d * phi(d) <= 10^8.
cplx hyper_kloosterman(i64 n, u64 d, u32 m);

/// Gauss sum tau(chi) = sum over h mod q of chi(h) e(h/q).  For primitive
/// chi, |tau| = sqrt(q) is asserted to 1e-9.
cplx gauss_sum(const DirichletCharacter& chi);

/// Sigma_{h,d,n1,n2}(c) = sum over units b mod c of e((bh + bbar d)/c)
/// S(bbar, n2; c/n1).  Pre: n1 | c.
cplx sigma_sum(i64 h, i64 d, u64 n1, i64 n2, u64 c);

/// Envelope ratio |Sigma| / (c sqrt(c2) sqrt(gcd(n1,c1,d,h)/n1)) where
/// c = c1 c2 is the squarefree/squarefull split; reported by the monitors.
double sigma_sum_ratio(i64 h, i64 d, u64 n1, i64 n2, u64 c);

/// T(h, d1, d2, n1, n2, p1, p2, t) =
///   sum_{x mod [p1,p2] t} e(x n2 / ([p1,p2] t))
///     * Sigma_{h,d1,n1,x}(p1 t) * conj(Sigma_{h,d2,n1,x}(p2 t)).
/// Pre: p1, p2 prime, n1 | t, [p1,p2]*t <= 3000 (cost guard).
/// When gcd(h n1, p1 p2) = 1 and p1 != p2 and gcd(n2, p1 p2) > 1 the value
/// provably vanishes; |T| <= 1e-9 * (normalization) is asserted then.
cplx t_sum(i64 h, i64 d1, i64 d2, u64 n1, i64 n2, u64 p1, u64 p2, u64 t);

enum class KDualForm { definition, hyperkloosterman };

/// Dual kernel K(n; q), gcd(n, q) = 1:
///   definition form:
///     (1/2) sum_{d | q} mu(q/d) sum_{chi mod d} (1 + chi(-1))
///            tau(chi*)^3 q^{-3/2} chibar(n),
///     with chi* the character mod q induced by chi and tau taken mod q;
///   hyperkloosterman form:
///     (1/(2 q^{3/2})) sum_{d | q, gcd(d, q/d) = 1} mu^2(q/d) phi(d)
///            sum_{±} Kl_3(± n ((q/d)^3)^{-1}; d).
/// Both forms agree to 1e-8; k_dual computes whichever is requested.
cplx k_dual(i64 n, u64 q, KDualForm form);

}  // namespace scv
