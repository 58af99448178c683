#pragma once

#include <cstddef>
#include <vector>

#include "surd/cfrac.hpp"
#include "surd/rings.hpp"

namespace surd::theorems {

/// A surd sqrt(D/Q) with its ring context and convergent stream. Every
/// verifier below works on one of these; the stream is extended on demand.
struct Instance {
  rings::RingContext ctx;
  cfrac::ConvergentTable table;

  static Instance make(const BigInt& D, const BigInt& Q);

  std::size_t period_length() const noexcept { return table.period_length(); }
  std::size_t m() const noexcept { return table.cf().m(); }
};

/// A unit r + s sqrt(D1) together with the convergent it lands on:
/// r / t = r_k and s q / t = s_k with t = gcd(r, q), and Q_{k+1} = Q / t^2.
struct UnitConvergentLink {
  rings::QuadUnit unit;
  BigInt t;
  std::size_t k = 0;
  BigInt next_q;
};

/// Finds the convergent a unit of Z[sqrt(D1)] corresponds to. Throws
/// TheoremViolation when no convergent matches or Q_{k+1} != Q / t^2.
UnitConvergentLink link_unit(Instance& inst, const rings::QuadUnit& u);

/// Reads the unit one period further on: r' = r_{k+m+1} t, s' = s_{k+m+1} t / q,
/// and checks that it is a unit with gcd(r', q) = t.
UnitConvergentLink verify_theorem1_shift(Instance& inst, const UnitConvergentLink& link);

struct Theorem2Row {
  std::size_t l = 0;
  std::size_t k = 0;
  rings::QuadUnit unit;  // over D2
  unsigned power = 0;    // unit = eta^power, found by comparison
};

/// For l = 1..l_max: k = l(m+1) - 1 gives a unit of Z[sqrt(D2)], namely eta^l.
/// Also checks the converse: no other k up to l_max(m+1) - 1 has Q_{k+1} = Q with Q | s_k.
std::vector<Theorem2Row> verify_theorem2(Instance& inst, std::size_t l_max);

struct Corollary1Row {
  std::size_t l = 0;
  std::size_t k = 0;        // l(m+1) - 1 for sqrt(D/Q)
  std::size_t k_prime = 0;  // l(n+1) - 1 for sqrt(D2)
  BigInt r, s, s_prime;
};

struct Corollary1Result {
  std::size_t period_length = 0;        // m + 1
  std::size_t period_length_d2 = 0;     // n + 1
  std::vector<Corollary1Row> rows;
};

/// r_{l(m+1)-1} = r'_{l(n+1)-1} and s_{l(m+1)-1} = Q s'_{l(n+1)-1} against the
/// expansion of sqrt(D2).
Corollary1Result verify_corollary1(Instance& inst, std::size_t l_max);

struct Rung {
  unsigned power = 0;
  UnitConvergentLink link;
  rings::UnitClass cls = rings::UnitClass::Regular;
};

struct Ladder {
  rings::QuadUnit epsilon;  // fundamental unit of Z[sqrt(D1)]
  rings::QuadUnit eta;      // fundamental unit of Z[sqrt(D2)]
  unsigned eta_power = 0;   // eta = epsilon^eta_power
  std::vector<Rung> rungs;  // epsilon^1 .. epsilon^levels
  std::vector<Rung> cycle;  // epsilon^1 .. epsilon^eta_power, all inside the first period
};

/// Links epsilon^1 .. epsilon^levels and checks the ladder structure: linked
/// indices strictly increase, epsilon^j is regular iff eta_power | j, eta sits at
/// k = m, and epsilon^(j + eta_power) sits exactly one period after epsilon^j.
Ladder unit_ladder(Instance& inst, unsigned levels);

struct PrimeValuation {
  BigInt p;
  unsigned e = 0;  // v_p(Q)
  unsigned f = 0;  // v_p(t)
  unsigned g = 0;  // v_p(s_k / t)
  long exponent = 0;  // v_p((t^2 D'/Q') / (D' Q'))
};

struct Theorem3Result {
  std::size_t l = 0;
  std::size_t k = 0;
  BigInt t;
  cfrac::RationalCF rational;  // r_k / t with n = k mod 2
  cfrac::PeriodicCF predicted;  // [c0, {c1, .., cn, 2 c0}]
  cfrac::PeriodicCF computed;   // minimal expansion of sqrt(D'/Q')
  BigInt D_prime, Q_prime;      // (s_k/t)^2 D/Q in lowest terms
  BigInt a;                     // t sqrt(D'/Q') = a sqrt(D'Q')
  std::vector<PrimeValuation> valuations;
};

/// k = l(m+1) - 1. Throws BadDivisor when t does not divide s_k.
Theorem3Result verify_theorem3(Instance& inst, std::size_t l, const BigInt& t);
/// Same, addressed by k; throws NotRegularIndex when k + 1 is not a multiple of m + 1.
Theorem3Result verify_theorem3_at(Instance& inst, std::size_t k, const BigInt& t);

/// Checks the expansion identities on convergents 0 .. count-1: the norm relation
/// Q r_k^2 - D s_k^2 = (-1)^(k+1) Q_{k+1}, the determinant r_k s_{k-1} - r_{k-1} s_k =
/// (-1)^(k+1), strict growth, and that re-running the raw state machine for two
/// periods reproduces the stored terms and denominators. Returns the number of
/// identities checked.
std::size_t verify_expansion_invariants(Instance& inst, std::size_t count);

}  // namespace surd::theorems
