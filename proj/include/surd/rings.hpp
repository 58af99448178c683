#pragma once

#include <string>

#include "surd/arith.hpp"
#include "surd/cfrac.hpp"

namespace surd::rings {

/// The orders attached to sqrt(D/Q): Z[sqrt(D1)] with D1 = D q^2 / Q and its
/// suborder Z[sqrt(D2)] with D2 = D Q = D1 (Q/q)^2.
struct RingContext {
  BigInt D, Q, q, D1, D2;

  /// Q / q, the conductor of Z[sqrt(D2)] inside Z[sqrt(D1)].
  BigInt index() const { return Q / q; }
};

/// Propagates Surd validation errors.
RingContext ring_context(const BigInt& D, const BigInt& Q);

/// r + s sqrt(N) > 1 with r^2 - N s^2 = norm = +-1.
struct QuadUnit {
  BigInt N;
  BigInt r;
  BigInt s;
  int norm = 1;

  std::string to_string() const;
  friend bool operator==(const QuadUnit&, const QuadUnit&) = default;
};

/// Builds a unit and checks r^2 - N s^2 = +-1; anything else throws InternalInvariantViolation.
QuadUnit make_unit(BigInt N, BigInt r, BigInt s);

/// Smallest unit > 1 of Z[sqrt(N)] read off the end of the first period of sqrt(N).
QuadUnit fundamental_unit(const BigInt& N);

QuadUnit unit_mul(const QuadUnit& u, const QuadUnit& v);
/// u^e for e >= 1 by repeated multiplication.
QuadUnit unit_pow(const QuadUnit& u, unsigned e);

/// Ordering of units > 1 in the same ring; both coordinates grow with the value.
inline bool unit_less(const QuadUnit& a, const QuadUnit& b) { return a.s < b.s || (a.s == b.s && a.r < b.r); }

enum class UnitClass { Regular, Irregular };
std::string_view to_string(UnitClass c) noexcept;

/// Regular iff the unit of Z[sqrt(D1)] already lies in Z[sqrt(D2)], i.e. (Q/q) | s.
UnitClass classify_unit(const RingContext& ctx, const QuadUnit& u);

/// r + s sqrt(D1) = r + (s q / Q) sqrt(D2). Throws NotRegular for irregular units.
QuadUnit rewrite_in_D2(const RingContext& ctx, const QuadUnit& u);

}  // namespace surd::rings
