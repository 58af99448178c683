#include "surd/rings.hpp"

#include "surd/error.hpp"

namespace surd::rings {

RingContext ring_context(const BigInt& D, const BigInt& Q) {
  (void)cfrac::Surd::make(D, Q);
  RingContext ctx;
  ctx.D = D;
  ctx.Q = Q;
  ctx.q = arith::smallest_q(Q);
  const BigInt num = D * ctx.q * ctx.q;
  if (!mpz_divisible_p(num.get_mpz_t(), Q.get_mpz_t())) {
    fail(ErrorKind::InternalInvariantViolation, "Q does not divide D q^2");
  }
  ctx.D1 = num / Q;
  ctx.D2 = D * Q;
  const BigInt idx = ctx.index();
  if (ctx.D2 != ctx.D1 * idx * idx || arith::is_square(ctx.D1)) {
    fail(ErrorKind::InternalInvariantViolation, "inconsistent ring context for D=" + D.get_str());
  }
  return ctx;
}

std::string QuadUnit::to_string() const {
  return r.get_str() + "+" + s.get_str() + "*sqrt(" + N.get_str() + ")";
}

QuadUnit make_unit(BigInt N, BigInt r, BigInt s) {
  const BigInt n = r * r - N * s * s;
  if (n != 1 && n != -1) {
    fail(ErrorKind::InternalInvariantViolation,
         r.get_str() + "+" + s.get_str() + "*sqrt(" + N.get_str() + ") has norm " + n.get_str());
  }
  if (sgn(r) <= 0 || sgn(s) <= 0) {
    fail(ErrorKind::InternalInvariantViolation, "only units > 1 are represented");
  }
  const int norm = n == 1 ? 1 : -1;
  return {std::move(N), std::move(r), std::move(s), norm};
}

QuadUnit fundamental_unit(const BigInt& N) {
  if (sgn(N) <= 0 || arith::is_square(N)) {
    fail(ErrorKind::Domain, "fundamental_unit needs a positive non-square, got " + N.get_str());
  }
  cfrac::ConvergentTable table(cfrac::Surd::make(N, 1));
  const auto& c = table.at(table.cf().m());
  QuadUnit u = make_unit(N, c.r, c.s);
  const int expected = table.cf().m() % 2 == 0 ? -1 : 1;
  if (u.norm != expected) {
    fail(ErrorKind::InternalInvariantViolation, "fundamental unit norm does not match period parity");
  }
  return u;
}

QuadUnit unit_mul(const QuadUnit& u, const QuadUnit& v) {
  if (u.N != v.N) {
    fail(ErrorKind::Domain, "unit_mul over different rings: " + u.N.get_str() + " vs " + v.N.get_str());
  }
  QuadUnit out = make_unit(u.N, u.r * v.r + u.s * v.s * u.N, u.r * v.s + u.s * v.r);
  if (out.norm != u.norm * v.norm) {
    fail(ErrorKind::InternalInvariantViolation, "norm is not multiplicative");
  }
  return out;
}

QuadUnit unit_pow(const QuadUnit& u, unsigned e) {
  if (e == 0) fail(ErrorKind::Domain, "unit_pow needs e >= 1");
  QuadUnit out = u;
  for (unsigned i = 1; i < e; ++i) out = unit_mul(out, u);
  return out;
}

std::string_view to_string(UnitClass c) noexcept {
  return c == UnitClass::Regular ? "regular" : "irregular";
}

UnitClass classify_unit(const RingContext& ctx, const QuadUnit& u) {
  if (u.N != ctx.D1) {
    fail(ErrorKind::Domain, "unit over " + u.N.get_str() + " is not in Z[sqrt(" + ctx.D1.get_str() + ")]");
  }
  const BigInt idx = ctx.index();
  return mpz_divisible_p(u.s.get_mpz_t(), idx.get_mpz_t()) ? UnitClass::Regular : UnitClass::Irregular;
}

QuadUnit rewrite_in_D2(const RingContext& ctx, const QuadUnit& u) {
  if (classify_unit(ctx, u) != UnitClass::Regular) {
    fail(ErrorKind::NotRegular, u.to_string() + " does not lie in Z[sqrt(" + ctx.D2.get_str() + ")]");
  }
  QuadUnit out = make_unit(ctx.D2, u.r, u.s * ctx.q / ctx.Q);
  if (out.norm != u.norm) fail(ErrorKind::InternalInvariantViolation, "rewrite changed the norm");
  return out;
}

}  // namespace surd::rings
