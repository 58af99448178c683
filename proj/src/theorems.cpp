#include "surd/theorems.hpp"

#include <algorithm>
#include <string>

#include "surd/error.hpp"

namespace surd::theorems {

using rings::QuadUnit;
using rings::UnitClass;

namespace {

[[noreturn]] void violation(const Instance& inst, const std::string& check, const std::string& what,
                            std::optional<std::size_t> k = {}, const BigInt* t = nullptr) {
  std::string where = check + " D=" + inst.ctx.D.get_str() + " Q=" + inst.ctx.Q.get_str();
  if (k) where += " k=" + std::to_string(*k);
  if (t) where += " t=" + t->get_str();
  fail(ErrorKind::TheoremViolation, where + ": " + what);
}

BigInt signed_one(std::size_t k) { return k % 2 == 1 ? BigInt(1) : BigInt(-1); }

bool divides(const BigInt& d, const BigInt& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

}  // namespace

Instance Instance::make(const BigInt& D, const BigInt& Q) {
  auto ctx = rings::ring_context(D, Q);
  return Instance{std::move(ctx), cfrac::ConvergentTable(cfrac::Surd::make(D, Q))};
}

UnitConvergentLink link_unit(Instance& inst, const QuadUnit& u) {
  const auto& ctx = inst.ctx;
  if (u.N != ctx.D1) {
    fail(ErrorKind::Domain, "unit over " + u.N.get_str() + " is not in Z[sqrt(" + ctx.D1.get_str() + ")]");
  }
  UnitConvergentLink link{u, arith::gcd(u.r, ctx.q), 0, 0};
  const BigInt r = u.r / link.t;
  const BigInt s = u.s * ctx.q / link.t;

  // r_k is strictly increasing from k = 0, so the scan ends.
  for (std::size_t k = 0;; ++k) {
    const auto& c = inst.table.at(k);
    if (c.r > r) violation(inst, "t1", "no convergent matches " + u.to_string(), {}, &link.t);
    if (c.r != r) continue;
    if (c.s != s) {
      violation(inst, "t1", "r_k matches but s_k = " + c.s.get_str() + " != " + s.get_str(), k, &link.t);
    }
    link.k = k;
    link.next_q = c.next_q;
    break;
  }

  const BigInt t2 = link.t * link.t;
  if (!divides(t2, ctx.Q) || link.next_q * t2 != ctx.Q) {
    violation(inst, "t1", "Q_{k+1} = " + link.next_q.get_str() + " is not Q/t^2", link.k, &link.t);
  }
  return link;
}

UnitConvergentLink verify_theorem1_shift(Instance& inst, const UnitConvergentLink& link) {
  const auto& ctx = inst.ctx;
  const std::size_t k = link.k + inst.period_length();
  const auto& c = inst.table.at(k);

  const BigInt st = c.s * link.t;
  if (!divides(ctx.q, st)) violation(inst, "t1", "q does not divide s_{k+m+1} t", k, &link.t);

  QuadUnit next;
  try {
    next = rings::make_unit(ctx.D1, c.r * link.t, st / ctx.q);
  } catch (const Error& e) {
    violation(inst, "t1", std::string("shifted pair is not a unit: ") + e.what(), k, &link.t);
  }
  if (arith::gcd(next.r, ctx.q) != link.t) violation(inst, "t1", "gcd(r', q) != t", k, &link.t);
  if (!rings::unit_less(link.unit, next)) violation(inst, "t1", "shifted unit is not larger", k, &link.t);

  UnitConvergentLink out = link_unit(inst, next);
  if (out.k != k || out.t != link.t || out.next_q != link.next_q) {
    violation(inst, "t1", "shifted unit links back to k=" + std::to_string(out.k), k, &link.t);
  }
  return out;
}

std::vector<Theorem2Row> verify_theorem2(Instance& inst, std::size_t l_max) {
  if (l_max == 0) fail(ErrorKind::Domain, "l_max must be >= 1");
  const auto& ctx = inst.ctx;
  const std::size_t len = inst.period_length();
  const QuadUnit eta = rings::fundamental_unit(ctx.D2);

  std::vector<Theorem2Row> rows;
  QuadUnit power = eta;
  unsigned index = 1;
  for (std::size_t l = 1; l <= l_max; ++l) {
    const std::size_t k = l * len - 1;
    const auto& c = inst.table.at(k);
    if (!divides(ctx.Q, c.s)) violation(inst, "t2", "Q does not divide s_k", k);
    const BigInt n = ctx.Q * c.r * c.r - ctx.D * c.s * c.s;
    if (n != ctx.Q && n != -ctx.Q) violation(inst, "t2", "r_k^2 - s_k^2 D/Q != +-1", k);

    QuadUnit unit = rings::make_unit(ctx.D2, c.r, c.s / ctx.Q);
    const QuadUnit over_d1 = rings::make_unit(ctx.D1, c.r, c.s / ctx.q);
    if (rings::classify_unit(ctx, over_d1) != UnitClass::Regular) {
      violation(inst, "t2", "end-of-period unit is irregular", k);
    }
    while (rings::unit_less(power, unit)) {
      power = rings::unit_mul(power, eta);
      ++index;
    }
    if (power != unit) violation(inst, "t2", unit.to_string() + " is not a power of " + eta.to_string(), k);
    if (index != l) {
      violation(inst, "t2", "unit is eta^" + std::to_string(index) + ", expected eta^" + std::to_string(l), k);
    }
    rows.push_back({l, k, std::move(unit), index});
  }

  // Converse. Q_{k+1} = Q alone also happens at irregular units with t = 1; the
  // end of a period is where additionally Q | s_k, equivalently x_{k+1} = x_0 + C.
  for (std::size_t k = 0; k < l_max * len; ++k) {
    const bool at_end = (k + 1) % len == 0;
    const auto& c = inst.table.at(k);
    const bool full = c.next_q == ctx.Q;
    if ((full && divides(ctx.Q, c.s)) != at_end) {
      violation(inst, "t2", at_end ? "no unit of Z[sqrt(D2)] at end of period" : "unit of Z[sqrt(D2)] inside a period",
                k);
    }
    if ((full && divides(ctx.Q, c.next_p)) != at_end) {
      violation(inst, "t2", "x_{k+1} = x_0 + C does not mark the end of a period", k);
    }
  }
  return rows;
}

Corollary1Result verify_corollary1(Instance& inst, std::size_t l_max) {
  if (l_max == 0) fail(ErrorKind::Domain, "l_max must be >= 1");
  const auto& ctx = inst.ctx;
  cfrac::ConvergentTable d2(cfrac::Surd::make(ctx.D2, 1));

  Corollary1Result out;
  out.period_length = inst.period_length();
  out.period_length_d2 = d2.period_length();
  for (std::size_t l = 1; l <= l_max; ++l) {
    const std::size_t k = l * out.period_length - 1;
    const std::size_t kp = l * out.period_length_d2 - 1;
    const auto& c = inst.table.at(k);
    const auto& cp = d2.at(kp);
    if (c.r != cp.r) violation(inst, "c1", "r_k != r'_k' (k'=" + std::to_string(kp) + ")", k);
    if (c.s != cp.s * ctx.Q) violation(inst, "c1", "s_k != Q s'_k' (k'=" + std::to_string(kp) + ")", k);
    out.rows.push_back({l, k, kp, c.r, c.s, cp.s});
  }
  return out;
}

Ladder unit_ladder(Instance& inst, unsigned levels) {
  if (levels == 0) fail(ErrorKind::Domain, "levels must be >= 1");
  const auto& ctx = inst.ctx;
  Ladder out;
  out.epsilon = rings::fundamental_unit(ctx.D1);
  out.eta = rings::fundamental_unit(ctx.D2);
  const QuadUnit eta_in_d1 = rings::make_unit(ctx.D1, out.eta.r, out.eta.s * ctx.index());

  std::vector<QuadUnit> powers{out.epsilon};
  while (rings::unit_less(powers.back(), eta_in_d1)) {
    powers.push_back(rings::unit_mul(powers.back(), out.epsilon));
  }
  if (powers.back() != eta_in_d1) violation(inst, "ladder", "eta is not a power of epsilon");
  out.eta_power = static_cast<unsigned>(powers.size());
  // q = Q means D1 = D2; a square Q (q^2 = Q) still has index q > 1, e.g. D=5, Q=4.
  if (ctx.q == ctx.Q && out.eta_power != 1) {
    violation(inst, "ladder", "irregular units although D1 = D2");
  }
  if (rings::rewrite_in_D2(ctx, powers.back()) != out.eta) {
    violation(inst, "ladder", "epsilon^j does not rewrite to eta");
  }

  const unsigned total = std::max(levels, out.eta_power);
  while (powers.size() < total) powers.push_back(rings::unit_mul(powers.back(), out.epsilon));

  const std::size_t len = inst.period_length();
  std::vector<Rung> all;
  all.reserve(total);
  for (unsigned j = 1; j <= total; ++j) {
    Rung rung{j, link_unit(inst, powers[j - 1]), rings::classify_unit(ctx, powers[j - 1])};
    const std::size_t k = rung.link.k;
    if (!all.empty() && k <= all.back().link.k) violation(inst, "ladder", "linked indices not increasing", k);
    if ((rung.cls == UnitClass::Regular) != (j % out.eta_power == 0)) {
      violation(inst, "ladder", "epsilon^" + std::to_string(j) + " misclassified", k);
    }
    if (j == out.eta_power && k != inst.m()) violation(inst, "ladder", "eta is not at k = m", k);
    if (j > out.eta_power && k != all[j - out.eta_power - 1].link.k + len) {
      violation(inst, "ladder", "epsilon^" + std::to_string(j) + " is not one period after its predecessor", k);
    }
    all.push_back(std::move(rung));
  }

  out.cycle.assign(all.begin(), all.begin() + out.eta_power);
  all.resize(levels);
  out.rungs = std::move(all);
  return out;
}

Theorem3Result verify_theorem3_at(Instance& inst, std::size_t k, const BigInt& t) {
  const auto& ctx = inst.ctx;
  const std::size_t len = inst.period_length();
  if ((k + 1) % len != 0) {
    fail(ErrorKind::NotRegularIndex, "k=" + std::to_string(k) + " is not l(m+1)-1 for m+1=" + std::to_string(len));
  }
  const auto& c = inst.table.at(k);
  if (sgn(t) <= 0 || !divides(t, c.s)) {
    fail(ErrorKind::BadDivisor, t.get_str() + " does not divide s_" + std::to_string(k) + " = " + c.s.get_str());
  }

  Theorem3Result out;
  out.l = (k + 1) / len;
  out.k = k;
  out.t = t;

  // The sign of Q r_k^2 - D s_k^2 = +-Q fixes the parity of k, hence of n.
  if (ctx.Q * c.r * c.r - ctx.D * c.s * c.s != signed_one(k) * ctx.Q) {
    violation(inst, "t3", "norm sign does not match the parity of k", k, &t);
  }
  out.rational = cfrac::rational_cf(c.r, t, k % 2 == 1 ? cfrac::Parity::Odd : cfrac::Parity::Even);
  if (out.rational.n() % 2 != k % 2) violation(inst, "t3", "n and k differ in parity", k, &t);

  const auto& terms = out.rational.terms;
  out.predicted.b0 = terms.front();
  out.predicted.period.assign(terms.begin() + 1, terms.end());
  out.predicted.period.push_back(2 * terms.front());
  out.predicted.minimal = false;

  const BigInt u = c.s / t;
  const BigInt num = u * u * ctx.D;
  const BigInt g = arith::gcd(num, ctx.Q);
  out.D_prime = num / g;
  out.Q_prime = ctx.Q / g;
  if (!divides(out.Q_prime, t)) violation(inst, "t3", "Q' = " + out.Q_prime.get_str() + " does not divide t", k, &t);
  out.a = t / out.Q_prime;

  for (const auto& [p, e] : arith::factorize(ctx.Q)) {
    PrimeValuation v{p, e, arith::valuation(t, p), arith::valuation(u, p), 0};
    const long e_ = v.e, f = v.f, g_ = v.g;
    v.exponent = e_ <= 2 * g_ ? 2 * f : 2 * f + 4 * g_ - 2 * e_;
    const long q_prime = arith::valuation(out.Q_prime, p);
    const long d_prime = divides(p, out.D_prime) ? arith::valuation(out.D_prime, p) : 0;
    const long expect_d = e_ <= 2 * g_ ? 2 * g_ - e_ : 0;
    const long expect_q = e_ <= 2 * g_ ? 0 : e_ - 2 * g_;
    if (d_prime != expect_d || q_prime != expect_q) {
      violation(inst, "t3", "v_p(D'), v_p(Q') disagree with the case formula at p=" + p.get_str(), k, &t);
    }
    if (v.exponent != 2 * f - 2 * q_prime) {
      violation(inst, "t3", "valuation routes disagree at p=" + p.get_str(), k, &t);
    }
    if (v.exponent < 0 || v.exponent % 2 != 0) {
      violation(inst, "t3", "v_p exponent " + std::to_string(v.exponent) + " is not even and nonnegative", k, &t);
    }
    out.valuations.push_back(std::move(v));
  }

  try {
    const auto surd = cfrac::Surd::make(out.D_prime, out.Q_prime);
    cfrac::ExpandOptions opts;
    opts.max_iter = out.predicted.period_length() + 2;
    out.computed = cfrac::expand(surd, opts);
  } catch (const Error& e) {
    violation(inst, "t3", std::string("cannot expand sqrt(D'/Q'): ") + e.what(), k, &t);
  }

  const auto& want = out.predicted.period;
  const auto& got = out.computed.period;
  bool same = out.computed.b0 == out.predicted.b0 && want.size() % got.size() == 0;
  for (std::size_t i = 0; same && i < want.size(); ++i) same = want[i] == got[i % got.size()];
  if (!same) {
    violation(inst, "t3",
              "predicted " + out.predicted.to_string() + " but sqrt(D'/Q') = " + out.computed.to_string(), k, &t);
  }
  return out;
}

Theorem3Result verify_theorem3(Instance& inst, std::size_t l, const BigInt& t) {
  if (l == 0) fail(ErrorKind::Domain, "l must be >= 1");
  return verify_theorem3_at(inst, l * inst.period_length() - 1, t);
}

std::size_t verify_expansion_invariants(Instance& inst, std::size_t count) {
  const auto& ctx = inst.ctx;
  auto& table = inst.table;
  table.ensure(count);
  std::size_t checks = 0;

  for (std::size_t k = 0; k < count; ++k) {
    const auto& c = table[k];
    if (ctx.Q * c.r * c.r - ctx.D * c.s * c.s != signed_one(k) * c.next_q) {
      violation(inst, "invariants", "norm relation fails", k);
    }
    const BigInt r_prev = k ? table[k - 1].r : BigInt(1);
    const BigInt s_prev = k ? table[k - 1].s : BigInt(0);
    if (c.r * s_prev - r_prev * c.s != signed_one(k)) violation(inst, "invariants", "determinant is not +-1", k);
    if (k >= 1 && c.r <= r_prev) violation(inst, "invariants", "r_k not increasing", k);
    if (k >= 2 && c.s <= s_prev) violation(inst, "invariants", "s_k not increasing", k);
    checks += 4;
  }

  // Raw state machine over two periods against the stored expansion.
  const auto& surd = table.surd();
  const auto& cf = table.cf();
  const auto& den = table.expansion().denominators;
  const std::size_t len = cf.period_length();
  std::vector<cfrac::QuotientState> states{cfrac::initial_state(surd)};
  for (std::size_t k = 0; k <= 2 * len; ++k) {
    auto st = cfrac::step(states.back(), surd);
    if (st.b != cf.term(k)) violation(inst, "invariants", "state machine term differs", k);
    if (st.next.Qk != den[k % len] || st.next.P != table.expansion().numerators[k % len]) {
      violation(inst, "invariants", "state machine x_{k+1} differs", k);
    }
    if (st.next.k > len && !(st.next == states[st.next.k - len])) {
      violation(inst, "invariants", "x_{k+m+1} != x_k", st.next.k);
    }
    states.push_back(std::move(st.next));
    checks += 3;
  }
  return checks;
}

}  // namespace surd::theorems
