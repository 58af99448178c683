#include "surd/cfrac.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "surd/error.hpp"

namespace surd::cfrac {

Surd Surd::make(BigInt D, BigInt Q) {
  if (sgn(D) <= 0 || sgn(Q) <= 0) {
    fail(ErrorKind::Domain, "D and Q must be positive, got D=" + D.get_str() + " Q=" + Q.get_str());
  }
  if (arith::gcd(D, Q) != 1) {
    fail(ErrorKind::NotCoprime, "gcd(" + D.get_str() + ", " + Q.get_str() + ") != 1");
  }
  if (Q >= D) {
    fail(ErrorKind::NotGreaterThanOne, D.get_str() + "/" + Q.get_str() + " is not > 1");
  }
  BigInt d2 = D * Q;
  BigInt root = arith::isqrt(d2);
  if (root * root == d2) {
    fail(ErrorKind::PerfectSquare, D.get_str() + "/" + Q.get_str() + " is a square");
  }
  return Surd(std::move(D), std::move(Q), std::move(d2), std::move(root));
}

std::string Surd::to_string() const {
  if (q_ == 1) return "sqrt(" + d_.get_str() + ")";
  return "sqrt(" + d_.get_str() + "/" + q_.get_str() + ")";
}

QuotientState initial_state(const Surd& surd) { return {BigInt(0), surd.Q(), 0}; }

StepResult step(const QuotientState& state, const Surd& surd) {
  if (sgn(state.Qk) <= 0) {
    fail(ErrorKind::InternalInvariantViolation,
         surd.to_string() + ": Q_" + std::to_string(state.k) + " <= 0");
  }
  StepResult out;
  mpz_fdiv_q(out.b.get_mpz_t(), BigInt(state.P + surd.root_floor()).get_mpz_t(), state.Qk.get_mpz_t());

  BigInt p_next = out.b * state.Qk - state.P;
  BigInt num = surd.radicand() - p_next * p_next;
  if (!mpz_divisible_p(num.get_mpz_t(), state.Qk.get_mpz_t())) {
    fail(ErrorKind::InternalInvariantViolation,
         surd.to_string() + ": inexact division at k=" + std::to_string(state.k + 1));
  }
  BigInt q_next;
  mpz_divexact(q_next.get_mpz_t(), num.get_mpz_t(), state.Qk.get_mpz_t());
  if (sgn(q_next) <= 0) {
    fail(ErrorKind::InternalInvariantViolation,
         surd.to_string() + ": Q_" + std::to_string(state.k + 1) + " <= 0");
  }
  out.next = {std::move(p_next), std::move(q_next), state.k + 1};
  return out;
}

namespace {

std::string join(const std::vector<BigInt>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += xs[i].get_str();
  }
  return out;
}

std::optional<std::size_t> env_cap() {
  const char* raw = std::getenv("SURD_MAX_ITER");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::size_t value = 0;
  const char* end = raw + std::char_traits<char>::length(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    fail(ErrorKind::Domain, std::string("SURD_MAX_ITER is not a positive integer: ") + raw);
  }
  return value;
}

// 0 <= P_k <= floor(sqrt(D2)) and 0 < Q_k <= 2*floor(sqrt(D2)) + 1 for k >= 1.
void check_bounds(const QuotientState& st, const Surd& surd) {
  const BigInt& w = surd.root_floor();
  if (sgn(st.P) < 0 || st.P > w || sgn(st.Qk) <= 0 || st.Qk > 2 * w + 1) {
    fail(ErrorKind::InternalInvariantViolation,
         surd.to_string() + ": state (" + st.P.get_str() + ", " + st.Qk.get_str() + ") at k=" +
             std::to_string(st.k) + " out of bounds");
  }
}

}  // namespace

std::string PeriodicCF::to_string() const { return "[" + b0.get_str() + ",{" + join(period) + "}]"; }

std::string RationalCF::to_string() const { return "[" + join(terms) + "]"; }

std::size_t default_iteration_cap(const BigInt& radicand) {
  static const std::optional<std::size_t> from_env = env_cap();
  if (from_env) return *from_env;

  const BigInt cap = 10 * arith::isqrt(radicand);
  if (cap > BigInt(std::numeric_limits<unsigned long>::max())) {
    return std::numeric_limits<std::size_t>::max();
  }
  return std::max<std::size_t>(cap.get_ui(), 1);
}

Expansion expand_with_states(const Surd& surd, const ExpandOptions& options) {
  if (options.repeats == 0) fail(ErrorKind::Domain, "repeats must be >= 1");
  const std::size_t cap = options.max_iter.value_or(default_iteration_cap(surd.radicand()));

  Expansion out;
  auto first = step(initial_state(surd), surd);
  out.cf.b0 = first.b;
  const QuotientState start = first.next;
  check_bounds(start, surd);
  out.numerators.push_back(start.P);
  out.denominators.push_back(start.Qk);

  QuotientState cur = start;
  for (;;) {
    if (cur.k > cap) {
      fail(ErrorKind::PeriodNotFound,
           surd.to_string() + ": no period within " + std::to_string(cap) + " steps");
    }
    auto next = step(cur, surd);
    out.cf.period.push_back(std::move(next.b));
    if (next.next == start) break;
    check_bounds(next.next, surd);
    out.numerators.push_back(next.next.P);
    out.denominators.push_back(next.next.Qk);
    cur = std::move(next.next);
  }

  const auto& period = out.cf.period;
  const std::size_t len = period.size();
  if (period.back() != 2 * out.cf.b0) {
    fail(ErrorKind::InternalInvariantViolation,
         surd.to_string() + ": period does not end in 2*b0 = " + BigInt(2 * out.cf.b0).get_str());
  }
  for (std::size_t i = 0; i + 1 < len; ++i) {
    if (period[i] != period[len - 2 - i]) {
      fail(ErrorKind::InternalInvariantViolation, surd.to_string() + ": b_1..b_m is not a palindrome");
    }
  }

  if (options.repeats > 1) {
    out.cf.minimal = false;
    out.cf.period.reserve(len * options.repeats);
    out.numerators.reserve(len * options.repeats);
    out.denominators.reserve(len * options.repeats);
    for (std::size_t rep = 1; rep < options.repeats; ++rep) {
      for (std::size_t i = 0; i < len; ++i) {
        out.cf.period.push_back(out.cf.period[i]);
        out.numerators.push_back(out.numerators[i]);
        out.denominators.push_back(out.denominators[i]);
      }
    }
  }
  return out;
}

PeriodicCF expand(const Surd& surd, const ExpandOptions& options) {
  return expand_with_states(surd, options).cf;
}

ConvergentTable::ConvergentTable(const Surd& surd, const ExpandOptions& options)
    : surd_(surd), expansion_(expand_with_states(surd, options)) {}

void ConvergentTable::ensure(std::size_t count) {
  if (rows_.size() >= count) return;
  rows_.reserve(count);
  const auto& den = expansion_.denominators;
  while (rows_.size() < count) {
    const std::size_t k = rows_.size();
    const BigInt& b = expansion_.cf.term(k);
    Convergent c;
    c.k = k;
    // Seeds r_{-1} = 1, s_{-1} = 0, r_{-2} = 0, s_{-2} = 1.
    const BigInt r1 = k >= 1 ? rows_[k - 1].r : BigInt(1);
    const BigInt s1 = k >= 1 ? rows_[k - 1].s : BigInt(0);
    const BigInt r2 = k >= 2 ? rows_[k - 2].r : BigInt(k == 1 ? 1 : 0);
    const BigInt s2 = k >= 2 ? rows_[k - 2].s : BigInt(k == 1 ? 0 : 1);
    c.r = b * r1 + r2;
    c.s = b * s1 + s2;
    c.next_q = den[k % den.size()];
    c.next_p = expansion_.numerators[k % den.size()];
    rows_.push_back(std::move(c));
  }
}

const Convergent& ConvergentTable::at(std::size_t k) {
  ensure(k + 1);
  return rows_[k];
}

std::vector<Convergent> convergents(const Surd& surd, std::size_t count) {
  ConvergentTable table(surd);
  table.ensure(count);
  return {table.rows().begin(), table.rows().end()};
}

Convergent eval_periodic(const PeriodicCF& cf, std::size_t depth) {
  BigInt r_prev = 1, s_prev = 0, r_prev2 = 0, s_prev2 = 1;
  for (std::size_t k = 0; k <= depth; ++k) {
    const BigInt& b = cf.term(k);
    BigInt r = b * r_prev + r_prev2;
    BigInt s = b * s_prev + s_prev2;
    r_prev2 = std::move(r_prev);
    s_prev2 = std::move(s_prev);
    r_prev = std::move(r);
    s_prev = std::move(s);
  }
  return {depth, r_prev, s_prev, BigInt(0), BigInt(0)};
}

RationalCF rational_cf(const BigInt& num, const BigInt& den, Parity parity) {
  if (sgn(den) <= 0) fail(ErrorKind::Domain, "rational_cf needs den >= 1, got " + den.get_str());
  if (sgn(num) < 0) fail(ErrorKind::Domain, "rational_cf needs num >= 0, got " + num.get_str());

  RationalCF out;
  BigInt a = num, b = den;
  while (sgn(b) != 0) {
    BigInt c, rem;
    mpz_fdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    out.terms.push_back(std::move(c));
    a = std::move(b);
    b = std::move(rem);
  }

  const bool want_odd = parity == Parity::Odd;
  if (parity != Parity::Canonical && (out.n() % 2 == 1) != want_odd) {
    // c_n -> (c_n - 1, 1). Canonical c_n >= 2 for n >= 1, so the new c_n - 1 stays >= 1.
    out.terms.back() -= 1;
    out.terms.emplace_back(1);
  }
  return out;
}

std::pair<BigInt, BigInt> evaluate(const RationalCF& cf) {
  BigInt num = 1, den = 0;
  for (auto it = cf.terms.rbegin(); it != cf.terms.rend(); ++it) {
    BigInt next = *it * num + den;
    den = std::move(num);
    num = std::move(next);
  }
  const BigInt g = arith::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

}  // namespace surd::cfrac
