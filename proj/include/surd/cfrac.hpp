#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "surd/arith.hpp"

namespace surd::cfrac {

/// The quadratic irrational sqrt(D/Q) with gcd(D, Q) = 1, D/Q > 1 and D/Q not a
/// square. Internally the complete quotients live over the radicand D*Q.
class Surd {
 public:
  /// Validating constructor. Throws NotCoprime, NotGreaterThanOne or PerfectSquare.
  static Surd make(BigInt D, BigInt Q);

  const BigInt& D() const noexcept { return d_; }
  const BigInt& Q() const noexcept { return q_; }
  /// D*Q, the radicand of every complete quotient.
  const BigInt& radicand() const noexcept { return d2_; }
  /// floor(sqrt(D*Q)).
  const BigInt& root_floor() const noexcept { return root_; }

  std::string to_string() const;

 private:
  Surd(BigInt D, BigInt Q, BigInt d2, BigInt root)
      : d_(std::move(D)), q_(std::move(Q)), d2_(std::move(d2)), root_(std::move(root)) {}

  BigInt d_, q_, d2_, root_;
};

/// Complete quotient x_k = (sqrt(D*Q) + P) / Qk.
struct QuotientState {
  BigInt P;
  BigInt Qk;
  std::size_t k = 0;

  friend bool operator==(const QuotientState& a, const QuotientState& b) {
    return a.P == b.P && a.Qk == b.Qk;
  }
};

QuotientState initial_state(const Surd& surd);

struct StepResult {
  BigInt b;
  QuotientState next;
};

/// One step of the complete-quotient recurrence. Inexact division or a
/// nonpositive denominator throws InternalInvariantViolation.
StepResult step(const QuotientState& state, const Surd& surd);

/// [b0, {period...}] where the period word ends in 2*b0.
struct PeriodicCF {
  BigInt b0;
  std::vector<BigInt> period;
  bool minimal = true;

  std::size_t period_length() const noexcept { return period.size(); }
  /// Index of the last term before 2*b0; period length is m + 1.
  std::size_t m() const noexcept { return period.size() - 1; }
  /// b_k of the infinite expansion.
  const BigInt& term(std::size_t k) const { return k == 0 ? b0 : period[(k - 1) % period.size()]; }

  std::string to_string() const;

  friend bool operator==(const PeriodicCF& a, const PeriodicCF& b) {
    return a.b0 == b.b0 && a.period == b.period;
  }
};

struct ExpandOptions {
  /// Number of copies of the minimal period to report; 1 gives the minimal form.
  std::size_t repeats = 1;
  /// Step cap; defaults to default_iteration_cap(radicand).
  std::optional<std::size_t> max_iter;
};

/// The period together with (P_k, Q_k) for the complete quotients x_1 .. x_{m+1}.
struct Expansion {
  PeriodicCF cf;
  std::vector<BigInt> numerators;
  std::vector<BigInt> denominators;
};

/// 10 * floor(sqrt(D*Q)), overridden by SURD_MAX_ITER when set.
std::size_t default_iteration_cap(const BigInt& radicand);

/// Runs the state machine until (P_k, Q_k) returns to (P_1, Q_1). Checks the
/// 2*b0 tail, the palindrome and the classical state bounds on the way; a
/// failure throws InternalInvariantViolation. Exceeding the cap throws PeriodNotFound.
Expansion expand_with_states(const Surd& surd, const ExpandOptions& options = {});
PeriodicCF expand(const Surd& surd, const ExpandOptions& options = {});

/// r_k / s_k together with x_{k+1} = (sqrt(DQ) + P_{k+1}) / Q_{k+1}, so that
/// Q*r_k^2 - D*s_k^2 = (-1)^(k+1) * Q_{k+1}.
struct Convergent {
  std::size_t k = 0;
  BigInt r;
  BigInt s;
  BigInt next_q;
  BigInt next_p;
};

/// Lazily extended convergent stream of a surd. After the first period the
/// terms and Q_{k+1} are read off the stored period.
class ConvergentTable {
 public:
  explicit ConvergentTable(const Surd& surd, const ExpandOptions& options = {});

  const Surd& surd() const noexcept { return surd_; }
  const PeriodicCF& cf() const noexcept { return expansion_.cf; }
  const Expansion& expansion() const noexcept { return expansion_; }
  std::size_t period_length() const noexcept { return expansion_.cf.period_length(); }

  /// Makes sure convergents 0 .. count-1 exist.
  void ensure(std::size_t count);
  std::size_t size() const noexcept { return rows_.size(); }
  const Convergent& operator[](std::size_t k) const { return rows_[k]; }
  /// Extends when needed.
  const Convergent& at(std::size_t k);
  std::span<const Convergent> rows() const noexcept { return rows_; }

 private:
  Surd surd_;
  Expansion expansion_;
  std::vector<Convergent> rows_;
};

std::vector<Convergent> convergents(const Surd& surd, std::size_t count);

/// The depth-th convergent of the infinite expansion obtained by cycling the
/// period. `next_q` and `next_p` are left zero.
Convergent eval_periodic(const PeriodicCF& cf, std::size_t depth);

enum class Parity { Even, Odd, Canonical };

struct RationalCF {
  std::vector<BigInt> terms;

  std::size_t n() const noexcept { return terms.size() - 1; }
  std::string to_string() const;
  friend bool operator==(const RationalCF&, const RationalCF&) = default;
};

/// Finite expansion [c0, ..., cn] of num/den. Canonical form ends in c_n >= 2
/// (unless n = 0); Even/Odd apply the c_n -> (c_n - 1, 1) rewrite once if the
/// canonical top index has the wrong parity.
RationalCF rational_cf(const BigInt& num, const BigInt& den, Parity parity);

/// Evaluates a finite expansion back to num/den in lowest terms.
std::pair<BigInt, BigInt> evaluate(const RationalCF& cf);

}  // namespace surd::cfrac
