#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace surd {

using BigInt = mpz_class;

namespace arith {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, ascending by prime. Empty for n = 1.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {}

  const std::vector<PrimePower>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }
  std::size_t size() const noexcept { return factors_.size(); }
  auto begin() const noexcept { return factors_.begin(); }
  auto end() const noexcept { return factors_.end(); }

  /// Exponent of `p`, zero when p does not occur.
  unsigned exponent_of(const BigInt& p) const;
  BigInt product() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> factors_;
};

/// Exact floor square root by Newton iteration. Throws Domain for n < 0.
BigInt isqrt(const BigInt& n);
bool is_square(const BigInt& n);

BigInt gcd(const BigInt& a, const BigInt& b);

/// Trial division up to isqrt(n). Desk-scale inputs only.
Factorization factorize(const BigInt& n);

/// Trial division by primes below `bound` only. Returns the smooth part's
/// factorization; `cofactor` receives whatever is left.
Factorization factorize_smooth(const BigInt& n, unsigned long bound, BigInt& cofactor);

/// Smallest divisor q of Q with Q | q^2, i.e. prod p^ceil(e_p / 2).
BigInt smallest_q(const BigInt& Q);

/// Largest e with p^e | n. Throws Domain for n = 0 or p < 2.
unsigned valuation(const BigInt& n, const BigInt& p);

/// All divisors of the number described by `f`, ascending, stopping after `cap` of them.
std::vector<BigInt> divisors(const Factorization& f, std::size_t cap);

inline std::string to_string(const BigInt& n) { return n.get_str(); }

}  // namespace arith
}  // namespace surd
