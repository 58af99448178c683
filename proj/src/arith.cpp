#include "surd/arith.hpp"

#include <algorithm>

#include "surd/error.hpp"

namespace surd {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotGreaterThanOne: return "NotGreaterThanOne";
    case ErrorKind::PerfectSquare: return "PerfectSquare";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::PeriodNotFound: return "PeriodNotFound";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::BadDivisor: return "BadDivisor";
    case ErrorKind::NotRegularIndex: return "NotRegularIndex";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
  }
  return "Unknown";
}

namespace arith {

unsigned Factorization::exponent_of(const BigInt& p) const {
  for (const auto& f : factors_) {
    if (f.prime == p) return f.exponent;
  }
  return 0;
}

BigInt Factorization::product() const {
  BigInt out = 1;
  for (const auto& f : factors_) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    out *= pe;
  }
  return out;
}

BigInt isqrt(const BigInt& n) {
  if (sgn(n) < 0) fail(ErrorKind::Domain, "isqrt of negative number " + n.get_str());
  if (n < 2) return n;

  // Start above the root so the iteration decreases monotonically.
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  BigInt x = 1;
  x <<= (bits + 1) / 2;
  for (;;) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

bool is_square(const BigInt& n) {
  if (sgn(n) < 0) fail(ErrorKind::Domain, "is_square of negative number " + n.get_str());
  const BigInt r = isqrt(n);
  return r * r == n;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

namespace {

// Strips every factor p out of n and records it.
void take_prime(BigInt& n, const BigInt& p, std::vector<PrimePower>& out) {
  unsigned e = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  if (e > 0) out.push_back({p, e});
}

}  // namespace

Factorization factorize(const BigInt& n) {
  if (sgn(n) <= 0) fail(ErrorKind::Domain, "factorize needs n >= 1, got " + n.get_str());

  std::vector<PrimePower> out;
  BigInt rest = n;
  take_prime(rest, 2, out);
  for (BigInt p = 3; p * p <= rest; p += 2) take_prime(rest, p, out);
  if (rest > 1) out.push_back({rest, 1});
  return Factorization(std::move(out));
}

Factorization factorize_smooth(const BigInt& n, unsigned long bound, BigInt& cofactor) {
  if (sgn(n) <= 0) fail(ErrorKind::Domain, "factorize needs n >= 1, got " + n.get_str());

  std::vector<PrimePower> out;
  cofactor = n;
  if (bound > 2) take_prime(cofactor, 2, out);
  for (unsigned long p = 3; p < bound && cofactor > 1; p += 2) {
    // Composite p never divides: its prime factors are already gone.
    take_prime(cofactor, BigInt(p), out);
  }
  return Factorization(std::move(out));
}

BigInt smallest_q(const BigInt& Q) {
  BigInt q = 1;
  for (const auto& [p, e] : factorize(Q)) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), (e + 1) / 2);
    q *= pe;
  }
  return q;
}

unsigned valuation(const BigInt& n, const BigInt& p) {
  if (sgn(n) == 0) fail(ErrorKind::Domain, "valuation of zero");
  if (p < 2) fail(ErrorKind::Domain, "valuation needs a prime, got " + p.get_str());
  BigInt rest = abs(n);
  unsigned e = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  return e;
}

std::vector<BigInt> divisors(const Factorization& f, std::size_t cap) {
  std::vector<BigInt> out{BigInt(1)};
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  if (out.size() > cap) out.resize(cap);
  return out;
}

}  // namespace arith
}  // namespace surd
