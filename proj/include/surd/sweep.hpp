#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace surd::sweep {

enum class QPolicy { All, ClassicalOnly };

struct SweepOptions {
  std::uint64_t d_max = 500;
  QPolicy q_policy = QPolicy::All;
  std::size_t l_max = 2;
  unsigned ladder_levels = 4;
  /// Theorem-3 divisors t of s_m tried per surd, smallest first.
  std::size_t divisor_cap = 64;
  /// Divisors are drawn from the part of s_m made of primes below this bound;
  /// t = s_m itself is always tried as well.
  unsigned long divisor_prime_bound = 1000;
  /// 0 lets OpenMP decide.
  int jobs = 0;
  bool keep_rows = true;
};

enum class Check { Expand, Invariants, Ladder, Theorem1, Theorem2, Corollary1, Theorem3 };
std::string_view to_string(Check c) noexcept;

struct ReportRow {
  std::uint64_t D = 0;
  std::uint64_t Q = 0;
  Check check = Check::Expand;
  bool pass = true;
  std::string detail;  // empty on pass

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct SweepStats {
  std::uint64_t surds_checked = 0;
  std::uint64_t units_checked = 0;
  std::uint64_t irregular_units = 0;
  std::uint64_t theorem3_instances = 0;
  std::uint64_t invariant_checks = 0;
  std::uint64_t max_period_length = 0;
  std::uint64_t max_period_D = 0;
  std::uint64_t max_period_Q = 0;
  /// Surds whose epsilon (resp. eta) has norm -1.
  std::uint64_t epsilon_norm_minus_one = 0;
  std::uint64_t eta_norm_minus_one = 0;
  /// First-period indices with Q_{k+1} = Q/t^2 for a square t^2 that no unit links to.
  std::uint64_t unlinked_square_indices = 0;
  std::uint64_t violations = 0;

  void merge(const SweepStats& other);
  friend bool operator==(const SweepStats&, const SweepStats&) = default;
};

struct SweepReport {
  SweepStats stats;
  std::vector<ReportRow> rows;

  bool ok() const noexcept { return stats.violations == 0; }
  /// Appends another partial report. Not synchronized; callers serialize.
  void merge(SweepReport&& other);
  /// Orders rows by (D, Q, check) so output does not depend on scheduling.
  void sort_rows();
};

/// Admissible (D, Q): 2 <= D <= d_max, 1 <= Q < D, gcd(D, Q) = 1, DQ not a square.
std::vector<std::pair<std::uint64_t, std::uint64_t>> admissible_pairs(std::uint64_t d_max, QPolicy policy);

/// Every verifier on one surd. Failures become rows; nothing throws.
SweepReport verify_pair(std::uint64_t D, std::uint64_t Q, const SweepOptions& options);

/// Reference implementation: one pair after another.
SweepReport sweep_serial(const SweepOptions& options);

/// OpenMP over pairs; identical result to sweep_serial after sort_rows().
SweepReport sweep(const SweepOptions& options);

}  // namespace surd::sweep
