#include "surd/sweep.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include <omp.h>

#include "surd/error.hpp"
#include "surd/theorems.hpp"

namespace surd::sweep {

std::string_view to_string(Check c) noexcept {
  switch (c) {
    case Check::Expand: return "expand";
    case Check::Invariants: return "invariants";
    case Check::Ladder: return "ladder";
    case Check::Theorem1: return "t1";
    case Check::Theorem2: return "t2";
    case Check::Corollary1: return "c1";
    case Check::Theorem3: return "t3";
  }
  return "unknown";
}

void SweepStats::merge(const SweepStats& o) {
  surds_checked += o.surds_checked;
  units_checked += o.units_checked;
  irregular_units += o.irregular_units;
  theorem3_instances += o.theorem3_instances;
  invariant_checks += o.invariant_checks;
  if (std::tie(o.max_period_length, max_period_D, max_period_Q) >
      std::tie(max_period_length, o.max_period_D, o.max_period_Q)) {
    // Longest period wins; ties go to the smaller (D, Q).
    max_period_length = o.max_period_length;
    max_period_D = o.max_period_D;
    max_period_Q = o.max_period_Q;
  }
  epsilon_norm_minus_one += o.epsilon_norm_minus_one;
  eta_norm_minus_one += o.eta_norm_minus_one;
  unlinked_square_indices += o.unlinked_square_indices;
  violations += o.violations;
}

void SweepReport::merge(SweepReport&& other) {
  stats.merge(other.stats);
  rows.insert(rows.end(), std::make_move_iterator(other.rows.begin()), std::make_move_iterator(other.rows.end()));
}

void SweepReport::sort_rows() {
  std::sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return std::tie(a.D, a.Q, a.check) < std::tie(b.D, b.Q, b.check);
  });
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> admissible_pairs(std::uint64_t d_max, QPolicy policy) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t D = 2; D <= d_max; ++D) {
    const std::uint64_t q_end = policy == QPolicy::ClassicalOnly ? 2 : D;
    for (std::uint64_t Q = 1; Q < q_end; ++Q) {
      if (std::gcd(D, Q) != 1) continue;
      const std::uint64_t n = D * Q;
      auto r = static_cast<std::uint64_t>(arith::isqrt(BigInt(static_cast<unsigned long>(n))).get_ui());
      if (r * r == n) continue;
      out.emplace_back(D, Q);
    }
  }
  return out;
}

namespace {

class PairRun {
 public:
  PairRun(std::uint64_t D, std::uint64_t Q, const SweepOptions& opts) : D_(D), Q_(Q), opts_(opts) {}

  template <class F>
  bool run(Check check, F&& body) {
    std::string detail;
    try {
      body();
    } catch (const Error& e) {
      detail = e.what();
    } catch (const std::exception& e) {
      detail = std::string("unexpected: ") + e.what();
    }
    const bool pass = detail.empty();
    if (!pass) ++report.stats.violations;
    if (opts_.keep_rows || !pass) report.rows.push_back({D_, Q_, check, pass, std::move(detail)});
    return pass;
  }

  SweepReport report;

 private:
  std::uint64_t D_, Q_;
  const SweepOptions& opts_;
};

bool is_perfect_square(const BigInt& n) { return arith::is_square(n); }

}  // namespace

SweepReport verify_pair(std::uint64_t D, std::uint64_t Q, const SweepOptions& opts) {
  PairRun run(D, Q, opts);
  auto& stats = run.report.stats;
  stats.surds_checked = 1;

  std::optional<theorems::Instance> inst;
  if (!run.run(Check::Expand, [&] {
        inst.emplace(theorems::Instance::make(BigInt(static_cast<unsigned long>(D)),
                                              BigInt(static_cast<unsigned long>(Q))));
      })) {
    return std::move(run.report);
  }
  const std::size_t len = inst->period_length();
  stats.max_period_length = len;
  stats.max_period_D = D;
  stats.max_period_Q = Q;

  theorems::Ladder ladder;
  const bool ladder_ok = run.run(Check::Ladder, [&] {
    ladder = theorems::unit_ladder(*inst, opts.ladder_levels);
    stats.units_checked += ladder.rungs.size();
    for (const auto& r : ladder.rungs) {
      if (r.cls == rings::UnitClass::Irregular) ++stats.irregular_units;
    }
    stats.epsilon_norm_minus_one += ladder.epsilon.norm < 0;
    stats.eta_norm_minus_one += ladder.eta.norm < 0;

    std::set<std::size_t> linked;
    for (const auto& r : ladder.cycle) linked.insert(r.link.k);
    const BigInt& Qb = inst->ctx.Q;
    for (std::size_t k = 0; k < len; ++k) {
      const BigInt& nq = inst->table.at(k).next_q;
      if (linked.count(k) || !mpz_divisible_p(Qb.get_mpz_t(), nq.get_mpz_t())) continue;
      if (is_perfect_square(Qb / nq)) ++stats.unlinked_square_indices;
    }
  });

  if (ladder_ok) {
    run.run(Check::Theorem1, [&] {
      for (const auto& r : ladder.rungs) theorems::verify_theorem1_shift(*inst, r.link);
    });
  }

  run.run(Check::Theorem2, [&] { theorems::verify_theorem2(*inst, opts.l_max); });
  run.run(Check::Corollary1, [&] { theorems::verify_corollary1(*inst, opts.l_max); });

  run.run(Check::Theorem3, [&] {
    const BigInt s = inst->table.at(len - 1).s;
    BigInt cofactor;
    auto smooth = arith::factorize_smooth(s, opts.divisor_prime_bound, cofactor);
    auto ts = arith::divisors(smooth, opts.divisor_cap);
    if (std::find(ts.begin(), ts.end(), s) == ts.end()) ts.push_back(s);
    for (const auto& t : ts) {
      theorems::verify_theorem3(*inst, 1, t);
      ++stats.theorem3_instances;
    }
  });

  run.run(Check::Invariants, [&] {
    stats.invariant_checks += theorems::verify_expansion_invariants(*inst, inst->table.size());
  });
  return std::move(run.report);
}

SweepReport sweep_serial(const SweepOptions& options) {
  SweepReport report;
  for (const auto& [D, Q] : admissible_pairs(options.d_max, options.q_policy)) {
    report.merge(verify_pair(D, Q, options));
  }
  report.sort_rows();
  return report;
}

SweepReport sweep(const SweepOptions& options) {
  const auto pairs = admissible_pairs(options.d_max, options.q_policy);
  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
  const auto n = static_cast<std::int64_t>(pairs.size());

  SweepReport report;
#pragma omp parallel num_threads(threads)
  {
    SweepReport local;
#pragma omp for schedule(dynamic, 8) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      local.merge(verify_pair(pairs[i].first, pairs[i].second, options));
    }
#pragma omp critical(surd_sweep_merge)
    report.merge(std::move(local));
  }
  report.sort_rows();
  return report;
}

}  // namespace surd::sweep
