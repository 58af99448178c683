#include "surd/report.hpp"

#include <ostream>
#include <sstream>

namespace surd::report {

namespace {

json strings(const std::vector<BigInt>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

}  // namespace

json to_json(const cfrac::PeriodicCF& cf) {
  return {{"b0", cf.b0.get_str()},
          {"period", strings(cf.period)},
          {"m", cf.m()},
          {"period_length", cf.period_length()},
          {"minimal", cf.minimal},
          {"text", cf.to_string()}};
}

json to_json(const cfrac::RationalCF& cf) {
  return {{"terms", strings(cf.terms)}, {"n", cf.n()}, {"text", cf.to_string()}};
}

json to_json(const rings::QuadUnit& u) {
  return {{"N", u.N.get_str()}, {"r", u.r.get_str()}, {"s", u.s.get_str()}, {"norm", u.norm}};
}

json to_json(const theorems::UnitConvergentLink& link) {
  return {{"unit", to_json(link.unit)}, {"t", link.t.get_str()}, {"k", link.k}, {"Q_next", link.next_q.get_str()}};
}

json to_json(const theorems::Theorem3Result& r) {
  json vals = json::array();
  for (const auto& v : r.valuations) {
    vals.push_back({{"p", v.p.get_str()}, {"e", v.e}, {"f", v.f}, {"g", v.g}, {"exponent", v.exponent}});
  }
  return {{"l", r.l},
          {"k", r.k},
          {"t", r.t.get_str()},
          {"rational", to_json(r.rational)},
          {"predicted", to_json(r.predicted)},
          {"computed", to_json(r.computed)},
          {"D_prime", r.D_prime.get_str()},
          {"Q_prime", r.Q_prime.get_str()},
          {"a", r.a.get_str()},
          {"valuations", vals}};
}

json to_json(const sweep::ReportRow& row) {
  json out = {{"D", std::to_string(row.D)},
              {"Q", std::to_string(row.Q)},
              {"check", std::string(sweep::to_string(row.check))},
              {"status", row.pass ? "pass" : "fail"}};
  if (!row.detail.empty()) out["detail"] = row.detail;
  return out;
}

json summary_json(const sweep::SweepReport& report, const sweep::SweepOptions& options) {
  const auto& s = report.stats;
  json failures = json::array();
  for (const auto& row : report.rows) {
    if (!row.pass) failures.push_back(to_json(row));
  }
  return {{"d_max", std::to_string(options.d_max)},
          {"l_max", options.l_max},
          {"q_policy", options.q_policy == sweep::QPolicy::All ? "all" : "one"},
          {"surds_checked", s.surds_checked},
          {"units_checked", s.units_checked},
          {"irregular_units", s.irregular_units},
          {"theorem3_instances", s.theorem3_instances},
          {"invariant_checks", s.invariant_checks},
          {"max_period_length", s.max_period_length},
          {"max_period_at", {{"D", std::to_string(s.max_period_D)}, {"Q", std::to_string(s.max_period_Q)}}},
          {"epsilon_norm_minus_one", s.epsilon_norm_minus_one},
          {"eta_norm_minus_one", s.eta_norm_minus_one},
          {"unlinked_square_indices", s.unlinked_square_indices},
          {"violations", s.violations},
          {"failures", failures},
          {"ok", report.ok()}};
}

void write_jsonl(std::ostream& out, const sweep::SweepReport& report) {
  for (const auto& row : report.rows) out << to_json(row).dump() << '\n';
}

std::string human_summary(const sweep::SweepReport& report, const sweep::SweepOptions& options) {
  const auto& s = report.stats;
  std::ostringstream os;
  os << "sweep D <= " << options.d_max << (options.q_policy == sweep::QPolicy::ClassicalOnly ? " (Q = 1)" : "")
     << ", l_max = " << options.l_max << '\n'
     << "  surds checked:        " << s.surds_checked << '\n'
     << "  units checked:        " << s.units_checked << '\n'
     << "  irregular units:      " << s.irregular_units << '\n'
     << "  theorem-3 instances:  " << s.theorem3_instances << '\n'
     << "  invariant checks:     " << s.invariant_checks << '\n'
     << "  max period length:    " << s.max_period_length << " (D=" << s.max_period_D << ", Q=" << s.max_period_Q
     << ")\n"
     << "  norm(epsilon) = -1:   " << s.epsilon_norm_minus_one << '\n'
     << "  norm(eta) = -1:       " << s.eta_norm_minus_one << '\n'
     << "  unlinked Q/t^2 slots: " << s.unlinked_square_indices << '\n'
     << "  violations:           " << s.violations << '\n';
  for (const auto& row : report.rows) {
    if (!row.pass) os << "  FAIL " << sweep::to_string(row.check) << ": " << row.detail << '\n';
  }
  return os.str();
}

}  // namespace surd::report
