#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "surd/error.hpp"
#include "surd/report.hpp"
#include "surd/sweep.hpp"
#include "surd/theorems.hpp"

namespace surd::cli {

namespace {

using report::json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kBadInput = 2;

BigInt parse_positive(const std::string& text, const char* what) {
  const bool digits = !text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (!digits) fail(ErrorKind::Domain, std::string(what) + " is not a positive integer: " + text);
  BigInt v(text, 10);
  if (sgn(v) <= 0) fail(ErrorKind::Domain, std::string(what) + " must be positive");
  return v;
}

struct Outcome {
  std::string check;
  bool pass = true;
  std::string text;
  json detail;
};

// ---- expand ---------------------------------------------------------------

int cmd_expand(const std::string& d, const std::string& q, std::size_t periods, bool as_json, std::ostream& out) {
  const auto surd = cfrac::Surd::make(parse_positive(d, "D"), parse_positive(q, "Q"));
  cfrac::ExpandOptions opts;
  opts.repeats = periods;
  const auto cf = cfrac::expand(surd, opts);
  if (as_json) {
    json doc = report::to_json(cf);
    doc["D"] = surd.D().get_str();
    doc["Q"] = surd.Q().get_str();
    out << doc.dump() << '\n';
    return kOk;
  }
  out << surd.to_string() << " = " << cf.to_string() << '\n'
      << "b0: " << cf.b0 << '\n'
      << "period:";
  for (const auto& b : cf.period) out << ' ' << b;
  out << '\n' << "m: " << cf.m() << '\n' << "period length: " << cf.period_length() << '\n';
  return kOk;
}

// ---- units ----------------------------------------------------------------

int cmd_units(const std::string& d, const std::string& q, unsigned count, bool as_json, std::ostream& out) {
  auto inst = theorems::Instance::make(parse_positive(d, "D"), parse_positive(q, "Q"));
  const auto ladder = theorems::unit_ladder(inst, count);
  const auto& ctx = inst.ctx;

  if (as_json) {
    json rows = json::array();
    for (const auto& r : ladder.rungs) {
      rows.push_back({{"j", r.power},
                      {"r", r.link.unit.r.get_str()},
                      {"s", r.link.unit.s.get_str()},
                      {"norm", r.link.unit.norm},
                      {"t", r.link.t.get_str()},
                      {"k", r.link.k},
                      {"class", std::string(rings::to_string(r.cls))}});
    }
    json doc = {{"D", ctx.D.get_str()},       {"Q", ctx.Q.get_str()},   {"q", ctx.q.get_str()},
                {"D1", ctx.D1.get_str()},     {"D2", ctx.D2.get_str()}, {"period_length", inst.period_length()},
                {"epsilon", report::to_json(ladder.epsilon)}, {"eta", report::to_json(ladder.eta)},
                {"eta_power", ladder.eta_power},  {"rows", rows}};
    out << doc.dump() << '\n';
    return kOk;
  }

  out << inst.table.surd().to_string() << ": q=" << ctx.q << " D1=" << ctx.D1 << " D2=" << ctx.D2
      << " period length " << inst.period_length() << '\n'
      << "epsilon = " << ladder.epsilon.to_string() << ", eta = " << ladder.eta.to_string() << " = epsilon^"
      << ladder.eta_power << '\n';
  out << std::setw(4) << "j" << std::setw(24) << "r" << std::setw(24) << "s" << std::setw(6) << "norm"
      << std::setw(8) << "t" << std::setw(6) << "k" << "  class\n";
  for (const auto& r : ladder.rungs) {
    out << std::setw(4) << r.power << std::setw(24) << r.link.unit.r << std::setw(24) << r.link.unit.s
        << std::setw(6) << (r.link.unit.norm > 0 ? "+1" : "-1") << std::setw(8) << r.link.t << std::setw(6)
        << r.link.k << "  " << rings::to_string(r.cls) << '\n';
  }
  return kOk;
}

// ---- verify ---------------------------------------------------------------

template <class F>
Outcome attempt(const std::string& check, F&& body) {
  Outcome o{check, true, {}, json::object()};
  try {
    body(o);
  } catch (const Error& e) {
    if (e.is_validation() || e.kind() == ErrorKind::BadDivisor || e.kind() == ErrorKind::NotRegularIndex) throw;
    o.pass = false;
    o.text = e.what();
    o.detail = {{"error", e.what()}};
  }
  return o;
}

Outcome check_t1(theorems::Instance& inst) {
  return attempt("t1", [&](Outcome& o) {
    const auto ladder = theorems::unit_ladder(inst, 1);
    json links = json::array();
    for (const auto& r : ladder.cycle) {
      const auto shifted = theorems::verify_theorem1_shift(inst, r.link);
      links.push_back({{"j", r.power}, {"link", report::to_json(r.link)}, {"shifted_k", shifted.k}});
      o.text += "  epsilon^" + std::to_string(r.power) + ": t=" + r.link.t.get_str() + " k=" +
                std::to_string(r.link.k) + " Q_{k+1}=" + r.link.next_q.get_str() + ", next period k=" +
                std::to_string(shifted.k) + "\n";
    }
    o.detail = {{"links", links}};
  });
}

Outcome check_t2(theorems::Instance& inst, std::size_t l_max) {
  return attempt("t2", [&](Outcome& o) {
    json rows = json::array();
    for (const auto& r : theorems::verify_theorem2(inst, l_max)) {
      rows.push_back({{"l", r.l}, {"k", r.k}, {"unit", report::to_json(r.unit)}, {"power", r.power}});
      o.text += "  l=" + std::to_string(r.l) + " k=" + std::to_string(r.k) + ": " + r.unit.to_string() + " = eta^" +
                std::to_string(r.power) + "\n";
    }
    o.detail = {{"rows", rows}};
  });
}

Outcome check_c1(theorems::Instance& inst, std::size_t l_max) {
  return attempt("c1", [&](Outcome& o) {
    const auto res = theorems::verify_corollary1(inst, l_max);
    json rows = json::array();
    for (const auto& r : res.rows) {
      rows.push_back({{"l", r.l},
                      {"k", r.k},
                      {"k_prime", r.k_prime},
                      {"r", r.r.get_str()},
                      {"s", r.s.get_str()},
                      {"s_prime", r.s_prime.get_str()}});
      o.text += "  l=" + std::to_string(r.l) + ": r_" + std::to_string(r.k) + " = r'_" + std::to_string(r.k_prime) +
                " = " + r.r.get_str() + ", s_" + std::to_string(r.k) + " = Q*s'_" + std::to_string(r.k_prime) +
                " = " + inst.ctx.Q.get_str() + "*" + r.s_prime.get_str() + "\n";
    }
    o.detail = {{"period_length", res.period_length}, {"period_length_d2", res.period_length_d2}, {"rows", rows}};
  });
}

Outcome check_t3(theorems::Instance& inst, std::size_t l, const std::optional<std::string>& t_text) {
  std::vector<BigInt> ts;
  if (t_text) {
    ts.push_back(parse_positive(*t_text, "t"));
  } else {
    const BigInt s = inst.table.at(l * inst.period_length() - 1).s;
    BigInt cofactor;
    ts = arith::divisors(arith::factorize_smooth(s, 1000, cofactor), 64);
    if (std::find(ts.begin(), ts.end(), s) == ts.end()) ts.push_back(s);
  }
  return attempt("t3", [&](Outcome& o) {
    json results = json::array();
    for (const auto& t : ts) {
      const auto r = theorems::verify_theorem3(inst, l, t);
      results.push_back(report::to_json(r));
      o.text += "  k=" + std::to_string(r.k) + " t=" + r.t.get_str() + ": r_k/t=" + r.rational.to_string() +
                ", predicted " + r.predicted.to_string() + ", sqrt(" + r.D_prime.get_str() + "/" +
                r.Q_prime.get_str() + ") = " + r.computed.to_string() + "\n";
    }
    o.detail = {{"instances", results}};
  });
}

struct VerifyArgs {
  std::string d, q, which = "all";
  std::size_t l = 1, l_max = 2;
  std::optional<std::string> t;
};

int cmd_verify(const VerifyArgs& a, bool as_json, std::ostream& out) {
  auto inst = theorems::Instance::make(parse_positive(a.d, "D"), parse_positive(a.q, "Q"));
  const bool all = a.which == "all";
  std::vector<Outcome> results;
  if (all || a.which == "t1") results.push_back(check_t1(inst));
  if (all || a.which == "t2") results.push_back(check_t2(inst, a.l_max));
  if (all || a.which == "c1") results.push_back(check_c1(inst, a.l_max));
  if (all || a.which == "t3") results.push_back(check_t3(inst, a.l, a.t));

  const bool ok = std::all_of(results.begin(), results.end(), [](const Outcome& o) { return o.pass; });
  if (as_json) {
    json checks = json::array();
    for (const auto& o : results) {
      checks.push_back({{"check", o.check}, {"status", o.pass ? "pass" : "fail"}, {"detail", o.detail}});
    }
    out << json{{"D", inst.ctx.D.get_str()}, {"Q", inst.ctx.Q.get_str()}, {"ok", ok}, {"checks", checks}}.dump()
        << '\n';
  } else {
    out << inst.table.surd().to_string() << " = " << inst.table.cf().to_string() << '\n';
    for (const auto& o : results) {
      out << (o.pass ? "PASS " : "FAIL ") << o.check << '\n';
      if (o.pass) {
        out << o.text;
      } else {
        out << "  " << o.text << '\n';
      }
    }
  }
  return ok ? kOk : kViolation;
}

// ---- sweep ----------------------------------------------------------------

int cmd_sweep(const sweep::SweepOptions& opts, bool serial, const std::string& jsonl, bool as_json,
              std::ostream& out) {
  if (opts.d_max < 2) fail(ErrorKind::Domain, "--dmax must be >= 2");
  const auto rep = serial ? sweep::sweep_serial(opts) : sweep::sweep(opts);
  if (!jsonl.empty()) {
    std::ofstream file(jsonl);
    if (!file) fail(ErrorKind::Domain, "cannot write " + jsonl);
    report::write_jsonl(file, rep);
  }
  if (as_json) {
    out << report::summary_json(rep, opts).dump() << '\n';
  } else {
    out << report::human_summary(rep, opts);
  }
  return rep.ok() ? kOk : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continued fractions of sqrt(D/Q) and units of Z[sqrt(Dq^2/Q)], Z[sqrt(DQ)]", "surd"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit one JSON document instead of text");

  std::string d, q;
  auto* expand = app.add_subcommand("expand", "Periodic continued fraction of sqrt(D/Q)")->fallthrough();
  std::size_t periods = 1;
  expand->add_option("D", d)->required();
  expand->add_option("Q", q)->required();
  expand->add_option("--periods", periods, "Report this many copies of the minimal period")
      ->check(CLI::PositiveNumber);

  auto* units = app.add_subcommand("units", "Powers of the fundamental unit of Z[sqrt(D1)] and their convergents")
                    ->fallthrough();
  unsigned count = 4;
  units->add_option("D", d)->required();
  units->add_option("Q", q)->required();
  units->add_option("--count", count, "Number of powers")->check(CLI::PositiveNumber);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check the unit/convergent theorems for one surd")->fallthrough();
  verify->add_option("D", va.d)->required();
  verify->add_option("Q", va.q)->required();
  verify->add_option("--which", va.which)->check(CLI::IsMember({"t1", "t2", "c1", "t3", "all"}));
  verify->add_option("--l", va.l, "Period index for t3")->check(CLI::PositiveNumber);
  verify->add_option("--lmax", va.l_max, "Periods checked by t2 and c1")->check(CLI::PositiveNumber);
  std::string t_text;
  auto* t_opt = verify->add_option("--t", t_text, "Divisor of s_k for t3 (default: small divisors)");

  sweep::SweepOptions so;
  bool serial = false, q_one = false;
  std::string jsonl;
  auto* sw = app.add_subcommand("sweep", "Verify every admissible (D, Q) with D <= dmax")->fallthrough();
  sw->add_option("--dmax", so.d_max);
  sw->add_option("--lmax", so.l_max)->check(CLI::PositiveNumber);
  sw->add_option("--jobs", so.jobs, "Threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
  sw->add_flag("--q-one", q_one, "Only Q = 1");
  sw->add_flag("--serial", serial, "Use the serial reference kernel");
  sw->add_option("--jsonl", jsonl, "Write one JSON row per check to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (*expand) return cmd_expand(d, q, periods, as_json, out);
    if (*units) return cmd_units(d, q, count, as_json, out);
    if (*verify) {
      if (t_opt->count() > 0) va.t = t_text;
      return cmd_verify(va, as_json, out);
    }
    so.q_policy = q_one ? sweep::QPolicy::ClassicalOnly : sweep::QPolicy::All;
    return cmd_sweep(so, serial, jsonl, as_json, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    const bool input = e.is_validation() || e.kind() == ErrorKind::BadDivisor || e.kind() == ErrorKind::NotRegularIndex;
    return input ? kBadInput : kViolation;
  }
}

}  // namespace surd::cli
