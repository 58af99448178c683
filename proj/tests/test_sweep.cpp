#include <doctest.h>

#include <sstream>

#include "surd/report.hpp"
#include "surd/sweep.hpp"


using namespace surd::sweep;
using surd::report::write_jsonl;

TEST_CASE("admissible pairs") {
  CHECK(admissible_pairs(2, QPolicy::All) == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 1}});
  const auto classical = admissible_pairs(10, QPolicy::ClassicalOnly);
  CHECK(classical.size() == 7);  // 2 3 5 6 7 8 10
  for (const auto& [D, Q] : admissible_pairs(40, QPolicy::All)) {
    REQUIRE(Q < D);
    REQUIRE(std::gcd(D, Q) == 1);
  }
  // (4,1), (9,4), (8,2) are excluded; (8,1) is admissible.
  const auto all = admissible_pairs(9, QPolicy::All);
  auto has = [&](std::uint64_t D, std::uint64_t Q) {
    return std::find(all.begin(), all.end(), std::pair{D, Q}) != all.end();
  };
  CHECK_FALSE(has(4, 1));
  CHECK_FALSE(has(9, 4));
  CHECK_FALSE(has(8, 2));
  CHECK(has(8, 1));
}

TEST_CASE("verify_pair on the worked example") {
  SweepOptions o;
  const auto rep = verify_pair(157, 45, o);
  CHECK(rep.ok());
  CHECK(rep.stats.irregular_units >= 3);
  CHECK(rep.stats.max_period_length == 16);
  CHECK(rep.stats.theorem3_instances >= 10);
  CHECK(rep.rows.size() == 7);
  for (const auto& row : rep.rows) CHECK(row.pass);
}

TEST_CASE("classical Pell sweep") {
  SweepOptions o;
  o.d_max = 10;
  o.q_policy = QPolicy::ClassicalOnly;
  const auto rep = sweep_serial(o);
  CHECK(rep.ok());
  CHECK(rep.stats.surds_checked == 7);
  CHECK(rep.stats.irregular_units == 0);
}

TEST_CASE("sweep including 157/45 passes") {
  SweepOptions o;
  o.d_max = 157;
  o.keep_rows = false;
  const auto rep = surd::sweep::sweep(o);
  CHECK(rep.ok());
  CHECK(rep.rows.empty());
  CHECK(rep.stats.irregular_units >= 3);
}

TEST_CASE("parallel kernel reproduces the serial reference") {
  SweepOptions o;
  o.d_max = 45;
  const auto ref = sweep_serial(o);
  for (int jobs : {1, 2, 3, 8}) {
    o.jobs = jobs;
    const auto par = surd::sweep::sweep(o);
    REQUIRE(par.stats == ref.stats);
    REQUIRE(par.rows == ref.rows);
  }
}

TEST_CASE("report rows serialize as one JSON object per line") {
  SweepOptions o;
  o.d_max = 6;
  const auto rep = surd::sweep::sweep(o);
  std::ostringstream os;
  surd::report::write_jsonl(os, rep);
  std::istringstream is(os.str());
  std::string line;
  std::size_t n = 0;
  while (std::getline(is, line)) {
    const auto j = nlohmann::json::parse(line);
    REQUIRE(j.at("D").is_string());
    REQUIRE(j.at("Q").is_string());
    REQUIRE(j.at("check").is_string());
    REQUIRE(j.at("status") == "pass");
    ++n;
  }
  CHECK(n == rep.rows.size());

  const auto summary = surd::report::summary_json(rep, o);
  CHECK(summary.at("ok") == true);
  CHECK(summary.at("violations") == 0);
  CHECK(surd::report::human_summary(rep, o).find("violations:           0") != std::string::npos);
}

TEST_CASE("violations are reported, not thrown") {
  SweepReport rep;
  rep.rows.push_back({7, 3, Check::Theorem2, false, "TheoremViolation: t2 D=7 Q=3 k=1: example"});
  rep.stats.violations = 1;
  CHECK_FALSE(rep.ok());
  const auto j = surd::report::to_json(rep.rows[0]);
  CHECK(j.at("status") == "fail");
  CHECK(j.at("check") == "t2");
  CHECK(j.at("detail").get<std::string>().find("k=1") != std::string::npos);
}
