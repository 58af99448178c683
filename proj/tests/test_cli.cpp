#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "surd/arith.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = surd::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Every string leaf that looks like a number must re-parse to the same integer.
void check_round_trip(const nlohmann::json& j) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      REQUIRE(surd::BigInt(s).get_str() == s);
    }
  } else if (j.is_structured()) {
    for (const auto& v : j) check_round_trip(v);
  } else {
    REQUIRE_FALSE(j.is_number_float());
  }
}

}  // namespace

TEST_CASE("expand") {
  auto r = cli({"expand", "157", "45"});
  CHECK(r.code == 0);
  CHECK(r.out.find("period length: 16") != std::string::npos);

  auto two = cli({"expand", "2", "1"});
  CHECK(two.code == 0);
  CHECK(two.out.find("[1,{2}]") != std::string::npos);

  auto bad = cli({"expand", "4", "1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("PerfectSquare") != std::string::npos);

  CHECK(cli({"expand", "6", "4"}).code == 2);
  CHECK(cli({"expand", "x", "4"}).code == 2);
  CHECK(cli({"expand", "157"}).code == 2);

  auto js = cli({"expand", "157", "45", "--json"});
  REQUIRE(js.code == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j.at("period_length") == 16);
  CHECK(j.at("b0") == "1");
  check_round_trip(j);

  auto rep = cli({"expand", "2", "1", "--periods", "3"});
  CHECK(rep.out.find("[1,{2,2,2}]") != std::string::npos);
}

TEST_CASE("units") {
  auto r = cli({"units", "157", "45", "--count", "4", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  check_round_trip(j);
  const auto& rows = j.at("rows");
  REQUIRE(rows.size() == 4);
  CHECK(rows[3].at("r") == "4923521");
  CHECK(rows[3].at("s") == "175728");
  CHECK(rows[3].at("norm") == 1);
  CHECK(rows[3].at("t") == "1");
  CHECK(rows[3].at("k") == 15);
  CHECK(rows[3].at("class") == "regular");
  CHECK(rows[0].at("r") == "28");
  CHECK(rows[0].at("s") == "1");
  CHECK(rows[0].at("norm") == -1);
  CHECK(rows[0].at("k") == 4);
  CHECK(rows[0].at("class") == "irregular");

  auto one = cli({"units", "157", "45", "--count", "1"});
  CHECK(one.code == 0);
  CHECK(one.out.find("irregular") != std::string::npos);

  auto small = nlohmann::json::parse(cli({"units", "3", "2", "--count", "1", "--json"}).out);
  CHECK(small.at("rows")[0].at("r") == "5");
  CHECK(small.at("rows")[0].at("s") == "2");
  CHECK(small.at("rows")[0].at("class") == "regular");
}

TEST_CASE("verify") {
  auto t3 = cli({"verify", "157", "45", "--which", "t3", "--l", "1", "--t", "1008"});
  CHECK(t3.code == 0);
  CHECK(t3.out.find("PASS t3") != std::string::npos);
  CHECK(t3.out.find("predicted [4884,{2,4,12,4,2,9768}]") != std::string::npos);

  auto c1 = cli({"verify", "157", "45", "--which", "c1", "--l", "1", "--json"});
  REQUIRE(c1.code == 0);
  const auto j = nlohmann::json::parse(c1.out);
  check_round_trip(j);
  CHECK(j.at("ok") == true);
  CHECK(j.at("checks")[0].at("detail").at("rows")[0].at("r") == "4923521");
  CHECK(j.at("checks")[0].at("detail").at("rows")[0].at("k_prime") == 7);

  CHECK(cli({"verify", "2", "1", "--which", "all"}).code == 0);
  CHECK(cli({"verify", "157", "45"}).code == 0);
  CHECK(cli({"verify", "157", "45", "--which", "t3", "--t", "11"}).code == 2);
  CHECK(cli({"verify", "157", "45", "--which", "t9"}).code == 2);
}

TEST_CASE("sweep") {
  auto r = cli({"sweep", "--dmax", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("surds checked:        1") != std::string::npos);
  CHECK(r.out.find("violations:           0") != std::string::npos);

  auto j = nlohmann::json::parse(cli({"sweep", "--dmax", "30", "--json", "--jobs", "2"}).out);
  CHECK(j.at("ok") == true);
  CHECK(j.at("violations") == 0);
  auto serial = nlohmann::json::parse(cli({"sweep", "--dmax", "30", "--json", "--serial"}).out);
  CHECK(serial == j);

  CHECK(cli({"sweep", "--dmax", "1"}).code == 2);
}
