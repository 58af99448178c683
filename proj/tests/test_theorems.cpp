#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "surd/error.hpp"
#include "surd/theorems.hpp"

using namespace surd;
using namespace surd::theorems;
using rings::UnitClass;

namespace {

std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::Domain;
}

}  // namespace

TEST_CASE("link_unit on the powers of epsilon for 157/45") {
  auto inst = Instance::make(157, 45);
  const auto e = rings::fundamental_unit(785);

  auto l1 = link_unit(inst, e);
  CHECK(l1.t == 1);
  CHECK(l1.k == 4);
  CHECK(l1.next_q == 45);

  auto l2 = link_unit(inst, rings::unit_pow(e, 2));
  CHECK(l2.t == 3);
  CHECK(l2.k == 7);
  CHECK(l2.next_q == 5);
  CHECK(inst.table[7].r == 523);
  CHECK(inst.table[7].s == 280);

  auto l3 = link_unit(inst, rings::unit_pow(e, 3));
  CHECK(l3.t == 1);
  CHECK(l3.k == 10);
  CHECK(inst.table[10].s == 47055);

  // Units of another ring are not accepted.
  CHECK(kind_of([&] { link_unit(inst, rings::fundamental_unit(6)); }) == ErrorKind::Domain);
}

TEST_CASE("unit link shifts by one period") {
  auto inst = Instance::make(157, 45);
  const auto e = rings::fundamental_unit(785);
  auto s1 = verify_theorem1_shift(inst, link_unit(inst, e));
  CHECK(s1.k == 20);
  CHECK(s1.unit == rings::unit_pow(e, 5));
  auto s2 = verify_theorem1_shift(inst, link_unit(inst, rings::unit_pow(e, 2)));
  CHECK(s2.k == 23);
  CHECK(s2.t == 3);

  auto small = Instance::make(3, 2);
  auto link = link_unit(small, rings::fundamental_unit(6));
  CHECK(link.k == 1);
  CHECK(link.t == 1);
  CHECK(verify_theorem1_shift(small, link).k == 3);
}

TEST_CASE("end-of-period convergents give powers of eta") {
  auto inst = Instance::make(157, 45);
  auto rows = verify_theorem2(inst, 3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].k == 15);
  CHECK(rows[0].unit.r == 4923521);
  CHECK(rows[0].unit.s == 58576);
  CHECK(rows[0].power == 1);
  CHECK(rows[2].k == 47);
  CHECK(rows[2].power == 3);

  auto small = Instance::make(3, 2);
  auto srows = verify_theorem2(small, 1);
  CHECK(srows[0].k == 1);
  CHECK(srows[0].unit.r == 5);
  CHECK(srows[0].unit.s == 2);

  auto classical = Instance::make(94, 1);
  auto crows = verify_theorem2(classical, 1);
  CHECK(crows[0].k == classical.m());
  CHECK(crows[0].unit == rings::fundamental_unit(94));
}

TEST_CASE("end-of-period convergents against sqrt(D2)") {
  auto inst = Instance::make(157, 45);
  auto res = verify_corollary1(inst, 2);
  CHECK(res.period_length == 16);
  CHECK(res.period_length_d2 == 8);
  CHECK(res.rows[0].k == 15);
  CHECK(res.rows[0].k_prime == 7);
  CHECK(res.rows[0].r == 4923521);
  CHECK(res.rows[0].s_prime == 58576);
  CHECK(res.rows[0].s_prime * 45 == 2635920);

  auto small = Instance::make(3, 2);
  auto sres = verify_corollary1(small, 1);
  CHECK(cfrac::expand(cfrac::Surd::make(6, 1)).to_string() == "[2,{2,4}]");
  CHECK(sres.rows[0].r == 5);
  CHECK(sres.rows[0].s == 4);
  CHECK(sres.rows[0].s_prime == 2);
}

TEST_CASE("unit ladder") {
  auto inst = Instance::make(157, 45);
  auto ladder = unit_ladder(inst, 4);
  REQUIRE(ladder.rungs.size() == 4);
  std::vector<std::size_t> ks;
  for (const auto& r : ladder.rungs) ks.push_back(r.link.k);
  CHECK(ks == std::vector<std::size_t>{4, 7, 10, 15});
  CHECK(ladder.rungs[0].cls == UnitClass::Irregular);
  CHECK(ladder.rungs[1].cls == UnitClass::Irregular);
  CHECK(ladder.rungs[2].cls == UnitClass::Irregular);
  CHECK(ladder.rungs[3].cls == UnitClass::Regular);
  CHECK(ladder.eta_power == 4);
  CHECK(ladder.eta.r == 4923521);

  auto longer = unit_ladder(inst, 9);
  std::vector<std::size_t> ks9;
  for (const auto& r : longer.rungs) ks9.push_back(r.link.k);
  CHECK(ks9 == std::vector<std::size_t>{4, 7, 10, 15, 20, 23, 26, 31, 36});

  auto small = Instance::make(3, 2);
  auto sl = unit_ladder(small, 2);
  CHECK(sl.rungs[0].link.k == 1);
  CHECK(sl.rungs[1].link.k == 3);
  CHECK(sl.rungs[0].cls == UnitClass::Regular);
  CHECK(sl.rungs[1].cls == UnitClass::Regular);
}

TEST_CASE("divisor expansions") {
  auto inst = Instance::make(157, 45);
  auto r = verify_theorem3(inst, 1, 1008);
  CHECK(r.k == 15);
  CHECK(r.rational.terms == big({4884, 2, 4, 12, 4, 2}));
  CHECK(r.rational.n() == 5);
  CHECK(r.predicted.to_string() == "[4884,{2,4,12,4,2,9768}]");
  CHECK(r.computed == r.predicted);
  // (s_15 / t) sqrt(157/45) = 523 sqrt(785) / 3 = sqrt(523^2 * 785 / 9).
  CHECK(r.D_prime == BigInt(523) * 523 * 785);
  CHECK(r.Q_prime == 9);
  CHECK(r.a == 112);
  for (const auto& v : r.valuations) {
    CHECK(v.exponent >= 0);
    CHECK(v.exponent % 2 == 0);
  }

  auto self = verify_theorem3(inst, 1, 2635920);
  CHECK(self.D_prime == 157);
  CHECK(self.Q_prime == 45);
  CHECK(self.computed == cfrac::expand(cfrac::Surd::make(157, 45)));

  auto small = Instance::make(3, 2);
  auto s = verify_theorem3(small, 1, 1);
  CHECK(s.rational.terms == big({4, 1}));
  CHECK(s.predicted.to_string() == "[4,{1,8}]");
  CHECK(s.computed.to_string() == "[4,{1,8}]");
  CHECK(s.D_prime == 24);

  // Later periods: the predicted word may be a repetition of the minimal one.
  auto l2 = verify_theorem3(inst, 2, 1);
  CHECK(l2.k == 31);

  CHECK(kind_of([&] { verify_theorem3(inst, 1, 11); }) == ErrorKind::BadDivisor);
  CHECK(kind_of([&] { verify_theorem3_at(inst, 14, 1); }) == ErrorKind::NotRegularIndex);
  CHECK(kind_of([&] { verify_theorem3(inst, 0, 1); }) == ErrorKind::Domain);
}

TEST_CASE("divisor expansions on all divisors of s_m for a few surds") {
  for (auto [D, Q] : {std::pair{157ul, 45ul}, {61ul, 1ul}, {97ul, 72ul}, {23ul, 12ul}}) {
    auto inst = Instance::make(D, Q);
    const auto s = inst.table.at(inst.m()).s;
    BigInt rest;
    const auto f = arith::factorize_smooth(s, 100000, rest);
    if (rest != 1) continue;
    for (const auto& t : arith::divisors(f, 4096)) {
      const auto r = verify_theorem3(inst, 1, t);
      REQUIRE(r.Q_prime * r.a == t);
    }
  }
}

TEST_CASE("expansion invariants") {
  auto inst = Instance::make(157, 45);
  CHECK(verify_expansion_invariants(inst, 80) > 320);
}

TEST_CASE("link totality: every unit up to epsilon^8 links, with t^2 | Q") {
  for (unsigned long D = 2; D <= 60; ++D) {
    for (unsigned long Q = 1; Q < D; ++Q) {
      const BigInt r = oracle::gmp_sqrt(BigInt(D * Q));
      if (std::gcd(D, Q) != 1 || r * r == D * Q) continue;
      auto inst = Instance::make(D, Q);
      const auto e = rings::fundamental_unit(inst.ctx.D1);
      auto u = e;
      std::size_t last = 0;
      for (int j = 1; j <= 8; ++j) {
        const auto link = link_unit(inst, u);
        REQUIRE(link.next_q * link.t * link.t == Q);
        if (j > 1) REQUIRE(link.k > last);
        last = link.k;
        u = rings::unit_mul(u, e);
      }
    }
  }
}
