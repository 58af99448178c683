#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "surd/cfrac.hpp"
#include "surd/sweep.hpp"
#include "surd/theorems.hpp"

// JSON views of library results. Big integers are always decimal strings.
namespace surd::report {

using nlohmann::json;

json to_json(const cfrac::PeriodicCF& cf);
json to_json(const cfrac::RationalCF& cf);
json to_json(const rings::QuadUnit& u);
json to_json(const theorems::UnitConvergentLink& link);
json to_json(const theorems::Theorem3Result& r);

/// {"D":..,"Q":..,"check":..,"status":"pass"|"fail"[,"detail":..]}
json to_json(const sweep::ReportRow& row);
json summary_json(const sweep::SweepReport& report, const sweep::SweepOptions& options);

/// One row per line.
void write_jsonl(std::ostream& out, const sweep::SweepReport& report);
std::string human_summary(const sweep::SweepReport& report, const sweep::SweepOptions& options);

}  // namespace surd::report
