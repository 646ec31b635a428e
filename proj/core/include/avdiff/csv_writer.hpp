#pragma once

#include <string>

#include "avdiff/economics.hpp"
#include "avdiff/scenario.hpp"

namespace avdiff {

/// Shortest decimal text that parses back to the same double. Always uses
/// '.' regardless of the global locale.
std::string format_number(double value);

/// `year,level,new_adopters,cumulative,raw_share,allocated_share`, one row
/// per (year, level) the level is simulated or pooled, year-major, clipped
/// to the scenario horizon. First line: `# manifest_sha256=<hash>`.
std::string trajectories_csv(const ScenarioResult& result, const std::string& manifest_hash);

/// `year,level,vehicles,unit_price_eur,va_eur,va_hw_eur,va_sw_eur`; EUR, not
/// billions. unit_price_eur is the per-vehicle value on the table's basis.
std::string value_added_csv(const ValueAddedTable& table, const std::string& manifest_hash);

}  // namespace avdiff
