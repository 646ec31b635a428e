#pragma once

#include <string>

#include "avdiff/economics.hpp"
#include "avdiff/scenario.hpp"

namespace avdiff {

/// Line chart of allocated shares (percent of registrations) per level over
/// the scenario horizon. Output is a pure function of the inputs.
std::string share_chart_svg(const ScenarioResult& result, const std::string& manifest_hash);

/// Stacked area of annual value added per level, billions of EUR.
std::string value_added_chart_svg(const ValueAddedTable& table, const std::string& manifest_hash);

}  // namespace avdiff
