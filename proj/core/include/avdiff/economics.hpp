#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "avdiff/costs.hpp"

namespace avdiff {

/// Price: value added per vehicle is the marked-up unit price (default).
/// Cost: production cost only.
enum class VaBasis { Price, Cost };

const char* to_string(VaBasis basis);
VaBasis parse_va_basis(const std::string& text);

struct ValueAddedCell {
    int year = 0;
    AutomationLevel level = AutomationLevel::L1;
    double vehicles = 0.0;
    double unit_value = 0.0;  ///< EUR/vehicle on the table's basis
    double va_total = 0.0;    ///< EUR
    double va_hw = 0.0;
    double va_sw = 0.0;
};

struct ValueAddedTable {
    std::string scenario_name;
    YearRange horizon;
    VaBasis basis = VaBasis::Price;
    /// Year-major, levels ascending; only (year, level) pairs where the level
    /// is on the market.
    std::vector<ValueAddedCell> cells;
    std::map<AutomationLevel, double> level_totals;
    double horizon_total = 0.0;
    double hw_total = 0.0;
    double sw_total = 0.0;
    /// Registrations summed over the horizon; identifies the input series.
    double registrations_total = 0.0;

    double annual_total(int year) const;
};

/// VA cell = allocated share x registrations x unit value, for L1-L5 (L0
/// carries no package). Throws ValidationError when the non-L0 trajectory
/// levels and the cost-curve levels differ, or when the horizon is not
/// covered by the registrations.
ValueAddedTable value_added(const std::string& scenario_name, std::span<const LevelTrajectory> trajectories,
                            std::span<const CostCurve> cost_curves, const RegistrationSeries& registrations,
                            const YearRange& horizon, VaBasis basis = VaBasis::Price);

struct ScenarioTotal {
    std::string name;
    double total = 0.0;
    double hardware = 0.0;
    double software = 0.0;
};

struct ScenarioComparison {
    std::vector<ScenarioTotal> totals;  ///< in the order given
    bool ordered = false;               ///< totals non-decreasing in that order
    bool strictly_ordered = false;
};

/// Needs at least two tables over the same horizon, basis and registration
/// series. Pass them as slow, baseline, fast to get the scenario ordering flag.
ScenarioComparison compare_scenarios(std::span<const ValueAddedTable> tables);

}  // namespace avdiff
