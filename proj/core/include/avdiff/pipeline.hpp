#pragma once

#include <map>
#include <vector>

#include "avdiff/economics.hpp"
#include "avdiff/scenario.hpp"

namespace avdiff {

using CostTable = std::map<AutomationLevel, CostParams>;

/// default_cost_params for L1-L5.
CostTable default_costs();

/// Default value-added window.
inline constexpr YearRange kDefaultVaHorizon{2020, 2050};

/// Everything computed for one scenario.
struct ScenarioRun {
    ScenarioSpec spec;
    ScenarioResult result;
    std::vector<CostCurve> cost_curves;
    ValueAddedTable va_price;
    ValueAddedTable va_cost;

    const ValueAddedTable& va(VaBasis basis) const { return basis == VaBasis::Price ? va_price : va_cost; }
};

/// run_scenario, then one cost curve per L1-L5 trajectory (levels missing
/// from `costs` use their defaults), then value added on both bases.
ScenarioRun evaluate_scenario(const ScenarioSpec& spec, const CostTable& costs,
                              const RegistrationSeries& registrations,
                              const YearRange& va_horizon = kDefaultVaHorizon);

}  // namespace avdiff
