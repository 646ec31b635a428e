#include "avdiff/pipeline.hpp"

#include <algorithm>

namespace avdiff {

CostTable default_costs() {
    CostTable table;
    for (auto level : kAllLevels) {
        if (level != AutomationLevel::L0) {
            table.emplace(level, default_cost_params(level));
        }
    }
    return table;
}

ScenarioRun evaluate_scenario(const ScenarioSpec& spec, const CostTable& costs,
                              const RegistrationSeries& registrations, const YearRange& va_horizon) {
    ScenarioRun run;
    run.spec = spec;
    run.result = run_scenario(spec, registrations);

    // Levels that never hold any share add no value and may have no resolvable anchor.
    std::vector<LevelTrajectory> priced;
    for (const auto& trajectory : run.result.trajectories) {
        if (trajectory.level == AutomationLevel::L0) continue;
        if (std::none_of(trajectory.allocated_share.begin(), trajectory.allocated_share.end(),
                         [](double s) { return s > 0.0; })) {
            continue;
        }
        priced.push_back(trajectory);
        auto it = costs.find(trajectory.level);
        const CostParams params = it != costs.end() ? it->second : default_cost_params(trajectory.level);
        AnchorHints hints;
        if (auto cfg = spec.levels.find(trajectory.level); cfg != spec.levels.end()) {
            hints.mass_market_year_override = cfg->second.mass_market_year_override;
            hints.configured_entry_year = cfg->second.entry_year;
        }
        run.cost_curves.push_back(build_cost_curve(params, trajectory, registrations, hints));
    }

    run.va_price = value_added(spec.name, priced, run.cost_curves, registrations, va_horizon,
                               VaBasis::Price);
    run.va_cost = value_added(spec.name, priced, run.cost_curves, registrations, va_horizon,
                              VaBasis::Cost);
    return run;
}

}  // namespace avdiff
