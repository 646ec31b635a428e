#include "avdiff/economics.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "avdiff/errors.hpp"

namespace avdiff {

const char* to_string(VaBasis basis) { return basis == VaBasis::Price ? "price" : "cost"; }

VaBasis parse_va_basis(const std::string& text) {
    if (text == "price") return VaBasis::Price;
    if (text == "cost") return VaBasis::Cost;
    throw ConfigError("unknown value-added basis '" + text + "' (expected price or cost)");
}

double ValueAddedTable::annual_total(int year) const {
    double total = 0.0;
    for (const auto& cell : cells) {
        if (cell.year == year) total += cell.va_total;
    }
    return total;
}

ValueAddedTable value_added(const std::string& scenario_name, std::span<const LevelTrajectory> trajectories,
                            std::span<const CostCurve> cost_curves, const RegistrationSeries& registrations,
                            const YearRange& horizon, VaBasis basis) {
    std::map<AutomationLevel, const LevelTrajectory*> by_level;
    for (const auto& t : trajectories) {
        if (t.level == AutomationLevel::L0) continue;
        if (!by_level.emplace(t.level, &t).second) {
            throw ValidationError(fmt::format("duplicate trajectory for {}", to_string(t.level)));
        }
    }
    std::map<AutomationLevel, const CostCurve*> curves;
    for (const auto& c : cost_curves) {
        if (!curves.emplace(c.level, &c).second) {
            throw ValidationError(fmt::format("duplicate cost curve for {}", to_string(c.level)));
        }
    }
    std::set<AutomationLevel> a, b;
    for (const auto& [lvl, _] : by_level) a.insert(lvl);
    for (const auto& [lvl, _] : curves) b.insert(lvl);
    if (a != b) {
        throw ValidationError("trajectory levels and cost-curve levels do not match");
    }
    if (horizon.first > horizon.last) {
        throw ValidationError(fmt::format("empty horizon {}-{}", horizon.first, horizon.last));
    }

    ValueAddedTable table;
    table.scenario_name = scenario_name;
    table.horizon = horizon;
    table.basis = basis;
    table.registrations_total = registrations.sum(horizon);

    for (int year = horizon.first; year <= horizon.last; ++year) {
        const double registered = registrations.at(year);
        for (const auto& [level, trajectory] : by_level) {
            auto idx = trajectory->index_of(year);
            if (!idx) continue;
            const CostCurvePoint* point = curves.at(level)->at(year);
            if (point == nullptr) {
                throw ValidationError(fmt::format("{}: cost curve has no entry for {}", to_string(level), year));
            }
            ValueAddedCell cell;
            cell.year = year;
            cell.level = level;
            cell.vehicles = trajectory->allocated_share[*idx] * registered;
            cell.unit_value = basis == VaBasis::Price ? point->unit_price : point->unit_production_cost;
            cell.va_total = cell.vehicles * cell.unit_value;
            const PriceSplit split = split_value(cell.va_total, curves.at(level)->hw_share);
            cell.va_hw = split.hardware;
            cell.va_sw = split.software;

            table.level_totals[level] += cell.va_total;
            table.horizon_total += cell.va_total;
            table.hw_total += cell.va_hw;
            table.sw_total += cell.va_sw;
            table.cells.push_back(cell);
        }
    }
    return table;
}

ScenarioComparison compare_scenarios(std::span<const ValueAddedTable> tables) {
    if (tables.size() < 2) {
        throw ValidationError("scenario comparison needs at least two value-added tables");
    }
    const ValueAddedTable& reference = tables.front();
    for (const auto& t : tables) {
        if (t.horizon != reference.horizon) {
            throw ValidationError(fmt::format("horizon mismatch: '{}' covers {}-{}, '{}' covers {}-{}",
                                              reference.scenario_name, reference.horizon.first,
                                              reference.horizon.last, t.scenario_name, t.horizon.first,
                                              t.horizon.last));
        }
        if (t.basis != reference.basis) {
            throw ValidationError("value-added basis mismatch between compared tables");
        }
        if (t.registrations_total != reference.registrations_total) {
            throw ValidationError("compared tables were computed on different registration series");
        }
    }

    ScenarioComparison out;
    out.ordered = true;
    out.strictly_ordered = true;
    for (std::size_t i = 0; i < tables.size(); ++i) {
        out.totals.push_back({tables[i].scenario_name, tables[i].horizon_total, tables[i].hw_total,
                              tables[i].sw_total});
        if (i > 0) {
            const double prev = tables[i - 1].horizon_total;
            const double cur = tables[i].horizon_total;
            out.ordered = out.ordered && prev <= cur;
            out.strictly_ordered = out.strictly_ordered && prev < cur;
        }
    }
    return out;
}

}  // namespace avdiff
