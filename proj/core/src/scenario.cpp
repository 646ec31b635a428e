#include "avdiff/scenario.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "avdiff/errors.hpp"

namespace avdiff {

void ScenarioSpec::validate() const {
    if (name.empty()) {
        throw ConfigError("scenario name must not be empty");
    }
    if (horizon.first > horizon.last || !kReportingWindow.contains(horizon)) {
        throw ConfigError(fmt::format("scenario '{}': horizon {}-{} must lie within {}-{}", name, horizon.first,
                                      horizon.last, kReportingWindow.first, kReportingWindow.last));
    }
    if (!(l1_residual_fraction >= 0.0 && l1_residual_fraction <= 1.0)) {
        throw ConfigError(fmt::format("scenario '{}': L1 residual fraction must be in [0, 1]", name));
    }
    for (const auto& [level, config] : levels) {
        const auto tag = fmt::format("scenario '{}', {}", name, to_string(level));
        if (config.level != level) {
            throw ConfigError(fmt::format("{}: configuration is keyed under the wrong level", tag));
        }
        if (level == AutomationLevel::L0) {
            throw ConfigError(fmt::format("{}: L0 is the residual pool and cannot be configured", tag));
        }
        try {
            config.bass.validate();
        } catch (const DomainError& e) {
            throw ConfigError(fmt::format("{}: {}", tag, e.what()));
        }
        const YearRange period = config.bass.period();
        const YearRange clipped{std::max(period.first, kReportingWindow.first),
                                std::min(period.last, kReportingWindow.last)};
        if (clipped.first <= clipped.last && !horizon.contains(clipped)) {
            throw ConfigError(fmt::format("{}: period {}-{} is not covered by the horizon {}-{}", tag,
                                          period.first, period.last, horizon.first, horizon.last));
        }
        if (config.entry_year && !period.contains(*config.entry_year)) {
            throw ConfigError(fmt::format("{}: entry year {} outside period {}-{}", tag, *config.entry_year,
                                          period.first, period.last));
        }
        if (config.fixed_point) {
            const auto& fp = *config.fixed_point;
            if (!(fp.year > period.first && fp.year < period.last)) {
                throw ConfigError(fmt::format("{}: fixed-point year {} must lie strictly inside {}-{}", tag,
                                              fp.year, period.first, period.last));
            }
            if (!(fp.target_share > 0.0 && fp.target_share < 1.0)) {
                throw ConfigError(fmt::format("{}: fixed-point share must be in (0, 1)", tag));
            }
        }
        if (config.mass_market_year_override && !horizon.contains(*config.mass_market_year_override)) {
            throw ConfigError(fmt::format("{}: mass-market year override {} outside horizon", tag,
                                          *config.mass_market_year_override));
        }
    }
}

YearAllocation allocate_top_down(const std::array<double, 6>& raw_share) {
    YearAllocation out;
    double remaining = 1.0;
    for (int r = 5; r >= 0; --r) {
        const auto idx = static_cast<std::size_t>(r);
        const double kept = std::min(std::max(raw_share[idx], 0.0), remaining);
        out.share[idx] = kept;
        remaining -= kept;
    }
    out.residual = std::max(remaining, 0.0);
    return out;
}

const LevelTrajectory* ScenarioResult::find(AutomationLevel level) const {
    auto it = std::find_if(trajectories.begin(), trajectories.end(),
                           [level](const LevelTrajectory& t) { return t.level == level; });
    return it == trajectories.end() ? nullptr : &*it;
}

bool ScenarioResult::is_pooled(AutomationLevel level) const {
    return pooled[static_cast<std::size_t>(rank(level))];
}

namespace {

LevelTrajectory pooled_trajectory(AutomationLevel level, const YearRange& horizon, const std::vector<double>& share,
                                  const RegistrationSeries& registrations) {
    LevelTrajectory t;
    t.level = level;
    double cumulative = 0.0;
    for (int year = horizon.first; year <= horizon.last; ++year) {
        const double s = share[static_cast<std::size_t>(year - horizon.first)];
        const double vehicles = s * registrations.at(year);
        cumulative += vehicles;
        t.states.push_back({year, vehicles, cumulative});
        t.raw_share.push_back(s);
    }
    t.allocated_share = t.raw_share;
    return t;
}

}  // namespace

ScenarioResult run_scenario(const ScenarioSpec& spec, const RegistrationSeries& registrations) {
    spec.validate();
    for (int year = spec.horizon.first; year <= spec.horizon.last; ++year) {
        if (!registrations.covers(year)) {
            throw CoverageError(year, fmt::format("scenario '{}': no registration data for {}", spec.name, year));
        }
    }

    ScenarioResult result;
    result.name = spec.name;
    result.horizon = spec.horizon;

    std::vector<LevelTrajectory> simulated;
    std::set<int> years;
    for (int year = spec.horizon.first; year <= spec.horizon.last; ++year) {
        years.insert(year);
    }
    for (const auto& [level, config] : spec.levels) {
        BassParams params = config.bass;
        params.period_end = std::min(params.period_end, spec.horizon.last);
        if (params.period_start > params.period_end) {
            continue;  // launches after the horizon
        }
        simulated.push_back(simulate_level(level, params, registrations));
        for (const auto& state : simulated.back().states) {
            years.insert(state.year);
        }
    }

    const auto horizon_years = static_cast<std::size_t>(spec.horizon.size());
    result.residual.assign(horizon_years, 0.0);
    for (int year : years) {
        std::array<double, 6> raw{};
        for (const auto& t : simulated) {
            if (auto idx = t.index_of(year)) {
                raw[static_cast<std::size_t>(rank(t.level))] = t.raw_share[*idx];
            }
        }
        const YearAllocation alloc = allocate_top_down(raw);
        for (auto& t : simulated) {
            if (auto idx = t.index_of(year)) {
                t.allocated_share[*idx] = alloc.share[static_cast<std::size_t>(rank(t.level))];
            }
        }
        if (spec.horizon.contains(year)) {
            result.residual[static_cast<std::size_t>(year - spec.horizon.first)] = alloc.residual;
        }
    }

    const bool l1_configured = spec.levels.contains(AutomationLevel::L1);
    const double l1_fraction = l1_configured ? 0.0 : spec.l1_residual_fraction;
    std::vector<double> l0_share(horizon_years);
    std::vector<double> l1_share(horizon_years);
    for (std::size_t i = 0; i < horizon_years; ++i) {
        l1_share[i] = l1_fraction * result.residual[i];
        l0_share[i] = result.residual[i] - l1_share[i];
    }

    result.trajectories.push_back(pooled_trajectory(AutomationLevel::L0, spec.horizon, l0_share, registrations));
    result.pooled[0] = true;
    if (!l1_configured) {
        result.trajectories.push_back(pooled_trajectory(AutomationLevel::L1, spec.horizon, l1_share, registrations));
        result.pooled[1] = true;
    }
    for (auto& t : simulated) {
        result.trajectories.push_back(std::move(t));
    }
    std::stable_sort(result.trajectories.begin(), result.trajectories.end(),
                     [](const LevelTrajectory& a, const LevelTrajectory& b) { return a.level < b.level; });
    return result;
}

std::optional<int> entry_year(const LevelTrajectory& trajectory, double threshold) {
    for (std::size_t i = 0; i < trajectory.states.size(); ++i) {
        if (trajectory.allocated_share[i] >= threshold) {
            return trajectory.states[i].year;
        }
    }
    return std::nullopt;
}

std::optional<int> mass_market_year(const LevelTrajectory& trajectory) {
    return entry_year(trajectory, kMassMarketShare);
}

std::optional<int> retirement_year(const LevelTrajectory& trajectory, const YearRange& horizon) {
    bool on_market = false;
    int below_since = 0;
    int below_run = 0;
    for (int year = horizon.first; year <= horizon.last; ++year) {
        const double share = trajectory.allocated_at(year);
        if (share >= kRetirementShare) {
            on_market = true;
            below_run = 0;
            continue;
        }
        if (!on_market) {
            continue;
        }
        if (below_run == 0) {
            below_since = year;
        }
        if (++below_run >= kRetirementYears) {
            return below_since;
        }
    }
    return std::nullopt;
}

}  // namespace avdiff
