#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "avdiff/calibration.hpp"
#include "avdiff/diffusion.hpp"

namespace avdiff {

/// All reporting is clipped to this window.
inline constexpr YearRange kReportingWindow{2015, 2050};

inline constexpr double kEntryShare = 0.01;
inline constexpr double kMassMarketShare = 0.10;
inline constexpr double kRetirementShare = 0.005;
inline constexpr int kRetirementYears = 2;
inline constexpr double kDefaultL1ResidualFraction = 0.69;

struct LevelConfig {
    AutomationLevel level = AutomationLevel::L2;
    BassParams bass;
    std::optional<FixedPoint> fixed_point;
    /// Expected first year with >= 1% of registrations.
    std::optional<int> entry_year;
    std::optional<int> mass_market_year_override;

    bool operator==(const LevelConfig&) const = default;
};

struct ScenarioSpec {
    std::string name;
    std::string description;
    std::map<AutomationLevel, LevelConfig> levels;
    YearRange horizon = kReportingWindow;
    /// Fraction of the unallocated share attributed to L1 when L1 has no
    /// Bass configuration of its own; the remainder is L0.
    double l1_residual_fraction = kDefaultL1ResidualFraction;

    /// Throws ConfigError / DomainError on an inconsistent spec.
    void validate() const;

    bool operator==(const ScenarioSpec&) const = default;
};

/// Shares of one year after top-down allocation. Index by rank(level).
struct YearAllocation {
    std::array<double, 6> share{};
    double residual = 1.0;
};

/// Walks levels from L5 down: each level keeps min(raw, remaining capacity),
/// negative raw shares count as 0. What is left over is the residual.
YearAllocation allocate_top_down(const std::array<double, 6>& raw_share);

struct ScenarioResult {
    std::string name;
    YearRange horizon;
    /// One trajectory per level present, ordered by level. Bass levels keep
    /// their own states; pooled levels (L0, and L1 unless configured) are
    /// derived from the residual and have raw_share == allocated_share.
    std::vector<LevelTrajectory> trajectories;
    /// Residual before the L0/L1 split, one entry per horizon year.
    std::vector<double> residual;

    const LevelTrajectory* find(AutomationLevel level) const;
    bool is_pooled(AutomationLevel level) const;

    std::array<bool, 6> pooled{};
};

/// Simulates every configured level over [period_start, min(period_end,
/// horizon.last)], allocates shares year by year and derives the pooled
/// L0/L1 trajectories. Deterministic: identical inputs give bit-identical
/// output.
ScenarioResult run_scenario(const ScenarioSpec& spec, const RegistrationSeries& registrations);

/// First year with allocated share >= 10%.
std::optional<int> mass_market_year(const LevelTrajectory& trajectory);

/// First year with allocated share >= `threshold` (1% by default).
std::optional<int> entry_year(const LevelTrajectory& trajectory, double threshold = kEntryShare);

/// First year from which the level stays below 0.5% for two consecutive
/// years within `horizon`, after having been on the market. Years outside
/// the trajectory count as zero share.
std::optional<int> retirement_year(const LevelTrajectory& trajectory, const YearRange& horizon);

/// "preliminary-baseline", "slow", "baseline", "fast".
const std::vector<std::string>& preset_names();
bool is_preset(const std::string& name);

/// Built-in scenario. Throws ConfigError for an unknown name.
ScenarioSpec builtin_preset(const std::string& name);

}  // namespace avdiff
