#pragma once

#include <optional>
#include <vector>

#include "avdiff/diffusion.hpp"

namespace avdiff {

/// Experience-curve parameters for the automation package of one level.
/// Money is in constant 2022 EUR.
struct CostParams {
    AutomationLevel level = AutomationLevel::L3;
    double mass_market_cost = 0.0;  ///< production cost at mass-market entry, EUR/vehicle
    double learning_rate = 0.20;    ///< cost reduction per doubling of cumulative volume
    double floor_ratio = 0.30;      ///< minimum cost as a fraction of mass_market_cost
    double markup = 0.50;
    double hw_share = 0.5;
    double sw_share = 0.5;
    /// Pins the anchor volume instead of deriving it from the trajectory.
    std::optional<double> mass_market_volume;

    void validate() const;

    bool operator==(const CostParams&) const = default;
};

/// Defaults per level: L1 814, L2 1,628, L3 3,579, L4 6,301, L5 10,934 EUR;
/// HW/SW 80/20 for L1-L2, 65/35 for L3, 50/50 for L4-L5. ConfigError for L0.
CostParams default_cost_params(AutomationLevel level);

/// max(floor_ratio * C_mm, C_mm * (1 - learning_rate)^log2(V / V_mm)).
/// Below V_mm the same power law extrapolates backwards without a cap.
/// DomainError on non-positive volumes.
double unit_cost(const CostParams& params, double cumulative_volume, double mass_market_volume);

struct PriceSplit {
    double hardware = 0.0;
    double software = 0.0;
};

/// Splits `total` so that hardware + software == total exactly. The larger
/// part is computed by multiplication and the smaller one by subtraction.
PriceSplit split_value(double total, double hw_share);

enum class AnchorRule {
    ExplicitVolume,      ///< CostParams::mass_market_volume
    MassMarketOverride,  ///< LevelConfig::mass_market_year_override
    MassMarketYear,      ///< first year with >= 10% allocated share
    EntryFallback,       ///< 10% of registrations five years after entry
};

const char* to_string(AnchorRule rule);

struct CostCurvePoint {
    int year = 0;
    double cumulative_volume = 0.0;  ///< V(t), at least one vehicle
    double unit_production_cost = 0.0;
    double unit_price = 0.0;
    double hw_price = 0.0;
    double sw_price = 0.0;
};

struct CostCurve {
    AutomationLevel level = AutomationLevel::L3;
    double mass_market_volume = 0.0;
    AnchorRule anchor = AnchorRule::MassMarketYear;
    std::optional<int> anchor_year;
    double hw_share = 0.5;
    std::vector<CostCurvePoint> points;

    const CostCurvePoint* at(int year) const;
};

struct AnchorHints {
    std::optional<int> mass_market_year_override;
    /// Used by the fallback rule when the level never reaches 1%.
    std::optional<int> configured_entry_year;
};

/// Cost and price per year of the trajectory. V(t) is the cumulative
/// allocated volume (allocated share x registrations) through t.
///
/// Anchor volume precedence: explicit volume, mass-market year override,
/// detected mass-market year, then 10% of registrations in entry year + 5
/// (clamped to the series). ConfigError if none applies.
CostCurve build_cost_curve(const CostParams& params, const LevelTrajectory& trajectory,
                           const RegistrationSeries& registrations, const AnchorHints& hints = {});

}  // namespace avdiff
