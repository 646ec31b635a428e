#include "avdiff/costs.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "avdiff/errors.hpp"
#include "avdiff/scenario.hpp"

namespace avdiff {

void CostParams::validate() const {
    const auto tag = to_string(level);
    if (!(mass_market_cost > 0.0) || !std::isfinite(mass_market_cost)) {
        throw DomainError(fmt::format("{}: mass-market cost must be > 0", tag));
    }
    if (!(learning_rate > 0.0 && learning_rate < 1.0)) {
        throw DomainError(fmt::format("{}: learning rate must be in (0, 1), got {}", tag, learning_rate));
    }
    if (!(floor_ratio > 0.0 && floor_ratio <= 1.0)) {
        throw DomainError(fmt::format("{}: floor ratio must be in (0, 1], got {}", tag, floor_ratio));
    }
    if (!(markup >= 0.0) || !std::isfinite(markup)) {
        throw DomainError(fmt::format("{}: markup must be >= 0, got {}", tag, markup));
    }
    if (!(hw_share >= 0.0 && sw_share >= 0.0) || std::abs(hw_share + sw_share - 1.0) > 1e-12) {
        throw DomainError(fmt::format("{}: hardware and software shares must sum to 1 ({} + {})", tag,
                                      hw_share, sw_share));
    }
    if (mass_market_volume && !(*mass_market_volume > 0.0)) {
        throw DomainError(fmt::format("{}: mass-market volume override must be > 0", tag));
    }
}

CostParams default_cost_params(AutomationLevel level) {
    CostParams p;
    p.level = level;
    switch (level) {
        case AutomationLevel::L1: p.mass_market_cost = 814.0; p.hw_share = 0.80; p.sw_share = 0.20; break;
        case AutomationLevel::L2: p.mass_market_cost = 1628.0; p.hw_share = 0.80; p.sw_share = 0.20; break;
        case AutomationLevel::L3: p.mass_market_cost = 3579.0; p.hw_share = 0.65; p.sw_share = 0.35; break;
        case AutomationLevel::L4: p.mass_market_cost = 6301.0; p.hw_share = 0.50; p.sw_share = 0.50; break;
        case AutomationLevel::L5: p.mass_market_cost = 10934.0; p.hw_share = 0.50; p.sw_share = 0.50; break;
        case AutomationLevel::L0: throw ConfigError("L0 carries no automation package cost");
    }
    return p;
}

double unit_cost(const CostParams& params, double cumulative_volume, double mass_market_volume) {
    if (!(cumulative_volume > 0.0) || !(mass_market_volume > 0.0)) {
        throw DomainError(fmt::format("volumes must be > 0 (V = {}, V_mm = {})", cumulative_volume,
                                      mass_market_volume));
    }
    const double doublings = std::log2(cumulative_volume / mass_market_volume);
    const double learned = params.mass_market_cost * std::pow(1.0 - params.learning_rate, doublings);
    return std::max(params.floor_ratio * params.mass_market_cost, learned);
}

PriceSplit split_value(double total, double hw_share) {
    if (hw_share >= 0.5) {
        const double hw = total * hw_share;
        return {hw, total - hw};
    }
    const double sw = total * (1.0 - hw_share);
    return {total - sw, sw};
}

const char* to_string(AnchorRule rule) {
    switch (rule) {
        case AnchorRule::ExplicitVolume: return "explicit-volume";
        case AnchorRule::MassMarketOverride: return "mass-market-override";
        case AnchorRule::MassMarketYear: return "mass-market-year";
        case AnchorRule::EntryFallback: return "entry-fallback";
    }
    return "unknown";
}

const CostCurvePoint* CostCurve::at(int year) const {
    if (points.empty() || year < points.front().year || year > points.back().year) {
        return nullptr;
    }
    return &points[static_cast<std::size_t>(year - points.front().year)];
}

CostCurve build_cost_curve(const CostParams& params, const LevelTrajectory& trajectory,
                           const RegistrationSeries& registrations, const AnchorHints& hints) {
    params.validate();
    if (params.level != trajectory.level) {
        throw ConfigError(fmt::format("cost parameters for {} applied to a {} trajectory", to_string(params.level),
                                      to_string(trajectory.level)));
    }
    if (trajectory.empty()) {
        throw ConfigError(fmt::format("{}: cannot build a cost curve for an empty trajectory",
                                      to_string(trajectory.level)));
    }

    std::vector<double> cumulative;
    cumulative.reserve(trajectory.states.size());
    double running = 0.0;
    for (std::size_t i = 0; i < trajectory.states.size(); ++i) {
        running += trajectory.allocated_share[i] * registrations.at(trajectory.states[i].year);
        cumulative.push_back(running);
    }
    auto cumulative_at = [&](int year) {
        auto idx = trajectory.index_of(year);
        if (!idx) {
            throw ConfigError(fmt::format("{}: anchor year {} is outside the trajectory {}-{}",
                                          to_string(trajectory.level), year, trajectory.first_year(),
                                          trajectory.last_year()));
        }
        return cumulative[*idx];
    };

    CostCurve curve;
    curve.level = params.level;
    curve.hw_share = params.hw_share;
    if (params.mass_market_volume) {
        curve.anchor = AnchorRule::ExplicitVolume;
        curve.mass_market_volume = *params.mass_market_volume;
    } else if (hints.mass_market_year_override) {
        curve.anchor = AnchorRule::MassMarketOverride;
        curve.anchor_year = hints.mass_market_year_override;
        curve.mass_market_volume = cumulative_at(*curve.anchor_year);
    } else if (auto mm = mass_market_year(trajectory)) {
        curve.anchor = AnchorRule::MassMarketYear;
        curve.anchor_year = mm;
        curve.mass_market_volume = cumulative_at(*mm);
    } else {
        auto entry = entry_year(trajectory);
        if (!entry) entry = hints.configured_entry_year;
        if (!entry) {
            throw ConfigError(fmt::format("{}: cannot resolve a mass-market anchor (never reaches 10% or 1% and "
                                          "no entry year or volume override is configured)",
                                          to_string(trajectory.level)));
        }
        const int year = std::clamp(*entry + 5, registrations.first_year(), registrations.last_year());
        curve.anchor = AnchorRule::EntryFallback;
        curve.anchor_year = year;
        curve.mass_market_volume = kMassMarketShare * registrations.at(year);
    }
    if (!(curve.mass_market_volume > 0.0)) {
        throw ConfigError(fmt::format("{}: resolved mass-market volume is zero", to_string(trajectory.level)));
    }

    const double price_factor = 1.0 + params.markup;
    curve.points.reserve(trajectory.states.size());
    for (std::size_t i = 0; i < trajectory.states.size(); ++i) {
        CostCurvePoint point;
        point.year = trajectory.states[i].year;
        point.cumulative_volume = std::max(cumulative[i], 1.0);
        point.unit_production_cost = unit_cost(params, point.cumulative_volume, curve.mass_market_volume);
        point.unit_price = point.unit_production_cost * price_factor;
        const PriceSplit split = split_value(point.unit_price, params.hw_share);
        point.hw_price = split.hardware;
        point.sw_price = split.software;
        curve.points.push_back(point);
    }
    return curve;
}

}  // namespace avdiff
