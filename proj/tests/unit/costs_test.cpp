#include <doctest.h>

#include <cmath>
#include <random>

#include "avdiff/costs.hpp"
#include "avdiff/errors.hpp"
#include "avdiff/scenario.hpp"

using namespace avdiff;

TEST_CASE("mass-market costs per level") {
    CHECK(default_cost_params(AutomationLevel::L1).mass_market_cost == 814.0);
    CHECK(default_cost_params(AutomationLevel::L2).mass_market_cost == 1628.0);
    CHECK(default_cost_params(AutomationLevel::L3).mass_market_cost == 3579.0);
    CHECK(default_cost_params(AutomationLevel::L4).mass_market_cost == 6301.0);
    CHECK(default_cost_params(AutomationLevel::L5).mass_market_cost == 10934.0);
    CHECK_THROWS_AS(default_cost_params(AutomationLevel::L0), ConfigError);
    for (auto level : {AutomationLevel::L1, AutomationLevel::L2, AutomationLevel::L3, AutomationLevel::L4,
                       AutomationLevel::L5}) {
        const auto p = default_cost_params(level);
        CHECK(p.learning_rate == 0.2);
        CHECK(p.floor_ratio == 0.3);
        CHECK(p.markup == 0.5);
        CHECK(p.hw_share + p.sw_share == 1.0);
    }
    CHECK(default_cost_params(AutomationLevel::L3).hw_share == 0.65);
    CHECK(default_cost_params(AutomationLevel::L4).hw_share == 0.5);
}

TEST_CASE("experience curve points for L3") {
    const auto p = default_cost_params(AutomationLevel::L3);
    CHECK(unit_cost(p, 5e6, 5e6) == 3579.0);
    CHECK(unit_cost(p, 1e7, 5e6) == doctest::Approx(2863.20).epsilon(1e-14));
    CHECK(unit_cost(p, 1024 * 5e6, 5e6) == doctest::Approx(1073.70).epsilon(1e-14));
    // backwards: half the anchor volume costs 1/0.8 as much
    CHECK(unit_cost(p, 2.5e6, 5e6) == doctest::Approx(3579.0 / 0.8).epsilon(1e-14));
    CHECK_THROWS_AS(unit_cost(p, 0.0, 5e6), DomainError);
    CHECK_THROWS_AS(unit_cost(p, 1.0, -1.0), DomainError);
}

TEST_CASE("doubling law and monotonicity") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> log_volume(0.0, 22.0);
    for (auto level : {AutomationLevel::L1, AutomationLevel::L3, AutomationLevel::L5}) {
        const auto p = default_cost_params(level);
        for (int i = 0; i < 200; ++i) {
            const double v = std::exp2(log_volume(rng));
            const double c1 = unit_cost(p, v, 1e5);
            const double c2 = unit_cost(p, 2 * v, 1e5);
            CHECK(c2 <= c1);
            CHECK(c2 >= p.floor_ratio * p.mass_market_cost);
            if (c2 > p.floor_ratio * p.mass_market_cost) {
                CHECK(c2 / c1 == doctest::Approx(0.8).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("split is exact for any share") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> total(0.0, 1e5);
    std::uniform_real_distribution<double> share(0.0, 1.0);
    for (int i = 0; i < 10'000; ++i) {
        const double t = total(rng);
        const auto s = split_value(t, share(rng));
        CHECK(s.hardware + s.software == t);
    }
    CHECK(split_value(100.0, 0.5).hardware == 50.0);
    CHECK(split_value(100.0, 0.65).hardware == 65.0);
    CHECK(split_value(100.0, 0.65).software == 35.0);
}

TEST_CASE("parameter validation") {
    auto p = default_cost_params(AutomationLevel::L3);
    p.learning_rate = 1.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = default_cost_params(AutomationLevel::L3);
    p.floor_ratio = 0.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = default_cost_params(AutomationLevel::L3);
    p.markup = -0.1;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = default_cost_params(AutomationLevel::L3);
    p.hw_share = 0.7;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = default_cost_params(AutomationLevel::L3);
    p.mass_market_volume = 0.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
}

namespace {

LevelTrajectory baseline_level(AutomationLevel level) {
    return *run_scenario(builtin_preset("baseline"), build_reference_series()).find(level);
}

}  // namespace

TEST_CASE("cost curve follows cumulative allocated volume") {
    const auto regs = build_reference_series();
    const auto t = baseline_level(AutomationLevel::L3);
    const auto params = default_cost_params(AutomationLevel::L3);
    const auto curve = build_cost_curve(params, t, regs);
    CHECK(curve.anchor == AnchorRule::MassMarketYear);
    REQUIRE(curve.anchor_year.has_value());
    CHECK(*curve.anchor_year == *mass_market_year(t));
    CHECK(curve.points.size() == t.states.size());

    double volume = 0.0;
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        const auto& pt = curve.points[i];
        volume += t.allocated_share[i] * regs.at(pt.year);
        CHECK(pt.cumulative_volume == std::max(volume, 1.0));
        CHECK(pt.unit_price == 1.5 * pt.unit_production_cost);
        CHECK(pt.hw_price + pt.sw_price == pt.unit_price);
        CHECK(pt.unit_production_cost >= 0.3 * 3579.0);
        if (i > 0) CHECK(pt.unit_production_cost <= curve.points[i - 1].unit_production_cost);
        if (pt.year == *curve.anchor_year) CHECK(pt.unit_production_cost == 3579.0);
    }
    CHECK(curve.at(2024) == nullptr);
    CHECK(curve.at(2030) != nullptr);
}

TEST_CASE("anchor precedence") {
    const auto regs = build_reference_series();
    const auto t = baseline_level(AutomationLevel::L3);
    auto params = default_cost_params(AutomationLevel::L3);

    params.mass_market_volume = 123456.0;
    auto curve = build_cost_curve(params, t, regs, {2035, 2025});
    CHECK(curve.anchor == AnchorRule::ExplicitVolume);
    CHECK(curve.mass_market_volume == 123456.0);

    params.mass_market_volume.reset();
    curve = build_cost_curve(params, t, regs, {2035, std::nullopt});
    CHECK(curve.anchor == AnchorRule::MassMarketOverride);
    CHECK(curve.anchor_year == 2035);
    CHECK(curve.at(2035)->unit_production_cost == 3579.0);

    // L5 baseline never reaches 10% before 2050: fallback to entry + 5
    const auto l5 = baseline_level(AutomationLevel::L5);
    REQUIRE(!mass_market_year(l5).has_value());
    curve = build_cost_curve(default_cost_params(AutomationLevel::L5), l5, regs);
    CHECK(curve.anchor == AnchorRule::EntryFallback);
    CHECK(curve.anchor_year == 2050);
    CHECK(curve.mass_market_volume == 0.1 * regs.at(2050));

    LevelTrajectory flat;
    flat.level = AutomationLevel::L4;
    flat.states = {{2030, 0.0, 0.0}, {2031, 0.0, 0.0}};
    flat.raw_share = {0.001, 0.002};
    flat.allocated_share = flat.raw_share;
    CHECK_THROWS_AS(build_cost_curve(default_cost_params(AutomationLevel::L4), flat, regs), ConfigError);
    curve = build_cost_curve(default_cost_params(AutomationLevel::L4), flat, regs, {std::nullopt, 2030});
    CHECK(curve.anchor_year == 2035);

    CHECK_THROWS_AS(build_cost_curve(default_cost_params(AutomationLevel::L3), flat, regs, {std::nullopt, 2030}),
                    ConfigError);
}
