#include <doctest.h>

#include <cmath>
#include <numeric>

#include "avdiff/errors.hpp"
#include "avdiff/scenario.hpp"

using namespace avdiff;

namespace {

LevelTrajectory shares(AutomationLevel level, int first, std::vector<double> s) {
    LevelTrajectory t;
    t.level = level;
    for (std::size_t i = 0; i < s.size(); ++i) t.states.push_back({first + static_cast<int>(i), 0.0, 0.0});
    t.raw_share = s;
    t.allocated_share = s;
    return t;
}

double cumulative_allocated(const ScenarioResult& r, AutomationLevel level, int through,
                            const RegistrationSeries& regs) {
    const LevelTrajectory* t = r.find(level);
    if (t == nullptr) return 0.0;
    double total = 0.0;
    for (int y = r.horizon.first; y <= through; ++y) total += t->allocated_at(y) * regs.at(y);
    return total;
}

}  // namespace

TEST_CASE("top-down allocation") {
    std::array<double, 6> raw{};
    raw[4] = 0.60;
    raw[3] = 0.50;
    const auto a = allocate_top_down(raw);
    CHECK(a.share[4] == 0.60);
    CHECK(a.share[3] == doctest::Approx(0.40));
    CHECK(a.residual == doctest::Approx(0.0));

    raw = {};
    raw[5] = 1.3;
    raw[2] = 0.2;
    const auto b = allocate_top_down(raw);
    CHECK(b.share[5] == 1.0);
    CHECK(b.share[2] == 0.0);
    CHECK(b.residual == 0.0);

    raw = {};
    raw[2] = -0.1;
    raw[3] = 0.25;
    const auto c = allocate_top_down(raw);
    CHECK(c.share[2] == 0.0);
    CHECK(c.residual == 0.75);
}

TEST_CASE("presets carry the tabulated coefficients") {
    const auto baseline = builtin_preset("baseline");
    const BassParams l4{0.002, 0.335, 111'026'000.0, 2035, 2050};
    CHECK(baseline.levels.at(AutomationLevel::L4).bass == l4);
    const auto prelim = builtin_preset("preliminary-baseline");
    const BassParams l3{0.002, 0.3, 206'769'000.0, 2025, 2039};
    CHECK(prelim.levels.at(AutomationLevel::L3).bass == l3);
    CHECK(!builtin_preset("slow").levels.contains(AutomationLevel::L5));
    CHECK_THROWS_AS(builtin_preset("medium"), ConfigError);
    CHECK(preset_names().size() == 4);
    for (const auto& name : preset_names()) {
        CHECK(is_preset(name));
        CHECK_NOTHROW(builtin_preset(name).validate());
        CHECK(!builtin_preset(name).description.empty());
    }
    CHECK(!is_preset("nosuch.json"));
}

TEST_CASE("shares never exceed one and never exceed the raw share") {
    const auto regs = build_reference_series();
    for (const auto& name : preset_names()) {
        const auto r = run_scenario(builtin_preset(name), regs);
        for (int y = r.horizon.first; y <= r.horizon.last; ++y) {
            double total = 0.0;
            for (const auto& t : r.trajectories) {
                total += t.allocated_at(y);
                if (auto i = t.index_of(y)) {
                    CHECK(t.allocated_share[*i] <= t.raw_share[*i]);
                    CHECK(t.allocated_share[*i] >= 0.0);
                }
            }
            CAPTURE(name);
            CAPTURE(y);
            CHECK(total <= 1.0 + 1e-12);
            CHECK(total == doctest::Approx(1.0).epsilon(1e-12));  // pool takes the rest
        }
    }
}

TEST_CASE("baseline L3 holds about 8% in 2030") {
    const auto r = run_scenario(builtin_preset("baseline"), build_reference_series());
    CHECK(std::abs(r.find(AutomationLevel::L3)->allocated_at(2030) - 0.08) <= 0.01);
}

TEST_CASE("mass-market year") {
    CHECK(mass_market_year(shares(AutomationLevel::L3, 2025, {0.01, 0.05, 0.12, 0.2})) == 2027);
    CHECK(!mass_market_year(shares(AutomationLevel::L3, 2025, {0.01, 0.05, 0.09})).has_value());
    const auto r = run_scenario(builtin_preset("baseline"), build_reference_series());
    const auto mm = mass_market_year(*r.find(AutomationLevel::L3));
    REQUIRE(mm.has_value());
    CHECK(*mm >= 2028);
    CHECK(*mm <= 2032);
}

TEST_CASE("retirement needs two consecutive low years after market presence") {
    const YearRange h{2020, 2026};
    CHECK(retirement_year(shares(AutomationLevel::L2, 2020, {0.001, 0.002, 0.003}), h) == std::nullopt);
    CHECK(retirement_year(shares(AutomationLevel::L2, 2020, {0.1, 0.004, 0.1, 0.004, 0.001}), h) == 2023);
    // years after the trajectory count as zero share
    CHECK(retirement_year(shares(AutomationLevel::L2, 2020, {0.1, 0.2}), h) == 2022);
}

TEST_CASE("fast scenario retires L2 by the mid-2030s") {
    const auto r = run_scenario(builtin_preset("fast"), build_reference_series());
    const auto year = retirement_year(*r.find(AutomationLevel::L2), r.horizon);
    REQUIRE(year.has_value());
    CHECK(*year <= 2036);
}

TEST_CASE("entry years within two years of the configured ones") {
    const auto regs = build_reference_series();
    for (const auto& name : preset_names()) {
        const auto spec = builtin_preset(name);
        const auto r = run_scenario(spec, regs);
        for (const auto& [level, cfg] : spec.levels) {
            CAPTURE(name);
            CAPTURE(to_string(level));
            const auto achieved = entry_year(*r.find(level));
            REQUIRE(achieved.has_value());
            REQUIRE(cfg.entry_year.has_value());
            CHECK(std::abs(*achieved - *cfg.entry_year) <= 2);
        }
    }
}

TEST_CASE("higher-level adoption is ordered slow <= baseline <= fast from 2035") {
    const auto regs = build_reference_series();
    const auto slow = run_scenario(builtin_preset("slow"), regs);
    const auto base = run_scenario(builtin_preset("baseline"), regs);
    const auto fast = run_scenario(builtin_preset("fast"), regs);
    auto high = [&](const ScenarioResult& r, int y) {
        return cumulative_allocated(r, AutomationLevel::L4, y, regs) + cumulative_allocated(r, AutomationLevel::L5, y, regs);
    };
    for (int y = 2035; y <= 2050; ++y) {
        CAPTURE(y);
        CHECK(high(slow, y) <= high(base, y));
        CHECK(high(base, y) <= high(fast, y));
    }
}

TEST_CASE("identical inputs give identical trajectories") {
    const auto regs = build_reference_series();
    for (const auto& name : preset_names()) {
        const auto a = run_scenario(builtin_preset(name), regs);
        const auto b = run_scenario(builtin_preset(name), regs);
        CHECK(a.trajectories == b.trajectories);
        CHECK(a.residual == b.residual);
    }
}

TEST_CASE("residual pool split") {
    const auto regs = build_reference_series();
    const auto r = run_scenario(builtin_preset("baseline"), regs);
    CHECK(r.is_pooled(AutomationLevel::L0));
    CHECK(r.is_pooled(AutomationLevel::L1));
    CHECK(!r.is_pooled(AutomationLevel::L3));
    for (int y = 2015; y <= 2050; ++y) {
        const double residual = r.residual[static_cast<std::size_t>(y - 2015)];
        CHECK(r.find(AutomationLevel::L1)->allocated_at(y) == 0.69 * residual);
    }

    auto spec = builtin_preset("baseline");
    LevelConfig l1;
    l1.level = AutomationLevel::L1;
    l1.bass = {0.01, 0.3, 1e8, 2015, 2030};
    spec.levels.emplace(AutomationLevel::L1, l1);
    const auto with_l1 = run_scenario(spec, regs);
    CHECK(!with_l1.is_pooled(AutomationLevel::L1));
    for (int y = 2015; y <= 2050; ++y) {
        CHECK(with_l1.find(AutomationLevel::L0)->allocated_at(y) == with_l1.residual[static_cast<std::size_t>(y - 2015)]);
    }
}

TEST_CASE("spec validation") {
    const auto regs = build_reference_series();
    auto spec = builtin_preset("baseline");
    spec.name.clear();
    CHECK_THROWS_AS(spec.validate(), ConfigError);

    spec = builtin_preset("baseline");
    spec.horizon = {2010, 2050};
    CHECK_THROWS_AS(spec.validate(), ConfigError);

    spec = builtin_preset("baseline");
    spec.horizon = {2015, 2040};
    CHECK_THROWS_AS(spec.validate(), ConfigError);

    spec = builtin_preset("baseline");
    spec.levels.at(AutomationLevel::L3).entry_year = 2050;
    CHECK_THROWS_AS(spec.validate(), ConfigError);

    spec = builtin_preset("baseline");
    spec.levels.at(AutomationLevel::L3).fixed_point = FixedPoint{2025, 0.08};
    CHECK_THROWS_AS(spec.validate(), ConfigError);

    spec = builtin_preset("baseline");
    LevelConfig l0;
    l0.level = AutomationLevel::L0;
    l0.bass = {0.01, 0.3, 1e8, 2015, 2030};
    spec.levels.emplace(AutomationLevel::L0, l0);
    CHECK_THROWS_AS(spec.validate(), ConfigError);

    spec = builtin_preset("baseline");
    spec.levels.at(AutomationLevel::L4).level = AutomationLevel::L5;
    CHECK_THROWS_AS(spec.validate(), ConfigError);

    spec = builtin_preset("baseline");
    spec.levels.at(AutomationLevel::L4).bass.q = -1.0;
    CHECK_THROWS_AS(run_scenario(spec, regs), ConfigError);

    CHECK_THROWS_AS(run_scenario(builtin_preset("baseline"), RegistrationSeries(2015, std::vector<double>(20, 1e7))),
                    CoverageError);
}

TEST_CASE("levels beyond the horizon are clipped") {
    auto spec = builtin_preset("baseline");
    spec.levels.at(AutomationLevel::L5).bass.period_end = 2060;
    const auto r = run_scenario(spec, build_reference_series());
    CHECK(r.find(AutomationLevel::L5)->last_year() == 2050);
}
