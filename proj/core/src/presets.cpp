#include <algorithm>

#include "avdiff/errors.hpp"
#include "avdiff/scenario.hpp"

namespace avdiff {
namespace {

constexpr double kInnovation = 0.002;

LevelConfig level(AutomationLevel lvl, double q, double nbar, int first, int last, int entry,
                  std::optional<FixedPoint> fixed_point = std::nullopt) {
    LevelConfig c;
    c.level = lvl;
    c.bass = {kInnovation, q, nbar, first, last};
    c.entry_year = entry;
    c.fixed_point = fixed_point;
    return c;
}

ScenarioSpec make(std::string name, std::string description, std::initializer_list<LevelConfig> levels) {
    ScenarioSpec spec;
    spec.name = std::move(name);
    spec.description = std::move(description);
    for (const auto& c : levels) {
        spec.levels.emplace(c.level, c);
    }
    return spec;
}

using L = AutomationLevel;

const FixedPoint kL2Anchor{2025, 0.39};
const FixedPoint kL3Anchor{2030, 0.08};

ScenarioSpec preliminary_baseline() {
    return make("preliminary-baseline",
                "Literature-only baseline before expert review: L3 reaches 1% in 2025, L4 in 2035, L5 in 2040.",
                {
                    level(L::L2, 0.325, 181'040'000, 2015, 2029, 2015, kL2Anchor),
                    level(L::L3, 0.3, 206'769'000, 2025, 2039, 2025, kL3Anchor),
                    level(L::L4, 0.3, 220'949'000, 2035, 2049, 2035),
                    level(L::L5, 0.3, 164'194'000, 2040, 2050, 2040),
                });
}

ScenarioSpec slow() {
    return make("slow",
                "Weak R&D investment, fragmented regulation and low consumer trust: L3 from 2030, "
                "L4 from 2040, no L5 before 2050.",
                {
                    level(L::L2, 0.26, 285'823'000, 2015, 2030, 2015),
                    level(L::L3, 0.26, 146'134'000, 2030, 2050, 2030),
                    level(L::L4, 0.26, 146'134'000, 2040, 2050, 2040),
                });
}

ScenarioSpec baseline() {
    return make("baseline",
                "Steady technology and investment growth with regulation keeping pace: L3 from 2025, "
                "L4 from 2035, L5 from 2045.",
                {
                    level(L::L2, 0.285, 238'186'000, 2015, 2030, 2015, kL2Anchor),
                    level(L::L3, 0.335, 143'879'000, 2025, 2041, 2025, kL3Anchor),
                    level(L::L4, 0.335, 111'026'000, 2035, 2050, 2035),
                    level(L::L5, 0.335, 111'026'000, 2045, 2050, 2045),
                });
}

// q = 0.40 for every fast level; see README ("Fast scenario imitation
// coefficient").
ScenarioSpec fast() {
    return make("fast",
                "Accelerated R&D, supportive regulation and purchase incentives: L3 before 2025, "
                "L4 from 2030, L5 from 2035.",
                {
                    level(L::L2, 0.40, 163'321'000, 2015, 2027, 2015),
                    level(L::L3, 0.40, 170'148'000, 2023, 2035, 2024),
                    level(L::L4, 0.40, 146'134'000, 2030, 2043, 2030),
                    level(L::L5, 0.40, 133'231'000, 2035, 2050, 2035),
                });
}

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"preliminary-baseline", "slow", "baseline", "fast"};
    return names;
}

bool is_preset(const std::string& name) {
    const auto& names = preset_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

ScenarioSpec builtin_preset(const std::string& name) {
    if (name == "preliminary-baseline") return preliminary_baseline();
    if (name == "slow") return slow();
    if (name == "baseline") return baseline();
    if (name == "fast") return fast();
    throw ConfigError("unknown preset '" + name + "' (known: preliminary-baseline, slow, baseline, fast)");
}

}  // namespace avdiff
