#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "avdiff/pipeline.hpp"

namespace avdiff {

/// One level as written in a scenario file. Either `q` or `fixed_point` must
/// be present (q wins when both are), and exactly one of `market_potential`
/// and `potential_share`.
struct LevelEntry {
    AutomationLevel level = AutomationLevel::L2;
    double p = 0.002;
    std::optional<double> q;
    std::optional<double> market_potential;
    std::optional<double> potential_share;
    YearRange period;
    std::optional<FixedPoint> fixed_point;
    std::optional<int> entry_year;
    std::optional<int> mass_market_year_override;
};

/// Scenario configuration file contents.
///
/// ```json
/// {
///   "name": "baseline",
///   "description": "...",
///   "horizon": [2015, 2050],
///   "l1_residual_fraction": 0.69,
///   "levels": [
///     {"level": "L3", "p": 0.002, "q": 0.335, "market_potential": 143879000,
///      "period": [2025, 2041], "entry_year": 2025,
///      "fixed_point": {"year": 2030, "share": 0.08}}
///   ],
///   "costs": [
///     {"level": "L3", "mass_market_cost": 3579, "learning_rate": 0.2,
///      "floor_ratio": 0.3, "markup": 0.5, "hw_share": 0.65, "sw_share": 0.35}
///   ]
/// }
/// ```
/// Cost entries may omit any field except `level`; omitted fields take the
/// level defaults. Unknown keys are rejected.
struct ScenarioDocument {
    std::string name;
    std::string description;
    YearRange horizon = kReportingWindow;
    double l1_residual_fraction = kDefaultL1ResidualFraction;
    std::vector<LevelEntry> levels;
    CostTable costs;  ///< only the levels the file overrides
};

/// Throws ParseError on malformed JSON and ConfigError on schema violations
/// (unknown keys, duplicate levels, missing q and fixed point, ...).
ScenarioDocument parse_scenario_document(const std::string& text, const std::string& source);

/// ValidationError "unknown scenario file" when the path does not exist.
ScenarioDocument load_scenario_document(const std::filesystem::path& path);

/// Pretty-printed JSON. Doubles use the shortest round-trip representation,
/// so parse(serialize(doc)) reproduces every value bit for bit.
std::string serialize_scenario_document(const ScenarioDocument& doc);

/// Document with every q and N-bar stated explicitly.
ScenarioDocument document_from_spec(const ScenarioSpec& spec, const CostTable& costs = {});

struct ResolvedScenario {
    ScenarioSpec spec;
    CostTable costs;  ///< complete L1-L5 table, defaults filled in
    std::map<AutomationLevel, CalibrationResult> calibrations;
};

/// Derives N-bar from potential shares and calibrates q for levels that only
/// give a fixed point. Solver failures propagate as SolverError.
ResolvedScenario resolve_scenario(const ScenarioDocument& doc, const RegistrationSeries& registrations,
                                  const CalibrationOptions& options = {});

}  // namespace avdiff
