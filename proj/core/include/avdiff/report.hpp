#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "avdiff/manifest.hpp"
#include "avdiff/scenario_document.hpp"

namespace avdiff {

/// Digest identifying a run's inputs: the registration series as CSV
/// followed by each scenario document in serialized form.
std::string input_hash(const RegistrationSeries& registrations, const std::vector<ScenarioDocument>& documents);

/// One calibrated fixed point of a preset, next to the published q.
struct CalibrationRow {
    std::string scenario;
    AutomationLevel level = AutomationLevel::L2;
    FixedPoint fixed_point;
    double published_q = 0.0;
    double published_share = 0.0;  ///< raw share in the fixed-point year with published_q
    CalibrationResult calibrated;
};

struct ReportOptions {
    YearRange va_horizon = kDefaultVaHorizon;
    std::string registrations_label = "ref";
    bool parallel = true;
};

struct Report {
    std::vector<ScenarioRun> runs;  ///< preset_names() order
    std::vector<CalibrationRow> calibrations;
    /// slow, baseline, fast
    ScenarioComparison price;
    ScenarioComparison cost;
    std::string manifest_hash;
    std::filesystem::path manifest_path;

    const ScenarioRun& run(const std::string& name) const;
};

/// Runs every preset and writes, per preset, <name>_trajectories.csv,
/// <name>_shares.svg, <name>_va.csv and <name>_va.svg, plus
/// coefficients.csv, calibration.csv, entry_years.csv, va_summary.csv,
/// summary.txt and manifest.json.
Report write_report(const RegistrationSeries& registrations, const std::filesystem::path& out_dir,
                    const ReportOptions& options = {});

/// Fixed-point calibration of every preset level that has one.
std::vector<CalibrationRow> calibrate_presets(const RegistrationSeries& registrations);

/// Human-readable totals in billions of EUR, two decimals.
std::string summary_text(const Report& report);

}  // namespace avdiff
