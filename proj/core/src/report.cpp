#include "avdiff/report.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include <fmt/format.h>

#include "avdiff/csv_writer.hpp"
#include "avdiff/errors.hpp"
#include "avdiff/svg_plot.hpp"

namespace avdiff {

std::string input_hash(const RegistrationSeries& registrations, const std::vector<ScenarioDocument>& documents) {
    std::ostringstream buffer;
    write_registrations(buffer, registrations);
    std::string data = buffer.str();
    for (const auto& doc : documents) {
        data += serialize_scenario_document(doc);
    }
    return sha256_hex(data);
}

const ScenarioRun& Report::run(const std::string& name) const {
    auto it = std::find_if(runs.begin(), runs.end(), [&](const ScenarioRun& r) { return r.spec.name == name; });
    if (it == runs.end()) {
        throw ValidationError(fmt::format("report has no scenario '{}'", name));
    }
    return *it;
}

std::vector<CalibrationRow> calibrate_presets(const RegistrationSeries& registrations) {
    std::vector<CalibrationRow> rows;
    for (const auto& name : preset_names()) {
        const ScenarioSpec spec = builtin_preset(name);
        for (const auto& [level, cfg] : spec.levels) {
            if (!cfg.fixed_point) continue;
            CalibrationRow row;
            row.scenario = name;
            row.level = level;
            row.fixed_point = *cfg.fixed_point;
            row.published_q = cfg.bass.q;
            const LevelTrajectory published = simulate_level(level, cfg.bass, registrations);
            row.published_share = published.raw_share[*published.index_of(cfg.fixed_point->year)];
            row.calibrated = calibrate_q(cfg.bass.p, cfg.bass.market_potential, cfg.bass.period(), registrations,
                                         *cfg.fixed_point);
            rows.push_back(row);
        }
    }
    return rows;
}

namespace {

std::string optional_year(const std::optional<int>& year) { return year ? std::to_string(*year) : ""; }

std::string coefficients_csv(const std::vector<ScenarioRun>& runs, const std::string& hash) {
    std::string out = fmt::format("# manifest_sha256={}\n", hash);
    out += "scenario,level,p,q,market_potential,period_start,period_end\n";
    for (const auto& run : runs) {
        for (const auto& [level, cfg] : run.spec.levels) {
            out += fmt::format("{},{},{},{},{},{},{}\n", run.spec.name, to_string(level), format_number(cfg.bass.p),
                               format_number(cfg.bass.q), format_number(cfg.bass.market_potential),
                               cfg.bass.period_start, cfg.bass.period_end);
        }
    }
    return out;
}

std::string calibration_csv(const std::vector<CalibrationRow>& rows, const std::string& hash) {
    std::string out = fmt::format("# manifest_sha256={}\n", hash);
    out += "scenario,level,year,target_share,published_q,published_share,calibrated_q,achieved_share,iterations\n";
    for (const auto& r : rows) {
        out += fmt::format("{},{},{},{},{},{},{},{},{}\n", r.scenario, to_string(r.level), r.fixed_point.year,
                           format_number(r.fixed_point.target_share), format_number(r.published_q),
                           format_number(r.published_share), format_number(r.calibrated.q),
                           format_number(r.calibrated.achieved_share), r.calibrated.iterations);
    }
    return out;
}

std::string entry_years_csv(const std::vector<ScenarioRun>& runs, const std::string& hash) {
    std::string out = fmt::format("# manifest_sha256={}\n", hash);
    out += "scenario,level,expected_entry_year,entry_year,mass_market_year,retirement_year\n";
    for (const auto& run : runs) {
        for (const auto& [level, cfg] : run.spec.levels) {
            const LevelTrajectory* t = run.result.find(level);
            out += fmt::format("{},{},{},{},{},{}\n", run.spec.name, to_string(level), optional_year(cfg.entry_year),
                               optional_year(entry_year(*t)), optional_year(mass_market_year(*t)),
                               optional_year(retirement_year(*t, run.result.horizon)));
        }
    }
    return out;
}

std::string va_summary_csv(const std::vector<ScenarioRun>& runs, const std::string& hash) {
    std::string out = fmt::format("# manifest_sha256={}\n", hash);
    out += "scenario,basis,first_year,last_year,total_eur,hw_eur,sw_eur,final_year_eur\n";
    for (const auto& run : runs) {
        for (const ValueAddedTable* t : {&run.va_price, &run.va_cost}) {
            out += fmt::format("{},{},{},{},{},{},{},{}\n", run.spec.name, to_string(t->basis), t->horizon.first,
                               t->horizon.last, format_number(t->horizon_total), format_number(t->hw_total),
                               format_number(t->sw_total), format_number(t->annual_total(t->horizon.last)));
        }
    }
    return out;
}

ScenarioComparison compare(const Report& report, VaBasis basis) {
    std::vector<ValueAddedTable> tables;
    for (const char* name : {"slow", "baseline", "fast"}) {
        tables.push_back(report.run(name).va(basis));
    }
    return compare_scenarios(tables);
}

}  // namespace

std::string summary_text(const Report& report) {
    std::string out = fmt::format("manifest_sha256={}\n", report.manifest_hash);
    for (const ScenarioComparison* cmp : {&report.price, &report.cost}) {
        const VaBasis basis = cmp == &report.price ? VaBasis::Price : VaBasis::Cost;
        const YearRange h = report.runs.front().va(basis).horizon;
        out += fmt::format("\nvalue added {}-{}, {} basis (billion EUR)\n", h.first, h.last, to_string(basis));
        for (const auto& run : report.runs) {
            const ValueAddedTable& t = run.va(basis);
            out += fmt::format("  {:<22} total {:>10.2f}  hw {:>9.2f}  sw {:>9.2f}  {} {:>8.2f}\n", run.spec.name,
                               t.horizon_total / 1e9, t.hw_total / 1e9, t.sw_total / 1e9, h.last,
                               t.annual_total(h.last) / 1e9);
        }
        out += fmt::format("  ordering slow <= baseline <= fast: {}{}\n", cmp->ordered ? "yes" : "no",
                           cmp->strictly_ordered ? " (strict)" : "");
    }
    return out;
}

Report write_report(const RegistrationSeries& registrations, const std::filesystem::path& out_dir,
                    const ReportOptions& options) {
    std::vector<ScenarioSpec> specs;
    std::vector<ScenarioDocument> documents;
    for (const auto& name : preset_names()) {
        specs.push_back(builtin_preset(name));
        documents.push_back(document_from_spec(specs.back(), default_costs()));
    }

    RunManifest manifest;
    manifest.command = "report";
    manifest.scenarios = preset_names();
    manifest.inputs["registrations"] = options.registrations_label;
    manifest.overrides["va_horizon"] = fmt::format("{}:{}", options.va_horizon.first, options.va_horizon.last);
    manifest.input_hash = input_hash(registrations, documents);
    ArtifactWriter writer(out_dir, manifest);
    const std::string& hash = writer.manifest_hash();

    Report report;
    report.manifest_hash = hash;
    const CostTable costs = default_costs();
    if (options.parallel) {
        std::vector<std::future<ScenarioRun>> pending;
        for (const auto& spec : specs) {
            pending.push_back(std::async(std::launch::async, [&, spec] {
                return evaluate_scenario(spec, costs, registrations, options.va_horizon);
            }));
        }
        for (auto& f : pending) report.runs.push_back(f.get());
    } else {
        for (const auto& spec : specs) {
            report.runs.push_back(evaluate_scenario(spec, costs, registrations, options.va_horizon));
        }
    }
    report.calibrations = calibrate_presets(registrations);
    report.price = compare(report, VaBasis::Price);
    report.cost = compare(report, VaBasis::Cost);

    for (const auto& run : report.runs) {
        const std::string& name = run.spec.name;
        writer.write(name + "_trajectories.csv", trajectories_csv(run.result, hash));
        writer.write(name + "_shares.svg", share_chart_svg(run.result, hash));
        writer.write(name + "_va.csv", value_added_csv(run.va_price, hash));
        writer.write(name + "_va.svg", value_added_chart_svg(run.va_price, hash));
        writer.write(name + "_va_cost.csv", value_added_csv(run.va_cost, hash));
    }
    writer.write("coefficients.csv", coefficients_csv(report.runs, hash));
    writer.write("calibration.csv", calibration_csv(report.calibrations, hash));
    writer.write("entry_years.csv", entry_years_csv(report.runs, hash));
    writer.write("va_summary.csv", va_summary_csv(report.runs, hash));
    writer.write("summary.txt", summary_text(report));
    report.manifest_path = writer.finish();
    return report;
}

}  // namespace avdiff
