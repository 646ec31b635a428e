#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "avdiff/csv_writer.hpp"
#include "avdiff/errors.hpp"
#include "avdiff/report.hpp"
#include "avdiff/svg_plot.hpp"

namespace avdiff::cli {

namespace {

struct Options {
    std::string scenario;
    std::string registrations = "ref";
    std::string out;
    std::string level;
    std::optional<double> target_share;
    std::optional<int> target_year;
    std::string horizon;
    std::string va_basis = "price";
    std::string dump;
};

std::string default_out_dir() {
    const char* env = std::getenv("AVDIFF_OUT");
    return env != nullptr && *env != '\0' ? env : "out";
}

RegistrationSeries registrations_for(const std::string& source) {
    return source == "ref" ? build_reference_series() : load_registrations(source);
}

ScenarioDocument document_for(const std::string& scenario) {
    if (scenario.empty()) {
        throw ValidationError("--scenario is required (a preset name or a JSON scenario file)");
    }
    if (is_preset(scenario)) {
        return document_from_spec(builtin_preset(scenario));
    }
    return load_scenario_document(scenario);
}

YearRange parse_horizon(const std::string& text, const YearRange& fallback) {
    if (text.empty()) return fallback;
    int first = 0, last = 0;
    char colon = 0;
    std::istringstream in(text);
    if (!(in >> first >> colon >> last) || colon != ':' || !in.eof() || first > last) {
        throw ConfigError(fmt::format("--horizon expects FIRST:LAST, got '{}'", text));
    }
    return {first, last};
}

RunManifest manifest_for(const std::string& command, const Options& o, const ResolvedScenario& resolved,
                         const RegistrationSeries& registrations) {
    RunManifest m;
    m.command = command;
    m.scenarios = {resolved.spec.name};
    m.inputs["registrations"] = o.registrations;
    m.inputs["scenario"] = o.scenario;
    if (!o.horizon.empty()) m.overrides["horizon"] = o.horizon;
    if (command == "va") m.overrides["va_basis"] = o.va_basis;
    m.input_hash = input_hash(registrations, {document_from_spec(resolved.spec, resolved.costs)});
    return m;
}

int cmd_presets(const Options& o, std::ostream& out) {
    if (!o.dump.empty()) {
        out << serialize_scenario_document(document_from_spec(builtin_preset(o.dump), default_costs()));
        return 0;
    }
    for (const auto& name : preset_names()) {
        const ScenarioSpec spec = builtin_preset(name);
        out << fmt::format("{}: {}\n", name, spec.description);
        out << fmt::format("  {:<5} {:>7} {:>7} {:>14} {:>11} {:>6} {}\n", "level", "p", "q", "N-bar", "period",
                           "entry", "fixed point");
        for (const auto& [level, cfg] : spec.levels) {
            out << fmt::format("  {:<5} {:>7} {:>7} {:>14.0f} {:>6}-{:<4} {:>6} {}\n", to_string(level),
                               cfg.bass.p, cfg.bass.q, cfg.bass.market_potential, cfg.bass.period_start,
                               cfg.bass.period_end, cfg.entry_year ? std::to_string(*cfg.entry_year) : "-",
                               cfg.fixed_point ? fmt::format("{:g}% in {}", 100 * cfg.fixed_point->target_share,
                                                             cfg.fixed_point->year)
                                               : "-");
        }
        out << '\n';
    }
    return 0;
}

int cmd_simulate(const Options& o, std::ostream& out) {
    const RegistrationSeries registrations = registrations_for(o.registrations);
    const ResolvedScenario resolved = resolve_scenario(document_for(o.scenario), registrations);
    ScenarioResult result = run_scenario(resolved.spec, registrations);
    const YearRange window = parse_horizon(o.horizon, result.horizon);
    if (!result.horizon.contains(window)) {
        throw ConfigError(fmt::format("--horizon {} lies outside the scenario horizon {}-{}", o.horizon,
                                      result.horizon.first, result.horizon.last));
    }
    result.horizon = window;

    ArtifactWriter writer(o.out, manifest_for("simulate", o, resolved, registrations));
    const std::string& name = resolved.spec.name;
    writer.write(name + "_trajectories.csv", trajectories_csv(result, writer.manifest_hash()));
    writer.write(name + "_shares.svg", share_chart_svg(result, writer.manifest_hash()));
    writer.finish();

    out << fmt::format("{}: {}-{}\n", name, window.first, window.last);
    for (const auto& [level, cfg] : resolved.spec.levels) {
        const LevelTrajectory& t = *result.find(level);
        auto show = [](const std::optional<int>& y) { return y ? std::to_string(*y) : std::string("-"); };
        out << fmt::format("  {} q={} entry {} mass market {} retired {}\n", to_string(level), cfg.bass.q,
                           show(entry_year(t)), show(mass_market_year(t)), show(retirement_year(t, window)));
    }
    out << fmt::format("wrote {}\n", writer.directory().string());
    return 0;
}

int cmd_calibrate(const Options& o, std::ostream& out) {
    if (o.level.empty()) {
        throw ValidationError("--level is required for calibrate");
    }
    const AutomationLevel level = parse_level(o.level);
    const RegistrationSeries registrations = registrations_for(o.registrations);
    const ScenarioDocument doc = document_for(o.scenario);
    auto it = std::find_if(doc.levels.begin(), doc.levels.end(), [&](const LevelEntry& e) { return e.level == level; });
    if (it == doc.levels.end()) {
        throw ConfigError(fmt::format("scenario '{}' does not configure {}", doc.name, to_string(level)));
    }
    FixedPoint fp;
    if (o.target_share && o.target_year) {
        fp = {*o.target_year, *o.target_share};
    } else if (o.target_share || o.target_year) {
        throw ValidationError("--target-share and --target-year must be given together");
    } else if (it->fixed_point) {
        fp = *it->fixed_point;
    } else {
        throw ValidationError(fmt::format("{} has no fixed point in '{}'; pass --target-share and --target-year",
                                          to_string(level), doc.name));
    }
    const double n_bar = it->market_potential
                             ? *it->market_potential
                             : derive_market_potential(registrations, it->period, *it->potential_share);
    const CalibrationResult r = calibrate_q(it->p, n_bar, it->period, registrations, fp);
    out << fmt::format("scenario {} level {} target {:g} in {}\n", doc.name, to_string(level), fp.target_share,
                       fp.year);
    out << fmt::format("q = {:.6f}\n", r.q);
    out << fmt::format("achieved_share = {:.8f}\n", r.achieved_share);
    out << fmt::format("residual = {:.3e}\n", r.residual);
    out << fmt::format("iterations = {}\n", r.iterations);
    if (it->q) {
        out << fmt::format("configured_q = {}\n", *it->q);
    }
    return 0;
}

int cmd_va(const Options& o, std::ostream& out) {
    const VaBasis basis = parse_va_basis(o.va_basis);
    const RegistrationSeries registrations = registrations_for(o.registrations);
    const ResolvedScenario resolved = resolve_scenario(document_for(o.scenario), registrations);
    const YearRange horizon = parse_horizon(o.horizon, kDefaultVaHorizon);
    const ScenarioRun run = evaluate_scenario(resolved.spec, resolved.costs, registrations, horizon);
    const ValueAddedTable& table = run.va(basis);

    ArtifactWriter writer(o.out, manifest_for("va", o, resolved, registrations));
    const std::string& name = resolved.spec.name;
    writer.write(name + "_va.csv", value_added_csv(table, writer.manifest_hash()));
    writer.write(name + "_va.svg", value_added_chart_svg(table, writer.manifest_hash()));
    writer.finish();

    out << fmt::format("{}: value added {}-{} ({} basis)\n", name, horizon.first, horizon.last, to_string(basis));
    for (const auto& [level, total] : table.level_totals) {
        out << fmt::format("  {} {:>10.2f} bn EUR\n", to_string(level), total / 1e9);
    }
    out << fmt::format("  total {:.2f} bn EUR (hardware {:.2f}, software {:.2f})\n", table.horizon_total / 1e9,
                       table.hw_total / 1e9, table.sw_total / 1e9);
    out << fmt::format("wrote {}\n", writer.directory().string());
    return 0;
}

int cmd_report(const Options& o, std::ostream& out) {
    ReportOptions options;
    options.registrations_label = o.registrations;
    options.va_horizon = parse_horizon(o.horizon, kDefaultVaHorizon);
    const Report report = write_report(registrations_for(o.registrations), o.out, options);
    out << summary_text(report);
    out << fmt::format("wrote {}\n", report.manifest_path.parent_path().string());
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Automated-vehicle uptake and value-added scenarios", "avdiff"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version());

    Options o;
    o.out = default_out_dir();

    auto add_registrations = [&](CLI::App* sub) {
        sub->add_option("--registrations", o.registrations, "'ref' or a year,new_registrations CSV")
            ->capture_default_str();
    };
    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", o.out, "output directory (default $AVDIFF_OUT or ./out)");
    };

    auto* presets = app.add_subcommand("presets", "list built-in scenarios");
    presets->add_option("--dump", o.dump, "print one preset as an editable JSON scenario file");

    auto* simulate = app.add_subcommand("simulate", "adoption trajectories and share chart");
    simulate->add_option("--scenario", o.scenario, "preset name or JSON file")->required();
    add_registrations(simulate);
    add_out(simulate);
    simulate->add_option("--horizon", o.horizon, "FIRST:LAST years to write");

    auto* calibrate = app.add_subcommand("calibrate", "solve q for a level's fixed point");
    calibrate->add_option("--scenario", o.scenario, "preset name or JSON file")->required();
    calibrate->add_option("--level", o.level, "L1..L5")->required();
    calibrate->add_option("--target-share", o.target_share, "share of registrations, e.g. 0.08");
    calibrate->add_option("--target-year", o.target_year, "calendar year of the target share");
    add_registrations(calibrate);

    auto* va = app.add_subcommand("va", "value-added table and stacked-area chart");
    va->add_option("--scenario", o.scenario, "preset name or JSON file")->required();
    va->add_option("--va-basis", o.va_basis, "price or cost")->capture_default_str();
    va->add_option("--horizon", o.horizon, "FIRST:LAST value-added window (default 2020:2050)");
    add_registrations(va);
    add_out(va);

    auto* report = app.add_subcommand("report", "all presets, every table and chart");
    report->add_option("--horizon", o.horizon, "FIRST:LAST value-added window (default 2020:2050)");
    add_registrations(report);
    add_out(report);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*presets) return cmd_presets(o, out);
        if (*simulate) return cmd_simulate(o, out);
        if (*calibrate) return cmd_calibrate(o, out);
        if (*va) return cmd_va(o, out);
        if (*report) return cmd_report(o, out);
    } catch (const SolverError& e) {
        err << "avdiff: solver failed: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        err << "avdiff: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "avdiff: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace avdiff::cli
