#include "avdiff/scenario_document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "avdiff/errors.hpp"

namespace avdiff {

using nlohmann::json;

namespace {

class Reader {
public:
    Reader(const json& node, std::string where) : node_(node), where_(std::move(where)) {
        if (!node_.is_object()) {
            throw ConfigError(fmt::format("{}: expected a JSON object", where_));
        }
    }

    void allow(std::initializer_list<const char*> keys) const {
        std::set<std::string> known(keys.begin(), keys.end());
        for (const auto& [key, _] : node_.items()) {
            if (!known.contains(key)) {
                throw ConfigError(fmt::format("{}: unknown key '{}'", where_, key));
            }
        }
    }

    bool has(const char* key) const { return node_.contains(key) && !node_.at(key).is_null(); }

    const json& at(const char* key) const {
        if (!has(key)) {
            throw ConfigError(fmt::format("{}: missing '{}'", where_, key));
        }
        return node_.at(key);
    }

    double number(const char* key) const {
        const json& v = at(key);
        if (!v.is_number()) {
            throw ConfigError(fmt::format("{}: '{}' must be a number", where_, key));
        }
        return v.get<double>();
    }

    int integer(const char* key) const {
        const json& v = at(key);
        if (!v.is_number_integer()) {
            throw ConfigError(fmt::format("{}: '{}' must be an integer year", where_, key));
        }
        return v.get<int>();
    }

    std::string string(const char* key) const {
        const json& v = at(key);
        if (!v.is_string()) {
            throw ConfigError(fmt::format("{}: '{}' must be a string", where_, key));
        }
        return v.get<std::string>();
    }

    std::optional<double> opt_number(const char* key) const {
        return has(key) ? std::optional<double>(number(key)) : std::nullopt;
    }

    std::optional<int> opt_integer(const char* key) const {
        return has(key) ? std::optional<int>(integer(key)) : std::nullopt;
    }

    YearRange years(const char* key) const {
        const json& v = at(key);
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
            throw ConfigError(fmt::format("{}: '{}' must be [first_year, last_year]", where_, key));
        }
        return {v[0].get<int>(), v[1].get<int>()};
    }

    const std::string& where() const { return where_; }

private:
    const json& node_;
    std::string where_;
};

AutomationLevel read_level(const Reader& r) {
    try {
        return parse_level(r.string("level"));
    } catch (const ConfigError& e) {
        throw ConfigError(fmt::format("{}: {}", r.where(), e.what()));
    }
}

LevelEntry read_level_entry(const json& node, const std::string& where) {
    Reader r(node, where);
    r.allow({"level", "p", "q", "market_potential", "potential_share", "period", "fixed_point", "entry_year",
             "mass_market_year_override"});
    LevelEntry e;
    e.level = read_level(r);
    e.p = r.number("p");
    e.q = r.opt_number("q");
    e.market_potential = r.opt_number("market_potential");
    e.potential_share = r.opt_number("potential_share");
    e.period = r.years("period");
    e.entry_year = r.opt_integer("entry_year");
    e.mass_market_year_override = r.opt_integer("mass_market_year_override");
    if (r.has("fixed_point")) {
        Reader fp(r.at("fixed_point"), where + ".fixed_point");
        fp.allow({"year", "share"});
        e.fixed_point = FixedPoint{fp.integer("year"), fp.number("share")};
    }
    if (e.market_potential.has_value() == e.potential_share.has_value()) {
        throw ConfigError(fmt::format("{}: give exactly one of 'market_potential' and 'potential_share'", where));
    }
    if (!e.q && !e.fixed_point) {
        throw ConfigError(fmt::format("{}: give 'q' or a 'fixed_point' to calibrate it from", where));
    }
    return e;
}

CostParams read_cost_entry(const json& node, const std::string& where) {
    Reader r(node, where);
    r.allow({"level", "mass_market_cost", "learning_rate", "floor_ratio", "markup", "hw_share", "sw_share",
             "mass_market_volume"});
    const AutomationLevel level = read_level(r);
    if (level == AutomationLevel::L0) {
        throw ConfigError(fmt::format("{}: L0 carries no automation package cost", where));
    }
    CostParams c = default_cost_params(level);
    if (auto v = r.opt_number("mass_market_cost")) c.mass_market_cost = *v;
    if (auto v = r.opt_number("learning_rate")) c.learning_rate = *v;
    if (auto v = r.opt_number("floor_ratio")) c.floor_ratio = *v;
    if (auto v = r.opt_number("markup")) c.markup = *v;
    const auto hw = r.opt_number("hw_share");
    const auto sw = r.opt_number("sw_share");
    if (hw && sw) {
        c.hw_share = *hw;
        c.sw_share = *sw;
    } else if (hw) {
        c.hw_share = *hw;
        c.sw_share = 1.0 - *hw;
    } else if (sw) {
        c.sw_share = *sw;
        c.hw_share = 1.0 - *sw;
    }
    c.mass_market_volume = r.opt_number("mass_market_volume");
    try {
        c.validate();
    } catch (const DomainError& e) {
        throw ConfigError(fmt::format("{}: {}", where, e.what()));
    }
    return c;
}

json year_range(const YearRange& r) { return json::array({r.first, r.last}); }

}  // namespace

ScenarioDocument parse_scenario_document(const std::string& text, const std::string& source) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports a byte offset; translate it to a line number.
        const auto offset = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
        throw ParseError(line, fmt::format("{}:{}: invalid JSON ({})", source, line, e.what()));
    }

    Reader r(root, source);
    r.allow({"name", "description", "horizon", "l1_residual_fraction", "levels", "costs"});
    ScenarioDocument doc;
    doc.name = r.string("name");
    if (r.has("description")) doc.description = r.string("description");
    if (r.has("horizon")) doc.horizon = r.years("horizon");
    if (auto v = r.opt_number("l1_residual_fraction")) doc.l1_residual_fraction = *v;

    const json& levels = r.at("levels");
    if (!levels.is_array()) {
        throw ConfigError(fmt::format("{}: 'levels' must be an array", source));
    }
    std::set<AutomationLevel> seen;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        LevelEntry e = read_level_entry(levels[i], fmt::format("{}: levels[{}]", source, i));
        if (!seen.insert(e.level).second) {
            throw ConfigError(fmt::format("{}: {} is configured more than once", source, to_string(e.level)));
        }
        doc.levels.push_back(e);
    }

    if (r.has("costs")) {
        const json& costs = r.at("costs");
        if (!costs.is_array()) {
            throw ConfigError(fmt::format("{}: 'costs' must be an array", source));
        }
        for (std::size_t i = 0; i < costs.size(); ++i) {
            CostParams c = read_cost_entry(costs[i], fmt::format("{}: costs[{}]", source, i));
            if (!doc.costs.emplace(c.level, c).second) {
                throw ConfigError(fmt::format("{}: costs for {} given more than once", source, to_string(c.level)));
            }
        }
    }
    return doc;
}

ScenarioDocument load_scenario_document(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
        throw ValidationError(fmt::format("unknown scenario file '{}' (not a preset name and no such file)",
                                          path.string()));
    }
    std::ifstream in(path);
    if (!in) {
        throw ValidationError(fmt::format("cannot read scenario file '{}'", path.string()));
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario_document(buffer.str(), path.string());
}

std::string serialize_scenario_document(const ScenarioDocument& doc) {
    json root = json::object();
    root["name"] = doc.name;
    root["description"] = doc.description;
    root["horizon"] = year_range(doc.horizon);
    root["l1_residual_fraction"] = doc.l1_residual_fraction;
    json levels = json::array();
    for (const auto& e : doc.levels) {
        json l = json::object();
        l["level"] = std::string(to_string(e.level));
        l["p"] = e.p;
        if (e.q) l["q"] = *e.q;
        if (e.market_potential) l["market_potential"] = *e.market_potential;
        if (e.potential_share) l["potential_share"] = *e.potential_share;
        l["period"] = year_range(e.period);
        if (e.entry_year) l["entry_year"] = *e.entry_year;
        if (e.mass_market_year_override) l["mass_market_year_override"] = *e.mass_market_year_override;
        if (e.fixed_point) l["fixed_point"] = {{"year", e.fixed_point->year}, {"share", e.fixed_point->target_share}};
        levels.push_back(std::move(l));
    }
    root["levels"] = std::move(levels);
    json costs = json::array();
    for (const auto& [level, c] : doc.costs) {
        json j = json::object();
        j["level"] = std::string(to_string(level));
        j["mass_market_cost"] = c.mass_market_cost;
        j["learning_rate"] = c.learning_rate;
        j["floor_ratio"] = c.floor_ratio;
        j["markup"] = c.markup;
        j["hw_share"] = c.hw_share;
        j["sw_share"] = c.sw_share;
        if (c.mass_market_volume) j["mass_market_volume"] = *c.mass_market_volume;
        costs.push_back(std::move(j));
    }
    root["costs"] = std::move(costs);
    return root.dump(2) + "\n";
}

ScenarioDocument document_from_spec(const ScenarioSpec& spec, const CostTable& costs) {
    ScenarioDocument doc;
    doc.name = spec.name;
    doc.description = spec.description;
    doc.horizon = spec.horizon;
    doc.l1_residual_fraction = spec.l1_residual_fraction;
    for (const auto& [level, cfg] : spec.levels) {
        LevelEntry e;
        e.level = level;
        e.p = cfg.bass.p;
        e.q = cfg.bass.q;
        e.market_potential = cfg.bass.market_potential;
        e.period = cfg.bass.period();
        e.fixed_point = cfg.fixed_point;
        e.entry_year = cfg.entry_year;
        e.mass_market_year_override = cfg.mass_market_year_override;
        doc.levels.push_back(e);
    }
    doc.costs = costs;
    return doc;
}

ResolvedScenario resolve_scenario(const ScenarioDocument& doc, const RegistrationSeries& registrations,
                                  const CalibrationOptions& options) {
    ResolvedScenario out;
    out.spec.name = doc.name;
    out.spec.description = doc.description;
    out.spec.horizon = doc.horizon;
    out.spec.l1_residual_fraction = doc.l1_residual_fraction;

    for (const auto& e : doc.levels) {
        LevelConfig cfg;
        cfg.level = e.level;
        cfg.fixed_point = e.fixed_point;
        cfg.entry_year = e.entry_year;
        cfg.mass_market_year_override = e.mass_market_year_override;
        cfg.bass.p = e.p;
        cfg.bass.period_start = e.period.first;
        cfg.bass.period_end = e.period.last;
        cfg.bass.market_potential = e.market_potential
                                        ? *e.market_potential
                                        : derive_market_potential(registrations, e.period, *e.potential_share);
        if (e.q) {
            cfg.bass.q = *e.q;
        } else {
            const CalibrationResult cal =
                calibrate_q(cfg.bass.p, cfg.bass.market_potential, e.period, registrations, *e.fixed_point, options);
            cfg.bass.q = cal.q;
            out.calibrations.emplace(e.level, cal);
        }
        out.spec.levels.emplace(e.level, cfg);
    }
    out.spec.validate();

    out.costs = default_costs();
    for (const auto& [level, c] : doc.costs) {
        out.costs[level] = c;
    }
    return out;
}

}  // namespace avdiff
