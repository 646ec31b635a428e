#include "avdiff/csv_writer.hpp"

#include <fmt/format.h>

namespace avdiff {

std::string format_number(double value) { return fmt::format("{}", value); }

std::string trajectories_csv(const ScenarioResult& result, const std::string& manifest_hash) {
    std::string out = fmt::format("# manifest_sha256={}\n", manifest_hash);
    out += "year,level,new_adopters,cumulative,raw_share,allocated_share\n";
    for (int year = result.horizon.first; year <= result.horizon.last; ++year) {
        for (const auto& t : result.trajectories) {
            const auto i = t.index_of(year);
            if (!i) continue;
            const AdoptionState& s = t.states[*i];
            out += fmt::format("{},{},{},{},{},{}\n", year, to_string(t.level), format_number(s.new_adopters),
                               format_number(s.cumulative_adopters), format_number(t.raw_share[*i]),
                               format_number(t.allocated_share[*i]));
        }
    }
    return out;
}

std::string value_added_csv(const ValueAddedTable& table, const std::string& manifest_hash) {
    std::string out = fmt::format("# manifest_sha256={}\n", manifest_hash);
    out += "year,level,vehicles,unit_price_eur,va_eur,va_hw_eur,va_sw_eur\n";
    for (const auto& c : table.cells) {
        out += fmt::format("{},{},{},{},{},{},{}\n", c.year, to_string(c.level), format_number(c.vehicles),
                           format_number(c.unit_value), format_number(c.va_total), format_number(c.va_hw),
                           format_number(c.va_sw));
    }
    return out;
}

}  // namespace avdiff
