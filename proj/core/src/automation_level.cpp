#include "avdiff/automation_level.hpp"

#include "avdiff/errors.hpp"

namespace avdiff {

std::string_view to_string(AutomationLevel level) {
    static constexpr std::array<std::string_view, 6> names{"L0", "L1", "L2", "L3", "L4", "L5"};
    return names[static_cast<std::size_t>(rank(level))];
}

AutomationLevel parse_level(std::string_view text) {
    const std::string_view original = text;
    if (text.size() == 2 && (text[0] == 'L' || text[0] == 'l')) {
        text.remove_prefix(1);
    }
    if (text.size() == 1 && text[0] >= '0' && text[0] <= '5') {
        return static_cast<AutomationLevel>(text[0] - '0');
    }
    throw ConfigError("unknown automation level '" + std::string(original) + "' (expected L0..L5)");
}

}  // namespace avdiff
