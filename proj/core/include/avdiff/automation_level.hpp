#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace avdiff {

/// SAE driving-automation level. Ordered: L0 < L1 < ... < L5.
enum class AutomationLevel : std::uint8_t { L0 = 0, L1, L2, L3, L4, L5 };

inline constexpr std::array<AutomationLevel, 6> kAllLevels{
    AutomationLevel::L0, AutomationLevel::L1, AutomationLevel::L2,
    AutomationLevel::L3, AutomationLevel::L4, AutomationLevel::L5};

constexpr int rank(AutomationLevel level) { return static_cast<int>(level); }

std::string_view to_string(AutomationLevel level);

/// Accepts "L3", "l3" or "3". Throws ConfigError otherwise.
AutomationLevel parse_level(std::string_view text);

}  // namespace avdiff
