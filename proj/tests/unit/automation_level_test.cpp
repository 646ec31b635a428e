#include <doctest.h>

#include "avdiff/automation_level.hpp"
#include "avdiff/errors.hpp"

using namespace avdiff;

TEST_CASE("levels are totally ordered") {
    for (std::size_t i = 1; i < kAllLevels.size(); ++i) {
        CHECK(kAllLevels[i - 1] < kAllLevels[i]);
        CHECK(rank(kAllLevels[i]) == static_cast<int>(i));
    }
}

TEST_CASE("level names round-trip") {
    for (auto level : kAllLevels) {
        CHECK(parse_level(to_string(level)) == level);
    }
    CHECK(parse_level("l4") == AutomationLevel::L4);
    CHECK(parse_level("5") == AutomationLevel::L5);
    CHECK_THROWS_AS(parse_level("L6"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_level(" level three "), doctest::Contains("level three"), ConfigError);
}
