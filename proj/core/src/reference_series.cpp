#include <array>
#include <cmath>

#include "avdiff/registrations.hpp"

namespace avdiff {
namespace {

// Least-squares solution of the four period-sum equations
//   2015-2029: 181,040,000   2025-2039: 206,769,000
//   2035-2049: 220,949,000   2040-2050: 164,194,000
// for a piecewise-linear series with these knots. The system is square and
// the fractions below are its exact solution.
const std::array<std::pair<int, double>, 4> kKnots{{
    {2015, 1796040320.0 / 171.0},
    {2027, 753882080.0 / 57.0},
    {2039, 2499985760.0 / 171.0},
    {2050, 7788622600.0 / 513.0},
}};

double interpolate(int year) {
    for (std::size_t i = 1; i < kKnots.size(); ++i) {
        const auto& [x0, y0] = kKnots[i - 1];
        const auto& [x1, y1] = kKnots[i];
        if (year <= x1) {
            const double t = static_cast<double>(year - x0) / static_cast<double>(x1 - x0);
            return y0 + t * (y1 - y0);
        }
    }
    return kKnots.back().second;
}

}  // namespace

std::span<const std::pair<int, double>> reference_series_knots() { return kKnots; }

RegistrationSeries build_reference_series() {
    const int first = kKnots.front().first;
    const int last = kKnots.back().first;
    std::vector<double> counts;
    counts.reserve(static_cast<std::size_t>(last - first + 1));
    for (int year = first; year <= last; ++year) {
        counts.push_back(std::floor(interpolate(year) + 0.5));
    }
    return {first, std::move(counts)};
}

}  // namespace avdiff
