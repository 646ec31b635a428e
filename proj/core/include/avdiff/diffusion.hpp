#pragma once

#include <optional>
#include <vector>

#include "avdiff/automation_level.hpp"
#include "avdiff/registrations.hpp"

namespace avdiff {

/// Bass coefficients for one automation level in one scenario.
struct BassParams {
    double p = 0.0;                 ///< coefficient of innovation, > 0
    double q = 0.0;                 ///< coefficient of imitation, >= 0
    double market_potential = 0.0;  ///< N-bar, vehicles, > 0
    int period_start = 0;
    int period_end = 0;

    YearRange period() const { return {period_start, period_end}; }

    /// Throws DomainError when an invariant is violated.
    void validate() const;

    bool operator==(const BassParams&) const = default;
};

struct AdoptionState {
    int year = 0;
    double new_adopters = 0.0;         ///< n(t), vehicles/year
    double cumulative_adopters = 0.0;  ///< N(t) at the end of `year`

    bool operator==(const AdoptionState&) const = default;
};

/// Per-year adoption path of one level. `raw_share` and `allocated_share`
/// are parallel to `states`.
struct LevelTrajectory {
    AutomationLevel level = AutomationLevel::L0;
    std::vector<AdoptionState> states;
    std::vector<double> raw_share;
    std::vector<double> allocated_share;

    bool empty() const { return states.empty(); }
    int first_year() const { return states.front().year; }
    int last_year() const { return states.back().year; }
    bool covers(int year) const { return !empty() && year >= first_year() && year <= last_year(); }

    /// Index into the parallel vectors, or nullopt outside the trajectory.
    std::optional<std::size_t> index_of(int year) const;

    /// Allocated share at `year`; 0 outside the trajectory (level not on market).
    double allocated_at(int year) const;

    bool operator==(const LevelTrajectory&) const = default;
};

/// Unclamped annual increment n = p*Nbar + (q - p)*N - (q/Nbar)*N^2.
/// Throws DomainError unless 0 <= cumulative <= market_potential.
double bass_increment(const BassParams& params, double cumulative);

/// Annual discrete Bass run over the params' period.
///
/// Starts from N = 0 before period_start. Each year's increment is evaluated
/// on the cumulative count at the start of that year, then clamped into
/// [0, Nbar - N] so saturation is exact. raw_share = n / registrations and
/// may exceed 1 for pathological parameters; allocated_share starts as a
/// copy of raw_share. Throws CoverageError naming the first year the series
/// does not cover.
LevelTrajectory simulate_level(AutomationLevel level, const BassParams& params,
                               const RegistrationSeries& registrations);

/// Continuous-time Bass CDF F(t) = (1 - e^{-(p+q)t}) / (1 + (q/p) e^{-(p+q)t}),
/// the fraction of the market potential adopted `years` after launch.
double bass_closed_form(double p, double q, double years);

/// Same recursion as simulate_level with `substeps` steps per year, as a
/// fraction of Nbar after `years` years. Converges to bass_closed_form.
double bass_fine_step_fraction(double p, double q, double years, int substeps);

}  // namespace avdiff
