#pragma once

#include "avdiff/registrations.hpp"

namespace avdiff {

/// Literature anchor: a level's share of new registrations in a given year.
struct FixedPoint {
    int year = 0;
    double target_share = 0.0;  ///< in (0, 1)

    bool operator==(const FixedPoint&) const = default;
};

struct CalibrationOptions {
    double tolerance = 1e-6;     ///< on |achieved share - target|
    double q_tolerance = 1e-10;  ///< final bracket width in q
    double q_lo = 0.0;
    double q_hi = 2.0;
    int max_iterations = 200;
    int scan_cells = 400;        ///< coarse grid used to locate the bracket
};

struct CalibrationResult {
    double q = 0.0;
    double achieved_share = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

/// Solves q so that the simulated raw share in `fixed_point.year` hits the
/// target.
///
/// The share at a fixed year rises with q until the adoption peak moves
/// before that year, then falls. The solver scans the q bounds on a coarse
/// grid, takes the first cell whose share crosses the target (the smallest
/// q that reaches it), checks the share is monotone on that cell, and
/// bisects it.
///
/// Throws BracketError if no q in the bounds reaches the target and
/// ConvergenceError if bisection does not meet both tolerances within
/// `max_iterations`.
CalibrationResult calibrate_q(double p, double market_potential, const YearRange& period,
                              const RegistrationSeries& registrations, const FixedPoint& fixed_point,
                              const CalibrationOptions& options = {});

/// potential_share x total registrations over the period.
double derive_market_potential(const RegistrationSeries& registrations, const YearRange& period,
                               double potential_share);

}  // namespace avdiff
