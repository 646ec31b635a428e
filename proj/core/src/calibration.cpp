#include "avdiff/calibration.hpp"

#include <cmath>

#include <fmt/format.h>

#include "avdiff/diffusion.hpp"
#include "avdiff/errors.hpp"

namespace avdiff {
namespace {

void validate(double p, double market_potential, const YearRange& period, const FixedPoint& fixed_point,
              const CalibrationOptions& options) {
    if (!(options.tolerance > 0.0) || !(options.q_tolerance > 0.0)) {
        throw DomainError("calibration tolerances must be > 0");
    }
    if (!(options.q_lo >= 0.0) || !(options.q_hi > options.q_lo)) {
        throw DomainError(fmt::format("invalid q bounds [{}, {}]", options.q_lo, options.q_hi));
    }
    if (options.max_iterations < 1 || options.scan_cells < 1) {
        throw DomainError("max_iterations and scan_cells must be >= 1");
    }
    if (!(fixed_point.target_share > 0.0 && fixed_point.target_share < 1.0)) {
        throw DomainError(fmt::format("target share must be in (0, 1), got {}", fixed_point.target_share));
    }
    if (!(fixed_point.year > period.first && fixed_point.year < period.last)) {
        throw DomainError(fmt::format("fixed-point year {} must lie strictly inside the period {}-{}",
                                      fixed_point.year, period.first, period.last));
    }
    BassParams{p, 0.0, market_potential, period.first, period.last}.validate();
}

}  // namespace

CalibrationResult calibrate_q(double p, double market_potential, const YearRange& period,
                              const RegistrationSeries& registrations, const FixedPoint& fixed_point,
                              const CalibrationOptions& options) {
    validate(p, market_potential, period, fixed_point, options);
    for (int year = period.first; year <= period.last; ++year) {
        if (!registrations.covers(year)) {
            throw CoverageError(year, fmt::format("registration series has no data for {}", year));
        }
    }

    const double target = fixed_point.target_share;
    // Years after the fixed point do not influence its share, so runs stop there.
    auto share_at = [&](double q) {
        const BassParams params{p, q, market_potential, period.first, fixed_point.year};
        return simulate_level(AutomationLevel::L0, params, registrations).raw_share.back();
    };

    const double width = (options.q_hi - options.q_lo) / options.scan_cells;
    double lo = options.q_lo;
    double share_lo = share_at(lo);
    if (std::abs(share_lo - target) <= options.tolerance) {
        return {lo, share_lo, 0, std::abs(share_lo - target)};
    }
    if (share_lo > target) {
        throw BracketError(fmt::format("target share {} is below the share {} reached at q = {}", target,
                                       share_lo, options.q_lo));
    }

    double hi = lo;
    double best = share_lo;
    bool bracketed = false;
    for (int cell = 1; cell <= options.scan_cells; ++cell) {
        hi = cell == options.scan_cells ? options.q_hi : options.q_lo + cell * width;
        const double share_hi = share_at(hi);
        best = std::max(best, share_hi);
        if (share_hi >= target) {
            bracketed = true;
            break;
        }
        lo = hi;
        share_lo = share_hi;
    }
    if (!bracketed) {
        throw BracketError(fmt::format(
            "target share {:.6g} in {} is unattainable for q in [{}, {}] (maximum share {:.6g})", target,
            fixed_point.year, options.q_lo, options.q_hi, best));
    }

    constexpr int kMonotoneProbes = 8;
    double previous = share_lo;
    for (int i = 1; i <= kMonotoneProbes; ++i) {
        const double s = share_at(lo + (hi - lo) * i / (kMonotoneProbes + 1));
        if (s < previous) {
            throw BracketError(fmt::format("share is not monotone in q on [{}, {}]", lo, hi));
        }
        previous = s;
    }

    for (int iteration = 1; iteration <= options.max_iterations; ++iteration) {
        const double mid = 0.5 * (lo + hi);
        const double share = share_at(mid);
        if (share < target) {
            lo = mid;
        } else {
            hi = mid;
        }
        const double residual = std::abs(share - target);
        if (residual <= options.tolerance && hi - lo <= options.q_tolerance) {
            const BassParams params{p, mid, market_potential, period.first, period.last};
            const auto trajectory = simulate_level(AutomationLevel::L0, params, registrations);
            const double achieved = trajectory.raw_share[*trajectory.index_of(fixed_point.year)];
            return {mid, achieved, iteration, std::abs(achieved - target)};
        }
    }
    throw ConvergenceError(fmt::format("calibration did not converge within {} iterations (bracket [{}, {}])",
                                       options.max_iterations, lo, hi));
}

double derive_market_potential(const RegistrationSeries& registrations, const YearRange& period,
                               double potential_share) {
    if (!(potential_share > 0.0 && potential_share <= 1.0)) {
        throw DomainError(fmt::format("potential share must be in (0, 1], got {}", potential_share));
    }
    if (period.first > period.last) {
        throw DomainError(fmt::format("empty period {}-{}", period.first, period.last));
    }
    return potential_share * registrations.sum(period);
}

}  // namespace avdiff
