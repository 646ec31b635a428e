#include "avdiff/diffusion.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "avdiff/errors.hpp"

namespace avdiff {

void BassParams::validate() const {
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw DomainError(fmt::format("Bass p must be > 0, got {}", p));
    }
    if (!(q >= 0.0) || !std::isfinite(q)) {
        throw DomainError(fmt::format("Bass q must be >= 0, got {}", q));
    }
    if (!(market_potential > 0.0) || !std::isfinite(market_potential)) {
        throw DomainError(fmt::format("market potential must be > 0, got {}", market_potential));
    }
    if (period_start > period_end) {
        throw DomainError(fmt::format("period start {} is after period end {}", period_start, period_end));
    }
}

std::optional<std::size_t> LevelTrajectory::index_of(int year) const {
    if (!covers(year)) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(year - first_year());
}

double LevelTrajectory::allocated_at(int year) const {
    auto idx = index_of(year);
    return idx ? allocated_share[*idx] : 0.0;
}

double bass_increment(const BassParams& params, double cumulative) {
    if (!(cumulative >= 0.0) || cumulative > params.market_potential) {
        throw DomainError(fmt::format("cumulative adopters {} outside [0, {}]", cumulative,
                                      params.market_potential));
    }
    const double nbar = params.market_potential;
    return params.p * nbar + (params.q - params.p) * cumulative - (params.q / nbar) * cumulative * cumulative;
}

LevelTrajectory simulate_level(AutomationLevel level, const BassParams& params,
                               const RegistrationSeries& registrations) {
    params.validate();
    for (int year = params.period_start; year <= params.period_end; ++year) {
        if (!registrations.covers(year)) {
            throw CoverageError(year, fmt::format("registration series has no data for {} needed by {} ({}-{})",
                                                  year, to_string(level), params.period_start,
                                                  params.period_end));
        }
    }

    LevelTrajectory out;
    out.level = level;
    const auto years = static_cast<std::size_t>(params.period_end - params.period_start + 1);
    out.states.reserve(years);
    out.raw_share.reserve(years);

    double cumulative = 0.0;
    for (int year = params.period_start; year <= params.period_end; ++year) {
        const double headroom = params.market_potential - cumulative;
        double n = std::clamp(bass_increment(params, cumulative), 0.0, headroom);
        // Keep N(t) = N(t-1) + n(t) exact in floating point without overshooting Nbar.
        while (cumulative + n > params.market_potential) {
            n = std::nextafter(n, 0.0);
        }
        cumulative += n;
        out.states.push_back({year, n, cumulative});
        out.raw_share.push_back(n / registrations.at(year));
    }
    out.allocated_share = out.raw_share;
    return out;
}

double bass_closed_form(double p, double q, double years) {
    if (!(p > 0.0) || !(p + q > 0.0)) {
        throw DomainError(fmt::format("closed form needs p > 0 and p + q > 0 (p={}, q={})", p, q));
    }
    if (!(years >= 0.0)) {
        throw DomainError(fmt::format("time since launch must be >= 0, got {}", years));
    }
    const double decay = std::exp(-(p + q) * years);
    return (1.0 - decay) / (1.0 + (q / p) * decay);
}

double bass_fine_step_fraction(double p, double q, double years, int substeps) {
    if (substeps < 1) {
        throw DomainError("substeps must be >= 1");
    }
    if (!(years >= 0.0)) {
        throw DomainError(fmt::format("time since launch must be >= 0, got {}", years));
    }
    // Work in units of Nbar: f' = (p + q f)(1 - f).
    const double dt = 1.0 / substeps;
    const auto steps = static_cast<long>(std::llround(years * substeps));
    double f = 0.0;
    for (long i = 0; i < steps; ++i) {
        const double df = std::clamp((p + (q - p) * f - q * f * f) * dt, 0.0, 1.0 - f);
        f += df;
    }
    return f;
}

}  // namespace avdiff
