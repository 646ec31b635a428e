#include <doctest.h>

#include <cmath>

#include "avdiff/calibration.hpp"
#include "avdiff/diffusion.hpp"
#include "avdiff/errors.hpp"

using namespace avdiff;

namespace {

double share(const BassParams& params, const RegistrationSeries& regs, int year) {
    const auto t = simulate_level(AutomationLevel::L3, params, regs);
    return t.raw_share[*t.index_of(year)];
}

}  // namespace

TEST_CASE("roundtrip recovers q") {
    const auto regs = build_reference_series();
    const BassParams params{0.002, 0.3, 206'769'000.0, 2025, 2039};
    const double target = share(params, regs, 2030);
    const auto r = calibrate_q(params.p, params.market_potential, params.period(), regs, {2030, target});
    CHECK(r.q == doctest::Approx(0.3).epsilon(1e-6 / 0.3));
    CHECK(r.residual <= 1e-6);
    CHECK(r.achieved_share == doctest::Approx(target).epsilon(1e-5));
    CHECK(r.iterations > 0);
}

TEST_CASE("baseline fixed points land near the published coefficients") {
    const auto regs = build_reference_series();
    const auto l2 = calibrate_q(0.002, 238'186'000.0, {2015, 2030}, regs, {2025, 0.39});
    CHECK(std::abs(l2.q - 0.285) <= 0.05);
    CHECK(l2.residual <= 1e-6);
    const auto l3 = calibrate_q(0.002, 143'879'000.0, {2025, 2041}, regs, {2030, 0.08});
    CHECK(std::abs(l3.q - 0.335) <= 0.05);
    CHECK(l3.residual <= 1e-6);
}

TEST_CASE("the smallest q reaching the target is returned") {
    const auto regs = build_reference_series();
    // L2 at 2025 peaks near q = 0.5 and collapses for large q; the rising
    // branch solution is the one below the peak.
    const auto r = calibrate_q(0.002, 238'186'000.0, {2015, 2030}, regs, {2025, 0.2});
    const BassParams below{0.002, r.q - 1e-3, 238'186'000.0, 2015, 2030};
    CHECK(share(below, regs, 2025) < 0.2);
}

TEST_CASE("unattainable targets raise a bracket error") {
    const auto regs = build_reference_series();
    CHECK_THROWS_AS(calibrate_q(0.002, 1e6, {2025, 2041}, regs, {2030, 0.5}), BracketError);
    CalibrationOptions tight;
    tight.q_hi = 0.05;
    CHECK_THROWS_AS(calibrate_q(0.002, 143'879'000.0, {2025, 2041}, regs, {2030, 0.08}, tight), BracketError);
    // target below what q_lo already achieves
    CalibrationOptions high_lo;
    high_lo.q_lo = 0.5;
    CHECK_THROWS_AS(calibrate_q(0.002, 143'879'000.0, {2025, 2041}, regs, {2030, 0.001}, high_lo), BracketError);
}

TEST_CASE("iteration budget exhaustion is a convergence error") {
    const auto regs = build_reference_series();
    CalibrationOptions options;
    options.max_iterations = 3;
    CHECK_THROWS_AS(calibrate_q(0.002, 143'879'000.0, {2025, 2041}, regs, {2030, 0.08}, options), ConvergenceError);
    CHECK_THROWS_AS(calibrate_q(0.002, 143'879'000.0, {2025, 2041}, regs, {2030, 0.08}, options), SolverError);
}

TEST_CASE("target reached at q_lo returns immediately") {
    const auto regs = build_reference_series();
    const BassParams zero{0.002, 0.0, 143'879'000.0, 2025, 2041};
    const auto r = calibrate_q(0.002, 143'879'000.0, {2025, 2041}, regs, {2030, share(zero, regs, 2030)});
    CHECK(r.q == 0.0);
    CHECK(r.iterations == 0);
}

TEST_CASE("input validation") {
    const auto regs = build_reference_series();
    CHECK_THROWS_AS(calibrate_q(0.002, 1e8, {2025, 2041}, regs, {2025, 0.1}), DomainError);
    CHECK_THROWS_AS(calibrate_q(0.002, 1e8, {2025, 2041}, regs, {2041, 0.1}), DomainError);
    CHECK_THROWS_AS(calibrate_q(0.002, 1e8, {2025, 2041}, regs, {2030, 0.0}), DomainError);
    CHECK_THROWS_AS(calibrate_q(0.002, 1e8, {2025, 2041}, regs, {2030, 1.0}), DomainError);
    CHECK_THROWS_AS(calibrate_q(0.0, 1e8, {2025, 2041}, regs, {2030, 0.1}), DomainError);
    CalibrationOptions bad;
    bad.tolerance = 0.0;
    CHECK_THROWS_AS(calibrate_q(0.002, 1e8, {2025, 2041}, regs, {2030, 0.1}, bad), DomainError);
    bad = {};
    bad.q_hi = -1.0;
    CHECK_THROWS_AS(calibrate_q(0.002, 1e8, {2025, 2041}, regs, {2030, 0.1}, bad), DomainError);
    CHECK_THROWS_AS(calibrate_q(0.002, 1e8, {2045, 2055}, regs, {2050, 0.1}), CoverageError);
}

TEST_CASE("market potential from the registration series") {
    const auto regs = build_reference_series();
    CHECK(std::abs(derive_market_potential(regs, {2015, 2029}, 1.0) / 181'040'000.0 - 1.0) <= 0.02);
    CHECK(derive_market_potential(RegistrationSeries(2020, {10.0, 20.0}), {2020, 2021}, 0.5) == 15.0);
    CHECK_THROWS_AS(derive_market_potential(regs, {2015, 2029}, 0.0), DomainError);
    CHECK_THROWS_AS(derive_market_potential(regs, {2015, 2029}, 1.5), DomainError);
    CHECK_THROWS_AS(derive_market_potential(regs, {2040, 2060}, 0.5), CoverageError);
}
