#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qwalk/transport.hpp"
#include "test_support.hpp"

using namespace qwalk;
namespace ts = testsupport;

TEST_CASE("phase derivatives vanish at the stationary momentum k = pi/2") {
    for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
        PhaseDerivatives d = phase_derivatives(kPi / 2, alpha, -alpha / kSqrt2);
        REQUIRE(std::abs(d.first) < 1e-12);
        REQUIRE(std::abs(d.second) < 1e-12);

        // second-order stationary point: the third derivative is not zero
        const double h = 1e-3;
        auto second = [&](double k) { return phase_derivatives(k, alpha, -alpha / kSqrt2).second; };
        const double third = ts::central_diff(second, kPi / 2, h);
        REQUIRE(std::abs(third) > 0.01);
    }
}

TEST_CASE("first phase derivative reduces to nu where sin k = 0") {
    for (double nu : {-0.4, 0.0, 0.25}) {
        PhaseDerivatives d = phase_derivatives(0.0, 0.7, nu);
        REQUIRE(d.first == nu);
        REQUIRE(std::abs(d.second - 0.7 * (2.0 - 0.49) / std::pow(2.0 - 0.49, 1.5)) < 1e-14);
    }
}

TEST_CASE("closed-form phase derivatives match central finite differences") {
    auto phase = [](double k, double alpha, double nu) {
        return PhaseFunction{alpha, nu}.value(k);
    };

    {
        PhaseDerivatives d = phase_derivatives(0.3, 0.7, 0.1);
        auto f = [&](double k) { return phase(k, 0.7, 0.1); };
        REQUIRE(std::abs(d.first - ts::central_diff(f, 0.3, 1e-5)) < 1e-6);
        REQUIRE(std::abs(d.second - ts::central_diff2(f, 0.3, 1e-4)) < 1e-6);
    }

    for (int i = 0; i < 100; ++i) {
        const double k = ts::uniform(-3.0, 3.0);
        const double alpha = ts::uniform(0.0, 1.0);
        const double nu = ts::uniform(-0.8, 0.8);
        PhaseDerivatives d = phase_derivatives(k, alpha, nu);
        auto f = [&](double kk) { return phase(kk, alpha, nu); };
        REQUIRE(std::abs(d.first - ts::central_diff(f, k, 1e-5)) < 1e-6);
        REQUIRE(std::abs(d.second - ts::central_diff2(f, k, 1e-4)) < 1e-5);
    }
}

TEST_CASE("phase value is the dispersion angle plus the linear drift") {
    for (int i = 0; i < 50; ++i) {
        const double k = ts::uniform(-kPi, kPi);
        const double alpha = ts::uniform(0.0, 1.0);
        const double nu = ts::uniform(-1.0, 1.0);
        PhaseFunction phase{alpha, nu};
        REQUIRE(std::abs(phase.value(k) - (omega(k, alpha).omega + k * nu)) < 1e-14);
    }
}

TEST_CASE("predicted peak positions") {
    REQUIRE(std::abs(predicted_peak(1.0, 100) - 70.710678118654755) < 1e-12);
    REQUIRE(std::abs(predicted_peak(std::cos(0.8), 100) - 49.26460386775456) < 1e-12);
    REQUIRE(predicted_peak(0.0, 12345) == 0.0);
}

TEST_CASE("peak tracking ties break toward the leading edge") {
    PeakTrace either = track_peaks(ShiftKind::FlipFlop, {}, 1, Side::Either);
    REQUIRE(either.entries.size() == 1);
    REQUIRE(either.entries[0].n_peak == 1);
    REQUIRE(std::abs(either.entries[0].p_peak - 0.5) < 1e-15);

    PeakTrace left = track_peaks(ShiftKind::FlipFlop, {}, 1, Side::Left);
    REQUIRE(left.entries[0].n_peak == -1);
}

TEST_CASE("late trace entries ride the ballistic peak") {
    PeakTrace free_trace = track_peaks(ShiftKind::FlipFlop, {}, 100, Side::Right);
    const PeakEntry& last = free_trace.entries.back();
    REQUIRE(last.t == 100);
    REQUIRE(std::abs(last.n_peak / 100.0 - 0.707) < 0.04);

    PeakTrace barrier_trace = track_peaks(ShiftKind::FlipFlop, BarrierParams(0.8), 100,
                                          Side::Right);
    REQUIRE(std::abs(barrier_trace.entries.back().n_peak / 100.0 - 0.493) < 0.04);
}

TEST_CASE("slope regression recovers a synthetic line") {
    PeakTrace trace;
    for (int t = 1; t <= 300; ++t) {
        trace.entries.push_back({t, static_cast<int>(std::lround(0.5 * t)), 0.1});
    }
    SlopeFit fit = fit_slope(trace, 50);
    REQUIRE(std::abs(fit.slope - 0.5) < 0.005);
    REQUIRE(fit.t_min == 50);
    REQUIRE(fit.t_max == 300);
    REQUIRE(fit.residual_rms < 0.5);
}

TEST_CASE("slope regression needs enough points past t_min") {
    PeakTrace trace = track_peaks(ShiftKind::FlipFlop, {}, 20, Side::Right);
    REQUIRE_THROWS_AS(fit_slope(trace, 50), InsufficientData);
    REQUIRE_THROWS_AS(fit_slope(trace, 12), InsufficientData);
    REQUIRE_NOTHROW(fit_slope(trace, 11));
}

TEST_CASE("fitted slopes sit at alpha/sqrt2 for free and barrier walks") {
    SlopeFit free_fit = fit_slope(track_peaks(ShiftKind::FlipFlop, {}, 500), 50);
    REQUIRE(std::abs(free_fit.slope - 1.0 / kSqrt2) < 0.01);

    SlopeFit barrier_fit = fit_slope(track_peaks(ShiftKind::FlipFlop, BarrierParams(0.8), 500),
                                     50);
    REQUIRE(std::abs(barrier_fit.slope - std::cos(0.8) / kSqrt2) < 0.01);
}

TEST_CASE("alpha estimation inverts the speed relation") {
    BarrierParams free_like = estimate_alpha(0.707);
    REQUIRE(std::abs(free_like.alpha() - 1.0) < 0.01);
    REQUIRE(std::abs(free_like.phi()) < 0.15);

    BarrierParams barrier = estimate_alpha(0.493);
    REQUIRE(std::abs(barrier.alpha() - std::cos(0.8)) < 0.02);

    BarrierParams halted = estimate_alpha(0.0);
    REQUIRE(std::abs(halted.alpha()) < 1e-15);
    REQUIRE(std::abs(halted.beta() - cplx(0.0, 1.0)) < 1e-15);

    REQUIRE_THROWS_AS(estimate_alpha(1.0 / kSqrt2 + 0.03), SlopeOutOfRange);
    REQUIRE_THROWS_AS(estimate_alpha(-0.05), SlopeOutOfRange);
    // slightly super-ballistic slopes clamp to alpha = 1
    REQUIRE(estimate_alpha(1.0 / kSqrt2 + 0.01).alpha() == 1.0);
}

TEST_CASE("alpha round-trips through trace, regression, and estimation") {
    for (double phi : {0.2, 0.4, 0.8, 1.2}) {
        PeakTrace trace = track_peaks(ShiftKind::FlipFlop, BarrierParams(phi), 500, Side::Right);
        SlopeFit fit = fit_slope(trace, 50);
        BarrierParams est = estimate_alpha(fit.slope);
        REQUIRE(std::abs(est.alpha() - std::cos(phi)) < 0.02);
    }
}

TEST_CASE("stronger barriers never speed the walk up") {
    double prev = 2.0;
    for (double phi : {0.0, 0.2, 0.4, 0.6, 0.8, 1.0, 1.2, 1.4}) {
        SlopeFit fit = fit_slope(track_peaks(ShiftKind::FlipFlop, BarrierParams(phi), 500), 50);
        REQUIRE(fit.slope <= prev);
        prev = fit.slope;
    }
}

TEST_CASE("peak entries stay inside the light cone with positive probability") {
    PeakTrace trace = track_peaks(ShiftKind::FlipFlop, BarrierParams(0.6), 80, Side::Either);
    for (const PeakEntry& e : trace.entries) {
        REQUIRE(std::abs(e.n_peak) <= e.t);
        REQUIRE(e.p_peak > 0.0);
        REQUIRE(e.p_peak <= 1.0);
    }
}
