// transport.hpp -- ballistic-peak tracking, slope regression, and barrier
// estimation from the observed walk speed.
//
// The probability peak of the barrier walk travels at alpha/sqrt2 sites per
// step: the phase w_k + k n/t of the inverse transform has first and second
// k-derivative both zero at k = pi/2 with n/t = -alpha/sqrt2 (and the mirror
// point), so a peak sits at n = +-alpha t/sqrt2. Measuring the peak speed
// therefore recovers alpha.
#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/barrier.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/momentum.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// phi(k) = w_k + k nu for a fixed velocity ratio nu = n/t.
struct PhaseFunction {
    double alpha;
    double nu;

    double value(double k) const { return omega(k, alpha).omega + k * nu; }
};

struct PhaseDerivatives {
    double first;
    double second;
};

// Closed-form k-derivatives of w_k + k nu:
//   d phi/dk   = alpha sin k / sqrt(2 - alpha^2 cos^2 k) + nu
//   d2 phi/dk2 = alpha cos k (2 - alpha^2) / (2 - alpha^2 cos^2 k)^{3/2}
inline PhaseDerivatives phase_derivatives(double k, double alpha, double nu) {
    const double c = std::cos(k);
    const double q = 2.0 - alpha * alpha * c * c;
    return {alpha * std::sin(k) / std::sqrt(q) + nu,
            alpha * c * (2.0 - alpha * alpha) / (q * std::sqrt(q))};
}

// Right-side peak position alpha t / sqrt2 (the left peak is its negation).
inline double predicted_peak(double alpha, int t) { return alpha * t / kSqrt2; }

enum class Side { Right, Left, Either };

struct PeakEntry {
    int t;
    int n_peak;
    double p_peak;
};

struct SlopeFit {
    double slope;
    double intercept;
    double residual_rms;
    int t_min;
    int t_max;
    std::size_t points;
};

struct PeakTrace {
    std::vector<PeakEntry> entries;
    std::optional<SlopeFit> fit;
};

namespace detail {

// Global argmax of the distribution restricted to one side. Among
// probabilities equal within 1e-12: largest n on the right, smallest on the
// left, largest |n| (then positive) for either.
inline PeakEntry find_peak(const SpinorField& field, Side side) {
    const int t = field.time();
    int best_n = 0;
    double best_p = -1.0;
    bool have = false;
    const int lo = (side == Side::Right) ? 0 : -t;
    const int hi = (side == Side::Left) ? 0 : t;
    for (int n = lo; n <= hi; ++n) {
        const CoinState& c = field.at(n);
        const double p = std::norm(c.left) + std::norm(c.right);
        if (!have) {
            best_n = n;
            best_p = p;
            have = true;
            continue;
        }
        if (p > best_p + 1e-12) {
            best_n = n;
            best_p = p;
        } else if (p > best_p - 1e-12) {
            bool take = false;
            switch (side) {
                case Side::Right: take = n > best_n; break;
                case Side::Left: take = n < best_n; break;
                case Side::Either:
                    take = std::abs(n) > std::abs(best_n) ||
                           (std::abs(n) == std::abs(best_n) && n > best_n);
                    break;
            }
            if (take) {
                best_n = n;
                best_p = std::max(best_p, p);
            }
        }
    }
    return {t, best_n, best_p};
}

}  // namespace detail

// Peak position for every t in 1..t_max of a walk started left-localized at
// the origin, from one incremental evolution.
inline PeakTrace track_peaks(ShiftKind kind, const BarrierParams& barriers, int t_max,
                             Side side = Side::Right) {
    if (t_max < 1) throw std::invalid_argument("t_max must be >= 1");
    PeakTrace trace;
    trace.entries.reserve(static_cast<std::size_t>(t_max));
    SpinorField field = new_field(t_max, InitialState::LeftLocalized);
    for (int t = 1; t <= t_max; ++t) {
        field = step(field, kind, barriers);
        trace.entries.push_back(detail::find_peak(field, side));
    }
    return trace;
}

// Ordinary least squares of n_peak against t over entries with t >= t_min,
// intercept free. Needs at least 10 entries in the window.
inline SlopeFit fit_slope(const PeakTrace& trace, int t_min) {
    std::vector<const PeakEntry*> window;
    for (const PeakEntry& e : trace.entries) {
        if (e.t >= t_min) window.push_back(&e);
    }
    if (window.size() < 10) {
        throw InsufficientData("slope regression needs >= 10 trace entries with t >= " +
                               std::to_string(t_min) + ", have " +
                               std::to_string(window.size()));
    }
    double mean_t = 0.0, mean_n = 0.0;
    for (const PeakEntry* e : window) {
        mean_t += e->t;
        mean_n += e->n_peak;
    }
    mean_t /= static_cast<double>(window.size());
    mean_n /= static_cast<double>(window.size());
    double sxx = 0.0, sxy = 0.0;
    for (const PeakEntry* e : window) {
        sxx += (e->t - mean_t) * (e->t - mean_t);
        sxy += (e->t - mean_t) * (e->n_peak - mean_n);
    }
    const double slope = sxy / sxx;
    const double intercept = mean_n - slope * mean_t;
    double ss = 0.0;
    int lo = window.front()->t, hi = window.front()->t;
    for (const PeakEntry* e : window) {
        const double r = e->n_peak - (intercept + slope * e->t);
        ss += r * r;
        lo = std::min(lo, e->t);
        hi = std::max(hi, e->t);
    }
    return {slope, intercept, std::sqrt(ss / static_cast<double>(window.size())), lo, hi,
            window.size()};
}

// Invert speed = alpha/sqrt2. Slopes a little above the barrier-free speed
// are clamped (lattice rounding); anything past that is super-ballistic and
// inconsistent with a barrier walk.
inline BarrierParams estimate_alpha(double slope) {
    const double limit = 1.0 / kSqrt2 + 0.02;
    if (slope < 0.0 || slope > limit) {
        throw SlopeOutOfRange("slope " + std::to_string(slope) +
                              " outside [0, 1/sqrt2 + 0.02]: not a barrier walk speed");
    }
    const double alpha = std::min(1.0, kSqrt2 * slope);
    return BarrierParams::from_alpha(alpha);
}

}  // namespace qwalk
