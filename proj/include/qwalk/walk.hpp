// walk.hpp -- state-vector evolution of the coined walk on the 1D line.
//
// One step of the walk is U = (alpha*S + beta*I)(I (x) H): Hadamard coin
// first, then the barrier shift. The lattice window is sized once from a
// step budget and never grows; since the walk moves at most one site per
// step, truncation is exact (no absorbing or periodic boundary artifacts).
#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "qwalk/barrier.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {

// Two coin amplitudes at a single site.
struct CoinState {
    cplx left{0.0, 0.0};
    cplx right{0.0, 0.0};
};

// Two-component wavefunction over the window [-B-1, B+1] for step budget B.
// The extra guard site on each end lets exactly B+1 shifts run before any
// amplitude could leave the window.
class SpinorField {
  public:
    // All-zero field (for assembling custom states by hand).
    explicit SpinorField(int steps_budget)
        : budget_(checked_budget(steps_budget)),
          offset_(-(steps_budget + 1)),
          sites_(2 * static_cast<std::size_t>(steps_budget) + 3) {}

    int steps_budget() const { return budget_; }
    int min_position() const { return offset_; }
    int max_position() const { return offset_ + static_cast<int>(sites_.size()) - 1; }
    int time() const { return time_; }

    // False once a non-norm-preserving operation (moving shift with
    // barriers) has touched the field.
    bool norm_preserving() const { return norm_preserving_; }

    const CoinState& at(int n) const { return sites_[index(n)]; }
    CoinState& at(int n) { return sites_[index(n)]; }

    double norm_squared() const {
        double s = 0.0;
        for (const CoinState& c : sites_) s += std::norm(c.left) + std::norm(c.right);
        return s;
    }
    double norm() const { return std::sqrt(norm_squared()); }

    // Internal bookkeeping used by the evolution operations below.
    void set_time(int t) { time_ = t; }
    void mark_non_norm_preserving() { norm_preserving_ = false; }

  private:
    static int checked_budget(int b) {
        if (b < 0) throw std::invalid_argument("steps budget must be >= 0");
        return b;
    }

    std::size_t index(int n) const {
        int i = n - offset_;
        if (i < 0 || i >= static_cast<int>(sites_.size())) {
            throw BoundaryOverflow("position " + std::to_string(n) +
                                   " outside stored window [" + std::to_string(min_position()) +
                                   ", " + std::to_string(max_position()) + "]");
        }
        return static_cast<std::size_t>(i);
    }

    int budget_;
    int offset_;
    std::vector<CoinState> sites_;
    int time_ = 0;
    bool norm_preserving_ = true;
};

// Walker localized at the origin. LeftLocalized is (1, 0); Unbiased is
// (1, i)/sqrt(2), whose real and imaginary parts evolve independently
// under the barrier-free walk.
inline SpinorField new_field(int steps_budget, InitialState init) {
    SpinorField f(steps_budget);
    switch (init) {
        case InitialState::LeftLocalized:
            f.at(0) = {cplx(1.0, 0.0), cplx(0.0, 0.0)};
            break;
        case InitialState::Unbiased:
            f.at(0) = {cplx(1.0 / kSqrt2, 0.0), cplx(0.0, 1.0 / kSqrt2)};
            break;
    }
    return f;
}

// Hadamard coin at every site: (L, R) -> ((L+R)/sqrt2, (L-R)/sqrt2).
inline SpinorField apply_coin(const SpinorField& field) {
    SpinorField out = field;
    for (int n = out.min_position(); n <= out.max_position(); ++n) {
        CoinState& c = out.at(n);
        const cplx l = c.left, r = c.right;
        c.left = (l + r) / kSqrt2;
        c.right = (l - r) / kSqrt2;
    }
    return out;
}

// Barrier shift alpha*S + beta*I.
//
// FlipFlop: S|n,L> = |n-1,R>, S|n,R> = |n+1,L>; the hopped amplitude is
// scaled by alpha and flips coin, a beta-scaled copy stays put unchanged.
// Moving:  S|n,L> = |n-1,L>, S|n,R> = |n+1,R>; same barrier rule, but the
// result is not unitary for phi != 0, so the field is flagged instead of
// the operation being refused.
inline SpinorField apply_shift(const SpinorField& field, ShiftKind kind,
                               const BarrierParams& barriers = {}) {
    const CoinState& lo = field.at(field.min_position());
    const CoinState& hi = field.at(field.max_position());
    if (std::norm(lo.left) + std::norm(lo.right) != 0.0 ||
        std::norm(hi.left) + std::norm(hi.right) != 0.0) {
        throw BoundaryOverflow("shift would move amplitude past the stored window; "
                               "increase the steps budget");
    }

    const double a = barriers.alpha();
    const cplx b = barriers.beta();

    SpinorField out = field;
    for (int n = out.min_position(); n <= out.max_position(); ++n) {
        out.at(n) = {b * field.at(n).left, b * field.at(n).right};
    }
    for (int n = field.min_position() + 1; n <= field.max_position() - 1; ++n) {
        const CoinState& c = field.at(n);
        if (kind == ShiftKind::FlipFlop) {
            out.at(n - 1).right += a * c.left;
            out.at(n + 1).left += a * c.right;
        } else {
            out.at(n - 1).left += a * c.left;
            out.at(n + 1).right += a * c.right;
        }
    }
    if (kind == ShiftKind::Moving && !barriers.barrier_free()) out.mark_non_norm_preserving();
    return out;
}

// One walk step: coin, then shift. Equivalent to the transfer-matrix
// recurrence psi(n,t+1) = M+ psi(n-1,t) + M- psi(n+1,t) + M0 psi(n,t).
inline SpinorField step(const SpinorField& field, ShiftKind kind,
                        const BarrierParams& barriers = {}) {
    SpinorField out = apply_shift(apply_coin(field), kind, barriers);
    out.set_time(field.time() + 1);
    return out;
}

// t further steps. Fails up front if the window cannot hold the result.
inline SpinorField evolve(const SpinorField& field, ShiftKind kind, const BarrierParams& barriers,
                          int t) {
    if (t < 0) throw std::invalid_argument("step count must be >= 0");
    if (field.time() + t > field.steps_budget()) {
        throw BudgetExceeded("evolving to t = " + std::to_string(field.time() + t) +
                             " exceeds steps budget " + std::to_string(field.steps_budget()));
    }
    SpinorField out = field;
    for (int i = 0; i < t; ++i) out = step(out, kind, barriers);
    return out;
}

// P(n) = |psi_L(n)|^2 + |psi_R(n)|^2 over the light cone [-t, t].
inline std::map<int, double> probabilities(const SpinorField& field) {
    std::map<int, double> p;
    const int lo = std::max(field.min_position(), -field.time());
    const int hi = std::min(field.max_position(), field.time());
    for (int n = lo; n <= hi; ++n) {
        const CoinState& c = field.at(n);
        p[n] = std::norm(c.left) + std::norm(c.right);
    }
    return p;
}

}  // namespace qwalk
