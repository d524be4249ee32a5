// momentum.hpp -- closed-form momentum-space solution of the barrier walk.
//
// In momentum space one step acts as the 2x2 kernel
//
//   M_k = (1/sqrt2) [ a e^{ik} + b   -a e^{ik} + b ]
//                   [ a e^{-ik} + b   a e^{-ik} - b ],   a = cos(phi), b = i sin(phi),
//
// with eigenvalues e^{+-i w_k} where cos w_k = a cos(k)/sqrt2 and
// sin w_k = sqrt(2 - a^2 cos^2 k)/sqrt2 >= 0. Position amplitudes come back
// through the inverse Fourier transform, discretized by a uniform midpoint
// rule over [-pi, pi] (spectrally accurate for periodic integrands, and its
// nodes avoid k = +-pi/2 where the eigenvector denominator a - b e^{-ik}
// can vanish).
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "qwalk/barrier.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// Eigenvalue phase of the kernel at momentum k.
struct DispersionPoint {
    double k;
    double omega;      // in [0, pi], principal branch with sin >= 0
    double cos_omega;  // = alpha cos(k) / sqrt2
    double sin_omega;  // = sqrt(2 - alpha^2 cos^2 k) / sqrt2
};

inline DispersionPoint omega(double k, double alpha) {
    const double c = alpha * std::cos(k) / kSqrt2;
    const double s = std::sqrt(2.0 - alpha * alpha * std::cos(k) * std::cos(k)) / kSqrt2;
    return {k, std::atan2(s, c), c, s};
}

// Row-major complex 2x2 matrix, just enough for the kernel algebra.
struct Mat2 {
    cplx m00, m01, m10, m11;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Mat2 adjoint() const {
        return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
    }
};

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
            x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
}

inline CoinState operator*(const Mat2& m, const CoinState& v) {
    return {m.m00 * v.left + m.m01 * v.right, m.m10 * v.left + m.m11 * v.right};
}

// |a><b| as a matrix.
inline Mat2 outer(const CoinState& a, const CoinState& b) {
    return {a.left * std::conj(b.left), a.left * std::conj(b.right),
            a.right * std::conj(b.left), a.right * std::conj(b.right)};
}

// The kernel at one momentum together with its eigensystem.
struct MomentumKernel {
    double k;
    Mat2 matrix;
    cplx lambda_plus;   // e^{+i w_k}
    cplx lambda_minus;  // e^{-i w_k}
    CoinState eigvec_plus;
    CoinState eigvec_minus;
    DispersionPoint dispersion;
};

namespace detail {

// Closed-form eigenvector (1, v) with normalization n2 = 1/|(1,v)|^2, for
// the +/- eigenvalue branch. With a real and b pure imaginary both the
// numerator and denominator of n2 are real.
struct EigvecParts {
    cplx v;
    double n2;
};

inline EigvecParts eigvec_parts(double k, double a, double s, const DispersionPoint& d,
                                bool plus_branch) {
    const cplx b{0.0, s};
    const cplx e_mik = std::polar(1.0, -k);
    const cplx den = a - b * e_mik;
    if (std::abs(den) < 1e-12) {
        throw DegenerateEigenvectors(
            "eigenvector denominator alpha - beta e^{-ik} vanishes (phi = pi/4, k = +-pi/2)");
    }
    const double sgn = plus_branch ? 1.0 : -1.0;
    const cplx v = (a + b * e_mik - kSqrt2 * std::polar(1.0, sgn * d.omega - k)) / den;
    const double num = 1.0 - 2.0 * a * s * std::sin(k);
    const double dnm =
        4.0 - 2.0 * kSqrt2 * a * std::cos(sgn * d.omega - k) - sgn * 2.0 * kSqrt2 * s * d.sin_omega;
    return {v, num / dnm};
}

}  // namespace detail

inline MomentumKernel kernel(double k, const BarrierParams& barriers) {
    const double a = barriers.alpha();
    const double s = std::sin(barriers.phi());
    const cplx b = barriers.beta();
    const cplx e_ik = std::polar(1.0, k);
    const cplx e_mik = std::polar(1.0, -k);

    MomentumKernel out;
    out.k = k;
    out.matrix = {(a * e_ik + b) / kSqrt2, (-a * e_ik + b) / kSqrt2, (a * e_mik + b) / kSqrt2,
                  (a * e_mik - b) / kSqrt2};
    out.dispersion = omega(k, a);
    out.lambda_plus = std::polar(1.0, out.dispersion.omega);
    out.lambda_minus = std::polar(1.0, -out.dispersion.omega);

    const auto p = detail::eigvec_parts(k, a, s, out.dispersion, true);
    const auto m = detail::eigvec_parts(k, a, s, out.dispersion, false);
    const double np = std::sqrt(p.n2);
    const double nm = std::sqrt(m.n2);
    out.eigvec_plus = {cplx(np, 0.0), np * p.v};
    out.eigvec_minus = {cplx(nm, 0.0), nm * m.v};
    return out;
}

// (M_k)^t through the eigendecomposition: lambda+^t |+><+| + lambda-^t |-><-|.
inline Mat2 kernel_power(const MomentumKernel& ker, int t) {
    const cplx lp = std::polar(1.0, ker.dispersion.omega * t);
    const cplx lm = std::conj(lp);
    const Mat2 pp = outer(ker.eigvec_plus, ker.eigvec_plus);
    const Mat2 pm = outer(ker.eigvec_minus, ker.eigvec_minus);
    return {lp * pp.m00 + lm * pm.m00, lp * pp.m01 + lm * pm.m01, lp * pp.m10 + lm * pm.m10,
            lp * pp.m11 + lm * pm.m11};
}

// Momentum wavefunction (M_k)^t (1,0)^T of the initially left-moving walker,
// evaluated as the two-term eigenprojection. Unit norm for all (k, t).
inline CoinState momentum_wavefunction(double k, int t, const BarrierParams& barriers) {
    if (t < 0) throw std::invalid_argument("time must be >= 0");
    const double a = barriers.alpha();
    const double s = std::sin(barriers.phi());
    const DispersionPoint d = omega(k, a);
    const auto p = detail::eigvec_parts(k, a, s, d, true);
    const auto m = detail::eigvec_parts(k, a, s, d, false);
    const cplx ep = std::polar(1.0, d.omega * t);   // lambda+^t
    const cplx em = std::conj(ep);                  // lambda-^t
    // <psi+-|(1,0)> = N+-, so each branch contributes lambda^t N^2 (1, v).
    return {ep * p.n2 + em * m.n2, ep * p.n2 * p.v + em * m.n2 * m.v};
}

// Uniform midpoint rule on [-pi, pi]. Node count must be a multiple of 4 so
// that no node lands on k = +-pi/2 exactly.
class QuadratureSpec {
  public:
    explicit QuadratureSpec(int nodes) : nodes_(nodes) {
        if (nodes < 4 || nodes % 4 != 0) {
            throw std::invalid_argument("quadrature node count must be a multiple of 4, >= 4");
        }
    }

    static QuadratureSpec default_for(int t) { return QuadratureSpec(std::max(1024, 16 * t)); }

    int nodes() const { return nodes_; }
    double node(int j) const { return -kPi + (2 * j + 1) * kPi / nodes_; }

  private:
    int nodes_;
};

namespace detail {

inline void require_regular_parameterization(const BarrierParams& barriers) {
    if (std::abs(barriers.phi() - kPi / 4) < 1e-9) {
        throw QuadratureNodeSingular(
            "phi within 1e-9 of pi/4: closed-form integrand factors are singular at "
            "k = +-pi/2; use the iterative simulation instead");
    }
}

// Per-node samples of the momentum wavefunction at fixed t.
inline std::vector<CoinState> momentum_samples(int t, const BarrierParams& barriers,
                                               const QuadratureSpec& quad) {
    std::vector<CoinState> out(static_cast<std::size_t>(quad.nodes()));
    for (int j = 0; j < quad.nodes(); ++j) {
        out[static_cast<std::size_t>(j)] = momentum_wavefunction(quad.node(j), t, barriers);
    }
    return out;
}

inline CoinState inverse_transform(const std::vector<CoinState>& samples,
                                   const QuadratureSpec& quad, int n) {
    cplx l{}, r{};
    for (int j = 0; j < quad.nodes(); ++j) {
        const cplx ph = std::polar(1.0, -quad.node(j) * n);
        l += samples[static_cast<std::size_t>(j)].left * ph;
        r += samples[static_cast<std::size_t>(j)].right * ph;
    }
    const double w = 1.0 / quad.nodes();
    return {w * l, w * r};
}

}  // namespace detail

// Position-space amplitudes psi(n,t) by quadrature of the momentum
// wavefunction against e^{-ikn}.
inline CoinState position_wavefunction(int n, int t, const BarrierParams& barriers,
                                       const QuadratureSpec& quad) {
    if (t < 0) throw std::invalid_argument("time must be >= 0");
    detail::require_regular_parameterization(barriers);
    std::vector<CoinState> samples = detail::momentum_samples(t, barriers, quad);
    return detail::inverse_transform(samples, quad, n);
}

// Same amplitudes through the substituted integral forms, in which both
// branches share the oscillation e^{-i(w_k t + k n)} and the +branch picks
// up a parity sign (-1)^{n+t}:
//
//   psi_L = int dk/2pi [ (-1)^{n+t} C1 + C2 ] e^{-i(w t + k n)}
//   psi_R = int dk/2pi [ (-1)^{n+t} C1 g1 + C2 g2 ] e^{-i(w t + k n)}
//
//   C1 = (1 + 2 a s sin k) / (4 - 2 sqrt2 a cos(w+k) - 2 sqrt2 s sin w)
//   C2 = (1 - 2 a s sin k) / (4 - 2 sqrt2 a cos(w+k) + 2 sqrt2 s sin w)
//   g1 = (a - b e^{-ik} - sqrt2 e^{-i(w+k)}) / (a + b e^{-ik})
//   g2 = (a + b e^{-ik} - sqrt2 e^{-i(w+k)}) / (a - b e^{-ik})
//
// Used to cross-check position_wavefunction; the two routes agree to
// rounding at equal node counts.
inline CoinState position_wavefunction_integral_form(int n, int t, const BarrierParams& barriers,
                                                     const QuadratureSpec& quad) {
    if (t < 0) throw std::invalid_argument("time must be >= 0");
    detail::require_regular_parameterization(barriers);
    const double a = barriers.alpha();
    const double s = std::sin(barriers.phi());
    const cplx b = barriers.beta();
    const double sign = ((n + t) % 2 == 0) ? 1.0 : -1.0;

    cplx l{}, r{};
    for (int j = 0; j < quad.nodes(); ++j) {
        const double k = quad.node(j);
        const DispersionPoint d = omega(k, a);
        const double c1 = (1.0 + 2.0 * a * s * std::sin(k)) /
                          (4.0 - 2.0 * kSqrt2 * a * std::cos(d.omega + k) -
                           2.0 * kSqrt2 * s * d.sin_omega);
        const double c2 = (1.0 - 2.0 * a * s * std::sin(k)) /
                          (4.0 - 2.0 * kSqrt2 * a * std::cos(d.omega + k) +
                           2.0 * kSqrt2 * s * d.sin_omega);
        const cplx e_mik = std::polar(1.0, -k);
        const cplx e_mwk = std::polar(1.0, -(d.omega + k));
        const cplx g1 = (a - b * e_mik - kSqrt2 * e_mwk) / (a + b * e_mik);
        const cplx g2 = (a + b * e_mik - kSqrt2 * e_mwk) / (a - b * e_mik);
        const cplx osc = std::polar(1.0, -(d.omega * t + k * n));
        l += (sign * c1 + c2) * osc;
        r += (sign * c1 * g1 + c2 * g2) * osc;
    }
    const double w = 1.0 / quad.nodes();
    return {w * l, w * r};
}

// P(n) = |psi_L(n,t)|^2 + |psi_R(n,t)|^2 for n in [-t, t], from a single
// pass of momentum samples. Sums to 1 up to quadrature error.
inline std::map<int, double> closed_form_distribution(int t, const BarrierParams& barriers,
                                                      const QuadratureSpec& quad) {
    if (t < 0) throw std::invalid_argument("time must be >= 0");
    detail::require_regular_parameterization(barriers);
    std::vector<CoinState> samples = detail::momentum_samples(t, barriers, quad);
    std::map<int, double> p;
    for (int n = -t; n <= t; ++n) {
        const CoinState c = detail::inverse_transform(samples, quad, n);
        p[n] = std::norm(c.left) + std::norm(c.right);
    }
    return p;
}

}  // namespace qwalk
