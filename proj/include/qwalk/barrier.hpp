// barrier.hpp -- tunneling-barrier parameters and walk enumerations.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qwalk {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt2 = 1.41421356237309504880;

// Shift operator flavor. FlipFlop reverses the coin on every hop and is
// Hermitian; Moving keeps the coin direction and is not, so the barrier
// form alpha*S + beta*I stops being unitary for it.
enum class ShiftKind { FlipFlop, Moving };

// Walker starting state at the origin.
enum class InitialState { LeftLocalized, Unbiased };

// Tunneling amplitudes for the barrier shift alpha*S + beta*I,
// parameterized by an angle phi in [0, pi/2]:
//
//   alpha = cos(phi)   (real, amplitude to hop)
//   beta  = i sin(phi) (pure imaginary, amplitude to stay put)
//
// This gives |alpha|^2 + |beta|^2 = 1 and alpha*conj(beta) + beta*conj(alpha)
// = 0 by construction, so the flip-flop barrier shift is unitary. phi = 0 is
// the barrier-free walk. Any complex (alpha, beta) pair obeying those two
// constraints reduces to this form up to a global phase.
class BarrierParams {
  public:
    BarrierParams() = default;

    explicit BarrierParams(double phi) : phi_(phi) {
        if (!(phi >= 0.0 && phi <= kPi / 2)) {
            throw std::invalid_argument("barrier angle phi must lie in [0, pi/2], got " +
                                        std::to_string(phi));
        }
    }

    static BarrierParams from_alpha(double alpha) {
        if (!(alpha >= 0.0 && alpha <= 1.0)) {
            throw std::invalid_argument("tunneling amplitude alpha must lie in [0, 1], got " +
                                        std::to_string(alpha));
        }
        return BarrierParams(std::acos(alpha));
    }

    double phi() const { return phi_; }
    double alpha() const { return std::cos(phi_); }
    cplx beta() const { return {0.0, std::sin(phi_)}; }

    bool barrier_free() const { return phi_ == 0.0; }

  private:
    double phi_ = 0.0;
};

}  // namespace qwalk
