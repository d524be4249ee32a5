// ctqw.hpp -- continuous-time walk on small regular graphs with barriers.
//
// The walk evolves by exp(-iHt) with H = -gamma A. Barriers that hinder
// jumping by a leakage epsilon replace the adjacency with
// A' = k eps I + (1-eps) A on a k-regular graph. The identity term is kept
// in the Hamiltonian here, so the claim that it only contributes the global
// phase e^{i gamma k eps t} is something the evolution demonstrates rather
// than assumes: the barrier walk at time t matches the barrier-free walk at
// the rescaled time t' = (1-eps) t up to exactly that phase.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "qwalk/barrier.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {

// Undirected k-regular graph as a dense 0/1 adjacency matrix.
struct Graph {
    Eigen::MatrixXd adjacency;
    int degree;

    int vertices() const { return static_cast<int>(adjacency.rows()); }

    static Graph cycle(int v) {
        if (v < 3) throw std::invalid_argument("cycle graph needs >= 3 vertices");
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(v, v);
        for (int i = 0; i < v; ++i) {
            a(i, (i + 1) % v) = 1.0;
            a((i + 1) % v, i) = 1.0;
        }
        return {a, 2};
    }

    static Graph complete(int v) {
        if (v < 2) throw std::invalid_argument("complete graph needs >= 2 vertices");
        Eigen::MatrixXd a = Eigen::MatrixXd::Ones(v, v) - Eigen::MatrixXd::Identity(v, v);
        return {a, v - 1};
    }
};

struct CtqwConfig {
    Graph graph;
    double gamma;    // jumping rate, amplitude per unit time
    double epsilon;  // barrier leakage, in [0, 1)

    void validate() const {
        if (!(gamma > 0.0)) throw std::invalid_argument("jumping rate gamma must be > 0");
        if (!(epsilon >= 0.0 && epsilon < 1.0)) {
            throw std::invalid_argument("barrier leakage epsilon must lie in [0, 1)");
        }
    }
};

struct CtqwState {
    Eigen::VectorXcd amplitudes;
    double time = 0.0;

    int vertices() const { return static_cast<int>(amplitudes.size()); }
    double norm() const { return amplitudes.norm(); }

    static CtqwState localized(int vertices, int at = 0) {
        CtqwState s;
        s.amplitudes = Eigen::VectorXcd::Zero(vertices);
        s.amplitudes(at) = 1.0;
        return s;
    }
};

// A' = k eps I + (1-eps) A. Row sums stay k.
inline Eigen::MatrixXd barrier_adjacency(const CtqwConfig& cfg) {
    cfg.validate();
    const int v = cfg.graph.vertices();
    return cfg.graph.degree * cfg.epsilon * Eigen::MatrixXd::Identity(v, v) +
           (1.0 - cfg.epsilon) * cfg.graph.adjacency;
}

// exp(-iHt) psi with H = -gamma A (or -gamma A' with barriers), through the
// spectral decomposition of the real symmetric Hamiltonian. Exact to
// rounding; no integrator step error.
inline CtqwState ctqw_evolve(const CtqwConfig& cfg, const CtqwState& initial, double t,
                             bool use_barriers) {
    cfg.validate();
    if (initial.vertices() != cfg.graph.vertices()) {
        throw DimensionMismatch("state has " + std::to_string(initial.vertices()) +
                                " amplitudes for a graph on " +
                                std::to_string(cfg.graph.vertices()) + " vertices");
    }
    const Eigen::MatrixXd h =
        -cfg.gamma * (use_barriers ? barrier_adjacency(cfg) : cfg.graph.adjacency);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
    const Eigen::VectorXd& vals = eig.eigenvalues();
    const Eigen::MatrixXd& vecs = eig.eigenvectors();

    Eigen::VectorXcd phases(vals.size());
    for (int i = 0; i < vals.size(); ++i) {
        phases(i) = std::polar(1.0, -vals(i) * t);
    }
    CtqwState out;
    out.amplitudes =
        vecs.cast<cplx>() * phases.asDiagonal() * vecs.transpose().cast<cplx>() *
        initial.amplitudes;
    out.time = initial.time + t;
    return out;
}

// Phase factor that best aligns b to a, read off the largest-|b| component.
inline cplx extract_global_phase(const CtqwState& a, const CtqwState& b) {
    if (a.vertices() != b.vertices()) {
        throw DimensionMismatch("states live on different vertex counts");
    }
    int m = 0;
    for (int i = 1; i < b.vertices(); ++i) {
        if (std::abs(b.amplitudes(i)) > std::abs(b.amplitudes(m))) m = i;
    }
    const cplx ratio = a.amplitudes(m) / b.amplitudes(m);
    return ratio / std::abs(ratio);
}

// max_i |a_i - e^{i theta} b_i| with theta chosen by extract_global_phase.
// Zero (to rounding) iff a and b differ by a pure global phase.
inline double global_phase_distance(const CtqwState& a, const CtqwState& b) {
    const cplx phase = extract_global_phase(a, b);
    double d = 0.0;
    for (int i = 0; i < a.vertices(); ++i) {
        d = std::max(d, std::abs(a.amplitudes(i) - phase * b.amplitudes(i)));
    }
    return d;
}

}  // namespace qwalk
