// classical.hpp -- exact classical random-walk baseline.
#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {

// Symmetric binomial distribution of a t-step fair walk from the origin:
// P(n) = C(t, (t+n)/2) / 2^t for n+t even, zero otherwise. Mean 0,
// variance t, spread sqrt(t).
struct ClassicalDistribution {
    int t;
    std::map<int, double> prob;
};

inline ClassicalDistribution classical_distribution(int t) {
    if (t < 0) throw std::invalid_argument("step count must be >= 0");
    ClassicalDistribution dist{t, {}};
    // Seed the central term through log-gamma, then walk outward by the
    // exact ratio C(t,j+1)/C(t,j) = (t-j)/(j+1); this stays finite for
    // large t where the binomial coefficients themselves overflow.
    const int jc = t / 2;
    const double log_center = std::lgamma(t + 1.0) - std::lgamma(jc + 1.0) -
                              std::lgamma(t - jc + 1.0) - t * std::log(2.0);
    std::vector<double> p(static_cast<std::size_t>(t) + 1, 0.0);
    p[static_cast<std::size_t>(jc)] = std::exp(log_center);
    for (int j = jc; j < t; ++j) {
        p[static_cast<std::size_t>(j) + 1] =
            p[static_cast<std::size_t>(j)] * static_cast<double>(t - j) / (j + 1.0);
    }
    for (int j = jc; j > 0; --j) {
        p[static_cast<std::size_t>(j) - 1] =
            p[static_cast<std::size_t>(j)] * static_cast<double>(j) / (t - j + 1.0);
    }
    // The log-gamma seed is biased by about an ulp of lgamma(t+1), which is
    // a common factor of every term; dividing by the compensated total
    // removes it.
    double total = 0.0, carry = 0.0;
    for (double v : p) {
        const double y = v - carry;
        const double s = total + y;
        carry = (s - total) - y;
        total = s;
    }
    for (int j = 0; j <= t; ++j) {
        dist.prob[2 * j - t] = p[static_cast<std::size_t>(j)] / total;
    }
    return dist;
}

// Standard deviation sqrt(sum n^2 P - (sum n P)^2) of a distribution that
// sums to 1 (within 1e-6).
inline double spread(const std::map<int, double>& dist) {
    double total = 0.0, mean = 0.0, second = 0.0;
    for (const auto& [n, p] : dist) {
        total += p;
        mean += n * p;
        second += static_cast<double>(n) * n * p;
    }
    if (std::abs(total - 1.0) > 1e-6) {
        throw NotNormalized("distribution sums to " + std::to_string(total) + ", expected 1");
    }
    return std::sqrt(second - mean * mean);
}

}  // namespace qwalk
