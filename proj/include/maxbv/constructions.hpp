#pragma once

// Explicit functions on which the maximal operators misbehave or are sharp.

#include <optional>
#include <span>
#include <vector>

#include "maxbv/maximal.hpp"

namespace maxbv {

// n (chi_[0, 1/n] + chi_[1 - 1/n, 1]); n >= 2. At n = 2 the spikes merge
// into 2 chi_[0, 1].
StepFunction make_spike_pair(long long n);

struct SpikeProfile {
    long long n;
    Rational at_third;        // M^alpha f_n(1/3)
    Rational at_half;         // M^alpha f_n(1/2)
    Rational at_two_thirds;   // M^alpha f_n(2/3)
    // f_n vanishes at all three points, so a strict interior maximum of
    // M^alpha f_n over [1/3, 2/3] also sits above the attached values.
    bool local_max() const {
        return at_third < at_half && at_half > at_two_thirds && at_third.sign() > 0 && at_two_thirds.sign() > 0;
    }
};

SpikeProfile spike_profile(const Rational& alpha, long long n);
// First n in `candidates` whose profile has the interior local maximum.
std::optional<SpikeProfile> find_spike_counterexample(const Rational& alpha,
                                                      std::span<const long long> candidates);

// Truncation radius with Lipschitz constant beta > 1/2: nodes (0, 1),
// (x_0, x_0 / 2), then (x'_K, (x'_K + 1) / 2), (x_K, x_K / 2) for K = 1..bumps,
// where x_0 = 2 / (2 beta + 1), x'_K = x_{K-1} + 1 / (beta - 1/2) and
// x_K = x'_K + 1 / (2 beta + 1).
PiecewiseLinearFunction make_divergence_N(const Rational& beta, int bumps);

struct DivergenceRow {
    int k;
    Rational x_prime;     // x'_K, with x'_0 = 0
    Rational value;       // M^1_N chi_(-1,0) (x'_K)
    Rational x;           // x_K
    Rational zero_value;  // M^1_N chi_(-1,0) (x_K)
    Rational partial_sum; // S(K) = sum_{j <= K} 1 / (x'_j + 1)
};

// Evaluates M^1_N chi_(-1,0) at both points of every bump; the partial sums
// bound the variation of M^1_N chi_(-1,0) from below.
std::vector<DivergenceRow> divergence_certificate(const Rational& beta, int bumps);

// x'_K in closed form: K / (beta - 1/2) + (K + 1) / (2 beta + 1) for K >= 1, and 0 for K = 0.
Rational divergence_peak(const Rational& beta, int k);

}  // namespace maxbv
