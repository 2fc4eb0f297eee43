#include "maxbv/constructions.hpp"

#include <stdexcept>

namespace maxbv {

namespace {

void require_beta(const Rational& beta) {
    if (!(beta > Rational(1, 2))) throw std::invalid_argument("beta must exceed 1/2");
}

}  // namespace

StepFunction make_spike_pair(long long n) {
    if (n < 2) throw std::invalid_argument("make_spike_pair: need n >= 2");
    const Rational w(1, n);
    // The two spikes touch.
    if (n == 2) return StepFunction({Rational(0), Rational(1)}, {Rational(2)});
    return StepFunction({Rational(0), w, 1 - w, Rational(1)}, {Rational(n), Rational(0), Rational(n)});
}

SpikeProfile spike_profile(const Rational& alpha, long long n) {
    const MaximalOperator op(make_spike_pair(n), Cone{alpha});
    return {n, op(Rational(1, 3)), op(Rational(1, 2)), op(Rational(2, 3))};
}

std::optional<SpikeProfile> find_spike_counterexample(const Rational& alpha, std::span<const long long> candidates) {
    for (const long long n : candidates) {
        SpikeProfile p = spike_profile(alpha, n);
        if (p.local_max()) return p;
    }
    return std::nullopt;
}

Rational divergence_peak(const Rational& beta, int k) {
    require_beta(beta);
    if (k < 0) throw std::invalid_argument("divergence_peak: need k >= 0");
    if (k == 0) return Rational(0);
    return Rational(k) / (beta - Rational(1, 2)) + Rational(k + 1) / (2 * beta + 1);
}

PiecewiseLinearFunction make_divergence_N(const Rational& beta, int bumps) {
    require_beta(beta);
    if (bumps < 1) throw std::invalid_argument("make_divergence_N: need at least one bump");
    const Rational rise = 1 / (beta - Rational(1, 2));
    const Rational fall = 1 / (2 * beta + 1);
    std::vector<Rational> xs{Rational(0), 2 * fall};
    std::vector<Rational> ns{Rational(1), fall};
    for (int k = 1; k <= bumps; ++k) {
        const Rational peak = xs.back() + rise;
        const Rational trough = peak + fall;
        xs.push_back(peak);
        ns.push_back((peak + 1) / 2);
        xs.push_back(trough);
        ns.push_back(trough / 2);
    }
    return PiecewiseLinearFunction::truncation_radius(std::move(xs), std::move(ns));
}

std::vector<DivergenceRow> divergence_certificate(const Rational& beta, int bumps) {
    const PiecewiseLinearFunction radius = make_divergence_N(beta, bumps);
    const MaximalOperator op(StepFunction::indicator(-1, 0), LipschitzCone{Rational(1), radius});
    const auto nodes = radius.breakpoints();
    std::vector<DivergenceRow> rows;
    Rational sum;
    // Node 0 is the origin and node 1 is x_0; bump K contributes nodes 2K, 2K + 1.
    for (int k = 0; k <= bumps; ++k) {
        const Rational& peak = nodes[static_cast<std::size_t>(2 * k)];
        const Rational& trough = nodes[static_cast<std::size_t>(2 * k + 1)];
        DivergenceRow row{k, peak, op(peak), trough, op(trough), {}};
        sum += row.value;
        row.partial_sum = sum;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace maxbv
