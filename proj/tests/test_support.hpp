#pragma once

// Shared helpers for the unit tests: terse rational literals, a small seeded
// generator, and a brute-force grid oracle for the maximal operators that
// integrates by direct piece overlap (independent of the engine's antiderivative).

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "maxbv/rational.hpp"
#include "maxbv/step_function.hpp"

namespace maxbv::testing {

inline Rational Q(const char* text) { return Rational::parse(text); }

inline StepFunction chi(const char* lo = "-1", const char* hi = "0") { return StepFunction::indicator(Q(lo), Q(hi)); }

class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : gen_(seed) {}
    // Uniform integer in [lo, hi].
    long long integer(long long lo, long long hi) {
        return lo + static_cast<long long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational rational(long long lo_num, long long hi_num, long long den) { return Rational(integer(lo_num, hi_num), den); }

    // Zero-tail step function with up to `max_pieces` pieces, values in [0, 4].
    StepFunction step_function(int max_pieces = 6) {
        const int pieces = static_cast<int>(integer(1, max_pieces));
        std::vector<Rational> bps;
        long long pos = integer(-16, 0);
        for (int i = 0; i <= pieces; ++i) {
            bps.emplace_back(pos, 8);
            pos += integer(1, 12);
        }
        std::vector<Rational> vals;
        for (int i = 0; i < pieces; ++i) vals.push_back(rational(0, 16, integer(1, 4)));
        return StepFunction(std::move(bps), std::move(vals));
    }

private:
    std::mt19937_64 gen_;
};

// Integral of f over [a, b] summed piece by piece.
inline Rational direct_integral(const StepFunction& f, const Rational& a, const Rational& b) {
    const auto bps = f.breakpoints();
    const auto lv = f.levels();
    Rational total;
    auto overlap = [&](const Rational& lo, const Rational& hi) {
        const Rational l = max(lo, a);
        const Rational h = min(hi, b);
        return h > l ? h - l : Rational(0);
    };
    // Tails are only integrated over the part of [a, b] beyond the breakpoints.
    if (a < bps.front()) total += lv.front() * (min(b, bps.front()) - a);
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) total += lv[i + 1] * overlap(bps[i], bps[i + 1]);
    if (b > bps.back()) total += lv.back() * (b - max(a, bps.back()));
    return total;
}

inline Rational direct_average(const StepFunction& f, const Rational& a, const Rational& b) {
    return direct_integral(f, a, b) / (b - a);
}

// Prefix sums of |f| built from scratch, for oracles that must not share the
// engine's antiderivative.
class OracleIntegral {
public:
    explicit OracleIntegral(const StepFunction& g) {
        const auto lv = g.levels();
        for (const auto& b : g.breakpoints()) bps_.push_back(b);
        for (const auto& v : lv) levels_.push_back(abs(v));
        prefix_.push_back(Rational(0));
        for (std::size_t i = 1; i < bps_.size(); ++i) prefix_.push_back(prefix_.back() + levels_[i] * (bps_[i] - bps_[i - 1]));
    }
    // Integral of |f| from the first breakpoint to s.
    Rational at(const Rational& s) const {
        if (s <= bps_.front()) return levels_.front() * (s - bps_.front());
        std::size_t lo = 0, hi = bps_.size() - 1;
        if (s >= bps_.back()) return prefix_.back() + levels_.back() * (s - bps_.back());
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            if (bps_[mid] <= s) lo = mid;
            else hi = mid;
        }
        return prefix_[lo] + levels_[lo + 1] * (s - bps_[lo]);
    }
    Rational average(const Rational& a, const Rational& b) const { return (at(b) - at(a)) / (b - a); }
    const std::vector<Rational>& breakpoints() const { return bps_; }

private:
    std::vector<Rational> bps_;
    std::vector<Rational> levels_;
    std::vector<Rational> prefix_;
};

// Sup of averages of |f| over [y - t, y + t], |x - y| <= alpha t, sampled on
// t = h, 2h, ... <= t_max (and t <= radius when given). For each sampled t the
// best y is exact: the average is piecewise linear in y with kinks at
// y = x_i +- t, so the maximum sits at a kink or an end of the y-range.
inline Rational oracle_cone_sup(const StepFunction& g, const Rational& alpha, const Rational& x, const Rational& h,
                                const Rational& t_max, const std::optional<Rational>& radius = std::nullopt) {
    const OracleIntegral f(g);
    Rational best;
    for (Rational t = h; t <= t_max && (!radius || t <= *radius); t += h) {
        const Rational lo = x - alpha * t;
        const Rational hi = x + alpha * t;
        auto probe = [&](const Rational& y) {
            if (y < lo || y > hi) return;
            best = max(best, f.average(y - t, y + t));
        };
        probe(lo);
        probe(hi);
        for (const auto& b : f.breakpoints()) {
            probe(b - t);
            probe(b + t);
        }
    }
    return best;
}

}  // namespace maxbv::testing
