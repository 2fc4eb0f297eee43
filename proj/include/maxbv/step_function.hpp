#pragma once

// Piecewise-constant functions with constant tails.
//
// A StepFunction is described by k >= 1 strictly increasing breakpoints and
// k + 1 "levels": the left tail, the k - 1 piece values, and the right tail.
// Values at breakpoints are never stored; they are derived from the one-sided
// limits by a normalization mode.

#include <optional>
#include <span>
#include <vector>

#include "maxbv/rational.hpp"

namespace maxbv {

enum class Normalization {
    Alpha,   // ((1+a) limsup + (1-a) liminf) / 2
    One,     // limsup
    RawMax,  // max of the one-sided limits
};

struct OneSidedLimits {
    Rational left;
    Rational right;
    const Rational& upper() const { return max(left, right); }
    const Rational& lower() const { return min(left, right); }
};

class StepFunction {
public:
    StepFunction(std::vector<Rational> breakpoints, std::vector<Rational> piece_values,
                 Rational left_tail = 0, Rational right_tail = 0);

    static StepFunction constant(Rational c);
    // c on (lo, hi), zero elsewhere.
    static StepFunction indicator(Rational lo, Rational hi, Rational c = 1);

    std::span<const Rational> breakpoints() const { return breakpoints_; }
    std::span<const Rational> piece_values() const { return {levels_.data() + 1, levels_.size() - 2}; }
    // Left tail, piece values, right tail: size() + 1 entries.
    std::span<const Rational> levels() const { return levels_; }
    const Rational& left_tail() const { return levels_.front(); }
    const Rational& right_tail() const { return levels_.back(); }
    std::size_t size() const { return breakpoints_.size(); }

    // Index into levels() of the open piece containing x, or nullopt when x
    // is a breakpoint.
    std::optional<std::size_t> level_index(const Rational& x) const;
    // Index of the breakpoint equal to x, if any.
    std::optional<std::size_t> breakpoint_index(const Rational& x) const;

    // Signed integral from 0 to x.
    Rational antiderivative_at(const Rational& x) const;
    // Signed integral from breakpoint 0 to breakpoint i (precomputed).
    const Rational& cumulative_at_breakpoint(std::size_t i) const { return cumulative_[i]; }
    // Signed integral from breakpoint 0 to x.
    Rational cumulative_at(const Rational& x) const;
    // Mean value on [a, b]; throws std::invalid_argument unless a < b.
    Rational average(const Rational& a, const Rational& b) const;

    OneSidedLimits one_sided_limits(const Rational& x) const;
    // For Normalization::Alpha, alpha must be given; alpha > 1 uses the alpha = 1 value.
    Rational normalized_value(const Rational& x, Normalization mode,
                              const std::optional<Rational>& alpha = std::nullopt) const;

    StepFunction absolute_value() const;
    // Merges equal neighbouring levels; idempotent.
    StepFunction canonicalize() const;
    // Sum of jump magnitudes.
    Rational total_variation() const;
    ExtendedRational l1_norm() const;
    // |{x : f(x) > lambda}|; lambda must be positive.
    ExtendedRational superlevel_measure(const Rational& lambda) const;

    bool is_nonnegative() const;
    bool is_constant() const;
    // Non-decreasing then non-increasing with equal tails.
    bool is_single_peak() const;
    Rational max_level() const;

    // x -> f(-x)
    StepFunction reflect() const;
    // x -> c f(x)
    StepFunction scale_values(const Rational& c) const;
    // x -> f(x / s), s > 0
    StepFunction dilate(const Rational& s) const;

    friend bool operator==(const StepFunction&, const StepFunction&) = default;

private:
    std::vector<Rational> breakpoints_;
    std::vector<Rational> levels_;
    std::vector<Rational> cumulative_;
    Rational origin_offset_;  // cumulative_at(0)
};

}  // namespace maxbv
