#pragma once

#include <span>
#include <vector>

#include "maxbv/rational.hpp"

namespace maxbv {

// Continuous piecewise-linear function through (breakpoints[i], values[i]),
// constant beyond the first and last node. Used as the truncation radius N.
class PiecewiseLinearFunction {
public:
    PiecewiseLinearFunction(std::vector<Rational> breakpoints, std::vector<Rational> values);

    static PiecewiseLinearFunction constant(Rational c);
    // Same as the constructor, but rejects negative values (radius role).
    static PiecewiseLinearFunction truncation_radius(std::vector<Rational> breakpoints,
                                                     std::vector<Rational> values);

    std::span<const Rational> breakpoints() const { return breakpoints_; }
    std::span<const Rational> values() const { return values_; }

    Rational operator()(const Rational& x) const;
    // Largest |slope| over the segments; 0 with a single node.
    Rational lipschitz_constant() const;
    Rational min_value() const;
    Rational max_value() const;

    friend bool operator==(const PiecewiseLinearFunction&, const PiecewiseLinearFunction&) = default;

private:
    std::vector<Rational> breakpoints_;
    std::vector<Rational> values_;
};

inline Rational plf_eval(const PiecewiseLinearFunction& n, const Rational& x) { return n(x); }

}  // namespace maxbv
