#include "maxbv/piecewise_linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxbv {

PiecewiseLinearFunction::PiecewiseLinearFunction(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.empty()) throw std::invalid_argument("piecewise linear: need at least one node");
    if (breakpoints_.size() != values_.size()) {
        throw std::invalid_argument("piecewise linear: breakpoints and values differ in length");
    }
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i - 1] < breakpoints_[i])) {
            throw std::invalid_argument("piecewise linear: breakpoints must be strictly increasing");
        }
    }
}

PiecewiseLinearFunction PiecewiseLinearFunction::constant(Rational c) {
    return PiecewiseLinearFunction({Rational(0)}, {std::move(c)});
}

PiecewiseLinearFunction PiecewiseLinearFunction::truncation_radius(std::vector<Rational> breakpoints,
                                                                   std::vector<Rational> values) {
    PiecewiseLinearFunction n(std::move(breakpoints), std::move(values));
    if (n.min_value().sign() < 0) throw std::invalid_argument("truncation radius must be nonnegative");
    return n;
}

Rational PiecewiseLinearFunction::operator()(const Rational& x) const {
    if (x <= breakpoints_.front()) return values_.front();
    if (x >= breakpoints_.back()) return values_.back();
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    const auto j = static_cast<std::size_t>(it - breakpoints_.begin());
    const Rational& x0 = breakpoints_[j - 1];
    const Rational& x1 = breakpoints_[j];
    return values_[j - 1] + (values_[j] - values_[j - 1]) * (x - x0) / (x1 - x0);
}

Rational PiecewiseLinearFunction::lipschitz_constant() const {
    Rational best;
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
        best = max(best, abs((values_[i] - values_[i - 1]) / (breakpoints_[i] - breakpoints_[i - 1])));
    }
    return best;
}

Rational PiecewiseLinearFunction::min_value() const { return *std::min_element(values_.begin(), values_.end()); }
Rational PiecewiseLinearFunction::max_value() const { return *std::max_element(values_.begin(), values_.end()); }

}  // namespace maxbv
