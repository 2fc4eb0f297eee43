#include "maxbv/step_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxbv {

StepFunction::StepFunction(std::vector<Rational> breakpoints, std::vector<Rational> piece_values,
                           Rational left_tail, Rational right_tail)
    : breakpoints_(std::move(breakpoints)) {
    if (breakpoints_.empty()) throw std::invalid_argument("step function: need at least one breakpoint");
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i - 1] < breakpoints_[i])) {
            throw std::invalid_argument("step function: breakpoints must be strictly increasing");
        }
    }
    if (piece_values.size() + 1 != breakpoints_.size()) {
        throw std::invalid_argument("step function: values must have one entry fewer than breakpoints");
    }
    levels_.reserve(breakpoints_.size() + 1);
    levels_.push_back(std::move(left_tail));
    for (auto& v : piece_values) levels_.push_back(std::move(v));
    levels_.push_back(std::move(right_tail));

    cumulative_.resize(breakpoints_.size());
    cumulative_[0] = 0;
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
        cumulative_[i] = cumulative_[i - 1] + levels_[i] * (breakpoints_[i] - breakpoints_[i - 1]);
    }
    origin_offset_ = cumulative_at(Rational(0));
}

StepFunction StepFunction::constant(Rational c) { return StepFunction({Rational(0)}, {}, c, c); }

StepFunction StepFunction::indicator(Rational lo, Rational hi, Rational c) {
    return StepFunction({std::move(lo), std::move(hi)}, {std::move(c)});
}

std::optional<std::size_t> StepFunction::level_index(const Rational& x) const {
    const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
    if (it != breakpoints_.end() && *it == x) return std::nullopt;
    return static_cast<std::size_t>(it - breakpoints_.begin());
}

std::optional<std::size_t> StepFunction::breakpoint_index(const Rational& x) const {
    const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
    if (it != breakpoints_.end() && *it == x) return static_cast<std::size_t>(it - breakpoints_.begin());
    return std::nullopt;
}

Rational StepFunction::cumulative_at(const Rational& x) const {
    // Last breakpoint <= x, or the left tail when x precedes all of them.
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    if (it == breakpoints_.begin()) return levels_.front() * (x - breakpoints_.front());
    const auto i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
    return cumulative_[i] + levels_[i + 1] * (x - breakpoints_[i]);
}

Rational StepFunction::antiderivative_at(const Rational& x) const { return cumulative_at(x) - origin_offset_; }

Rational StepFunction::average(const Rational& a, const Rational& b) const {
    if (!(a < b)) throw std::invalid_argument("average: need a < b");
    return (cumulative_at(b) - cumulative_at(a)) / (b - a);
}

OneSidedLimits StepFunction::one_sided_limits(const Rational& x) const {
    const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
    const auto i = static_cast<std::size_t>(it - breakpoints_.begin());
    if (it != breakpoints_.end() && *it == x) return {levels_[i], levels_[i + 1]};
    return {levels_[i], levels_[i]};
}

Rational StepFunction::normalized_value(const Rational& x, Normalization mode,
                                        const std::optional<Rational>& alpha) const {
    const OneSidedLimits lim = one_sided_limits(x);
    const Rational& hi = lim.upper();
    const Rational& lo = lim.lower();
    switch (mode) {
        case Normalization::One:
        case Normalization::RawMax:
            return hi;
        case Normalization::Alpha: {
            if (!alpha) throw std::invalid_argument("normalized_value: alpha required");
            if (alpha->sign() < 0) throw std::invalid_argument("normalized_value: alpha must be nonnegative");
            const Rational a = min(*alpha, Rational(1));
            return ((1 + a) * hi + (1 - a) * lo) / 2;
        }
    }
    return hi;
}

StepFunction StepFunction::absolute_value() const {
    std::vector<Rational> pieces;
    pieces.reserve(levels_.size() - 2);
    for (const auto& v : piece_values()) pieces.push_back(abs(v));
    return StepFunction(breakpoints_, std::move(pieces), abs(left_tail()), abs(right_tail()));
}

StepFunction StepFunction::canonicalize() const {
    std::vector<Rational> bps;
    std::vector<Rational> lv{levels_.front()};
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (levels_[i + 1] == lv.back()) continue;
        bps.push_back(breakpoints_[i]);
        lv.push_back(levels_[i + 1]);
    }
    if (bps.empty()) return constant(levels_.front());
    Rational right = lv.back();
    Rational left = lv.front();
    std::vector<Rational> pieces(lv.begin() + 1, lv.end() - 1);
    return StepFunction(std::move(bps), std::move(pieces), std::move(left), std::move(right));
}

Rational StepFunction::total_variation() const {
    Rational total;
    for (std::size_t i = 1; i < levels_.size(); ++i) total += abs(levels_[i] - levels_[i - 1]);
    return total;
}

ExtendedRational StepFunction::l1_norm() const {
    if (!left_tail().is_zero() || !right_tail().is_zero()) return ExtendedRational::pos_inf();
    Rational total;
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
        total += abs(levels_[i]) * (breakpoints_[i] - breakpoints_[i - 1]);
    }
    return total;
}

ExtendedRational StepFunction::superlevel_measure(const Rational& lambda) const {
    if (lambda.sign() <= 0) throw std::invalid_argument("superlevel_measure: lambda must be positive");
    if (left_tail() > lambda || right_tail() > lambda) return ExtendedRational::pos_inf();
    Rational total;
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
        if (levels_[i] > lambda) total += breakpoints_[i] - breakpoints_[i - 1];
    }
    return total;
}

bool StepFunction::is_nonnegative() const {
    return std::all_of(levels_.begin(), levels_.end(), [](const Rational& v) { return v.sign() >= 0; });
}

bool StepFunction::is_constant() const {
    return std::all_of(levels_.begin(), levels_.end(), [&](const Rational& v) { return v == levels_.front(); });
}

bool StepFunction::is_single_peak() const {
    if (left_tail() != right_tail()) return false;
    std::size_t i = 1;
    while (i < levels_.size() && levels_[i] >= levels_[i - 1]) ++i;
    while (i < levels_.size() && levels_[i] <= levels_[i - 1]) ++i;
    return i == levels_.size();
}

Rational StepFunction::max_level() const { return *std::max_element(levels_.begin(), levels_.end()); }

StepFunction StepFunction::reflect() const {
    std::vector<Rational> bps;
    bps.reserve(breakpoints_.size());
    for (auto it = breakpoints_.rbegin(); it != breakpoints_.rend(); ++it) bps.push_back(-*it);
    std::vector<Rational> pieces(levels_.rbegin() + 1, levels_.rend() - 1);
    return StepFunction(std::move(bps), std::move(pieces), right_tail(), left_tail());
}

StepFunction StepFunction::scale_values(const Rational& c) const {
    std::vector<Rational> pieces;
    for (const auto& v : piece_values()) pieces.push_back(v * c);
    return StepFunction(breakpoints_, std::move(pieces), left_tail() * c, right_tail() * c);
}

StepFunction StepFunction::dilate(const Rational& s) const {
    if (s.sign() <= 0) throw std::invalid_argument("dilate: scale must be positive");
    std::vector<Rational> bps;
    for (const auto& b : breakpoints_) bps.push_back(b * s);
    std::vector<Rational> pieces(piece_values().begin(), piece_values().end());
    return StepFunction(std::move(bps), std::move(pieces), left_tail(), right_tail());
}

}  // namespace maxbv
