#pragma once

// Brute-force sampled suprema, independent of the vertex engine, used to
// cross-check it.

#include <optional>

#include "maxbv/step_function.hpp"

namespace maxbv {

// Sup of averages of |f| over [y - t, y + t] with |x - y| <= alpha t, taken
// over t = h, 2h, ... <= t_max (and t <= radius when given). For a fixed t
// the mass F(y + t) - F(y - t) is piecewise linear in y with kinks where
// y +- t meets a breakpoint, so the best y is chosen exactly among the kinks
// and the two ends of the y-range.
Rational sampled_cone_sup(const StepFunction& f, const Rational& alpha, const Rational& x, const Rational& h,
                          const Rational& t_max, const std::optional<Rational>& radius = std::nullopt);

}  // namespace maxbv
