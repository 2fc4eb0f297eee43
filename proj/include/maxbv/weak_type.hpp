#pragma once

// Weak-type (1,1) ratios and the variation ratio V(M f) / V(f).

#include <optional>

#include "maxbv/variation.hpp"

namespace maxbv {

// A window holding {M^alpha f > lambda}: the breakpoint range padded by
// max(alpha, 1) ||f||_1 / lambda + 1 on both sides.
Window superlevel_window(const StepFunction& f, const Rational& alpha, const Rational& lambda);

// Lower estimate of |{M f > lambda} ∩ window|. Scans the breakpoints and a
// grid of the given step; each crossing is bisected to width <= tol and only
// the side inside the set is counted. Throws std::invalid_argument if a
// window edge lies in the set.
Rational superlevel_measure_estimate(const MaximalOperator& op, const Rational& lambda, const Window& window,
                                     const Rational& grid_step, const Rational& tol = dyadic(30));

// lambda |{M^alpha f > lambda}| / ||f||_1; requires lambda > 0 and finite
// nonzero L1 norm. Without a window, superlevel_window is used.
Rational weak_type_ratio(const StepFunction& f, const Rational& alpha, const Rational& lambda,
                         const std::optional<Window>& window, const Rational& grid_step,
                         const Rational& tol = dyadic(30));

// maximal_variation(...).lower_bound / total_variation(f); f must not be constant.
Rational balpha_ratio(const StepFunction& f, const Rational& alpha, const Window& window,
                      const Rational& tol = dyadic(30));

struct WeakTypeCase {
    StepFunction f;
    Rational lambda;
};

// Seven narrow bumps placed so that the centered ratio at lambda = 1 comes
// within a few percent of the sharp centered constant (11 + sqrt 61) / 12.
WeakTypeCase centered_weak_type_witness();

}  // namespace maxbv
