#pragma once

// Exact checks of two pointwise lemmas about averages u(y, t) of |f| over
// (y - t, y + t).

#include "maxbv/step_function.hpp"

namespace maxbv {

// u(y, t) <= max(u((x + y - t) / 2, (x - y + t) / 2), u((x + y + t) / 2, (y - x + t) / 2)).
// Requires 0 < |x - y| <= t.
bool verify_bpl(const StepFunction& f, const Rational& x, const Rational& y, const Rational& t);

// The truncated uncentered value equals the diamond value and the larger
// one-sided value with reach R. Requires R > 0.
bool verify_square_lemma(const StepFunction& f, const Rational& radius, const Rational& x);

}  // namespace maxbv
