#pragma once

// Bounded-depth search primitives over exact rationals.

#include <functional>

#include "maxbv/rational.hpp"

namespace maxbv {

using ScalarMap = std::function<Rational(const Rational&)>;

inline constexpr unsigned kDefaultSearchDepth = 64;

struct Bracket {
    Rational lo;
    Rational hi;
    Rational midpoint() const { return (lo + hi) / 2; }
    Rational width() const { return hi - lo; }
};

// Halves [lo, hi] `depth` times, keeping a strict sign change of g inside.
// Throws std::invalid_argument unless g(lo) and g(hi) have opposite strict signs.
Bracket bisect_sign_change(const ScalarMap& g, Rational lo, Rational hi,
                           unsigned depth = kDefaultSearchDepth);

struct UnimodalMinimum {
    Rational argmin;
    Rational min;
};

// Ternary search for the minimum of a V-shaped (unimodal) g on [lo, hi].
UnimodalMinimum minimize_unimodal(const ScalarMap& g, Rational lo, Rational hi,
                                  unsigned depth = kDefaultSearchDepth);

}  // namespace maxbv
