#pragma once

// Seeded random functions for property sweeps. Outputs depend only on the
// arguments; the generator is a fixed mt19937_64 stream, reduced by modulo.

#include <cstdint>
#include <vector>

#include "maxbv/detachment.hpp"

namespace maxbv {

enum class CorpusShape { Arbitrary, SinglePeak };

// Zero tails, min(3, max_pieces)..max_pieces pieces, breakpoints on a grid
// of step 1/d with d in {1, 2, 4, 8, 16} (refined when the span is short), values p/q with q in {1, 2, 3, 4, 8} and
// 0 <= value <= value_bound, overall span at most span_bound.
StepFunction random_step_function(std::uint64_t seed, int max_pieces = 12, const Rational& value_bound = 4,
                                  const Rational& span_bound = 8, CorpusShape shape = CorpusShape::Arbitrary);

// Nonnegative, with lipschitz_constant() <= lip_bound and one segment at
// exactly lip_bound when it is positive. Nodes span the window.
PiecewiseLinearFunction random_lipschitz_N(std::uint64_t seed, const Rational& lip_bound, const Window& window);

// The standard corpus: member i is drawn from seed mixed with i; every fifth
// member is single-peak.
std::vector<StepFunction> step_corpus(std::uint64_t seed, int count, int max_pieces = 12);

}  // namespace maxbv
