#pragma once

// Variation of maximal functions: certified partition sums and the
// component-wise value obtained from the monotone / V-shape structure.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "maxbv/detachment.hpp"

namespace maxbv {

// Sum of |g(x_{i+1}) - g(x_i)|; the partition must be strictly increasing
// with at least two points.
Rational variation_lower_bound(const std::function<Rational(const Rational&)>& evaluate,
                               std::span<const Rational> partition);

struct VariationOptions {
    Rational tol = dyadic(30);
    Rational location_tol = kDefaultLocationTol;
    int scan_density = kDefaultScanDensity;
    int probes = kDefaultProbes;
    // The window is cut into 2^level equal parts, level running from
    // min_level until the increment drops below tol, at least min_rounds
    // times and at most up to max_level.
    int min_level = 6;
    int max_level = 12;
    int min_rounds = 3;
    bool structural = true;
};

struct VariationReport {
    Rational lower_bound;
    std::optional<Rational> structural_value;  // absent if a component is Undetermined
    Rational tolerance;
    std::size_t partition_size = 0;
    bool converged = false;
    std::vector<Rational> history;  // lower_bound after each refinement
    std::vector<DetachmentComponent> components;
};

// Throws std::invalid_argument unless the window pads the breakpoint range by
// at least its diameter on both sides.
void require_padded_window(const StepFunction& f, const Window& window);

// Both values include the analytic tails |M f(window edge) - lim M f| beyond
// the window.
VariationReport maximal_variation(const MaximalOperator& op, const Window& window,
                                  const VariationOptions& options = {});
VariationReport maximal_variation(const StepFunction& f, const RegionShape& shape, const Window& window,
                                  const VariationOptions& options = {});

// Breakpoints in the window and the midpoint of each piece, the window ends,
// every located component point and the 2^level uniform grid, sorted and
// deduplicated.
std::vector<Rational> variation_partition(const MaximalOperator& op, const Window& window,
                                          std::span<const DetachmentComponent> components, int level);

}  // namespace maxbv
