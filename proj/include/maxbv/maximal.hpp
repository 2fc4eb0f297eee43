#pragma once

// Exact evaluation of Hardy-Littlewood-type maximal operators on step functions.
//
// Every operator here is a supremum of the average (F(b) - F(a)) / (b - a) of
// |f| over intervals [a, b] whose endpoint pair lies in an admissible region
// of the (a, b) plane. Inside each cell cut out by the grid lines a = x_i,
// b = x_j and the region's boundary, the objective is a ratio of affine
// functions, so its supremum over the region is the maximum of: its values at
// the arrangement vertices, the limit at the apex (a, b) -> (x, x), and, for
// unbounded regions, the limit along recession directions.

#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "maxbv/piecewise_linear.hpp"
#include "maxbv/rational.hpp"
#include "maxbv/step_function.hpp"

namespace maxbv {

enum class Side { Left, Right };

// Intervals (y - t, y + t) with |x - y| <= alpha t.
struct Cone { Rational alpha; };
// Cone with t <= radius.
struct TruncatedCone { Rational alpha; Rational radius; };
// |y - x| + |t - radius| <= radius, i.e. x - 2R <= a <= x <= b <= x + 2R.
struct Diamond { Rational radius; };
// [x, x + s] (Right) or [x - s, x] (Left) with 0 < s <= 2 reach.
struct OneSided { Rational reach; Side side; };
// Cone with t <= N(x), the radius frozen at the base point.
struct LipschitzCone { Rational alpha; PiecewiseLinearFunction radius; };

// An operator family; paired with a base point it is an admissible region.
using RegionShape = std::variant<Cone, TruncatedCone, Diamond, OneSided, LipschitzCone>;

struct Region {
    RegionShape shape;
    Rational base;
};

struct IntervalWitness {
    Rational a;
    Rational b;
    friend bool operator==(const IntervalWitness&, const IntervalWitness&) = default;
};
struct NormalizationFloor {
    friend bool operator==(const NormalizationFloor&, const NormalizationFloor&) = default;
};
struct AsymptoticTail {
    friend bool operator==(const AsymptoticTail&, const AsymptoticTail&) = default;
};
using Witness = std::variant<IntervalWitness, NormalizationFloor, AsymptoticTail>;

struct EvalResult {
    Rational value;
    Witness witness;
};

using EndpointPair = std::pair<Rational, Rational>;

// Throws std::invalid_argument for negative alpha, nonpositive radius/reach,
// or a negative truncation radius at the base point.
void validate_region(const Region& region);

// True when [a, b] (a < b) is an admissible interval of the region.
bool region_admits(const Region& region, const Rational& a, const Rational& b);

// All arrangement vertices of the breakpoint grid with the region boundary,
// restricted to admissible pairs with a < b, sorted lexicographically.
std::vector<EndpointPair> candidate_vertices(const StepFunction& f, const Region& region);

// Supremum of averages of |f| over cone intervals as t -> infinity.
Rational asymptotic_sup(const StepFunction& f, const Rational& alpha);

// Requires f nonnegative.
EvalResult eval_max_average(const StepFunction& f, const Region& region);

EvalResult eval_nontangential(const StepFunction& f, const Rational& alpha, const Rational& x);
EvalResult eval_truncated_nontangential(const StepFunction& f, const Rational& alpha, const Rational& radius,
                                        const Rational& x);
EvalResult eval_uncentered_truncated(const StepFunction& f, const Rational& radius, const Rational& x);
EvalResult eval_diamond(const StepFunction& f, const Rational& radius, const Rational& x);
EvalResult eval_one_sided(const StepFunction& f, const Rational& reach, const Rational& x, Side side);
EvalResult eval_lipschitz_truncated(const StepFunction& f, const PiecewiseLinearFunction& radius,
                                    const Rational& x);
EvalResult eval_mixed(const StepFunction& f, const Rational& alpha, const PiecewiseLinearFunction& radius,
                      const Rational& x);

namespace detail {
struct PreparedFunction;
}

// A maximal operator bound to |f|, with the breakpoint-pair table built once
// so that many base points can be evaluated cheaply. Immutable; cheap to copy
// and safe to share between threads.
class MaximalOperator {
public:
    MaximalOperator(const StepFunction& f, RegionShape shape);

    EvalResult evaluate(const Rational& x) const;
    Rational operator()(const Rational& x) const { return evaluate(x).value; }

    // |f|
    const StepFunction& function() const;
    const RegionShape& shape() const { return shape_; }

    // Value the operator is compared against for detachment: limsup |f| at x.
    Rational attachment_level(const Rational& x) const;
    // Limit of the maximal function as x -> -inf (Left) or +inf (Right).
    Rational tail_limit(Side side) const;

private:
    std::shared_ptr<const detail::PreparedFunction> prepared_;
    RegionShape shape_;
};

}  // namespace maxbv
