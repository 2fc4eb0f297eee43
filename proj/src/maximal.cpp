#include "maxbv/maximal.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxbv {

namespace detail {

struct GridPair {
    std::size_t i;
    std::size_t j;
    Rational average;
    Rational center;
    Rational half_length;
};

struct PreparedFunction {
    explicit PreparedFunction(const StepFunction& g) : f(g.absolute_value()) {
        const auto bps = f.breakpoints();
        for (std::size_t i = 0; i < bps.size(); ++i) {
            for (std::size_t j = i + 1; j < bps.size(); ++j) {
                const Rational len = bps[j] - bps[i];
                pairs.push_back({i, j, (f.cumulative_at_breakpoint(j) - f.cumulative_at_breakpoint(i)) / len,
                                 (bps[i] + bps[j]) / 2, len / 2});
            }
        }
        // First admissible entry is then the best grid vertex, lexicographically smallest on ties.
        std::sort(pairs.begin(), pairs.end(), [](const GridPair& p, const GridPair& q) {
            if (p.average != q.average) return p.average > q.average;
            if (p.i != q.i) return p.i < q.i;
            return p.j < q.j;
        });
    }

    Rational average(const Rational& a, const Rational& b) const {
        return (f.cumulative_at(b) - f.cumulative_at(a)) / (b - a);
    }

    StepFunction f;
    std::vector<GridPair> pairs;
};

}  // namespace detail

namespace {

using detail::PreparedFunction;

// Cone, TruncatedCone and LipschitzCone at a base point reduce to this.
struct ConeQuery {
    Rational alpha;
    std::optional<Rational> radius;  // nullopt: untruncated
};

struct SquareQuery {
    Rational lo;
    Rational hi;
};

struct HalfQuery {
    Rational reach;  // 2 * A
    Side side;
};

using Query = std::variant<ConeQuery, SquareQuery, HalfQuery>;

Query make_query(const RegionShape& shape, const Rational& x) {
    return std::visit(
        [&](const auto& s) -> Query {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, Cone>) {
                if (s.alpha.sign() < 0) throw std::invalid_argument("cone: alpha must be nonnegative");
                return ConeQuery{s.alpha, std::nullopt};
            } else if constexpr (std::is_same_v<S, TruncatedCone>) {
                if (s.alpha.sign() < 0) throw std::invalid_argument("truncated cone: alpha must be nonnegative");
                if (s.radius.sign() <= 0) throw std::invalid_argument("truncated cone: radius must be positive");
                return ConeQuery{s.alpha, s.radius};
            } else if constexpr (std::is_same_v<S, LipschitzCone>) {
                if (s.alpha.sign() < 0) throw std::invalid_argument("lipschitz cone: alpha must be nonnegative");
                Rational r = s.radius(x);
                if (r.sign() < 0) throw std::invalid_argument("truncation radius must be nonnegative");
                return ConeQuery{s.alpha, std::move(r)};
            } else if constexpr (std::is_same_v<S, Diamond>) {
                if (s.radius.sign() <= 0) throw std::invalid_argument("diamond: radius must be positive");
                return SquareQuery{x - 2 * s.radius, x + 2 * s.radius};
            } else {
                if (s.reach.sign() <= 0) throw std::invalid_argument("one-sided: reach must be positive");
                return HalfQuery{2 * s.reach, s.side};
            }
        },
        shape);
}

bool grid_admits(const ConeQuery& q, const Rational& x, const Rational& center, const Rational& half) {
    if (q.radius && half > *q.radius) return false;
    return abs(x - center) <= q.alpha * half;
}

bool grid_admits(const SquareQuery& q, const Rational& x, const Rational& a, const Rational& b) {
    return q.lo <= a && a <= x && x <= b && b <= q.hi;
}

// Every boundary vertex of the arrangement that is not a grid x grid point.
template <class Offer>
void boundary_vertices(const StepFunction& f, const ConeQuery& q, const Rational& x, Offer&& offer) {
    if (q.radius && q.radius->is_zero()) return;
    const auto bps = f.breakpoints();
    // The two edges of the cone, a = x + (s alpha - 1) t, b = x + (s alpha + 1) t, t > 0.
    const int sides = q.alpha.is_zero() ? 1 : 2;
    for (int k = 0; k < sides; ++k) {
        const Rational sa = k == 0 ? q.alpha : -q.alpha;
        const Rational da = sa - 1;
        const Rational db = sa + 1;
        auto in_range = [&](const Rational& t) { return t.sign() > 0 && (!q.radius || t <= *q.radius); };
        for (const auto& p : bps) {
            if (!da.is_zero()) {
                const Rational t = (p - x) / da;
                if (in_range(t)) offer(p, x + db * t);
            }
            if (!db.is_zero()) {
                const Rational t = (p - x) / db;
                if (in_range(t)) offer(x + da * t, p);
            }
        }
        if (q.radius) offer(x + da * *q.radius, x + db * *q.radius);
    }
    // Top edge t = R, |y - x| <= alpha R.
    if (q.radius && !q.alpha.is_zero()) {
        const Rational& r = *q.radius;
        const Rational reach = q.alpha * r;
        for (const auto& p : bps) {
            if (abs(p + r - x) <= reach) offer(p, p + 2 * r);
            if (abs(p - r - x) <= reach) offer(p - 2 * r, p);
        }
    }
}

template <class Offer>
void boundary_vertices(const StepFunction& f, const SquareQuery& q, const Rational& x, Offer&& offer) {
    for (const auto& p : f.breakpoints()) {
        if (p < q.lo || p > q.hi) continue;
        if (p > x) {
            offer(q.lo, p);
            offer(x, p);
        } else if (p < x) {
            offer(p, q.hi);
            offer(p, x);
        }
    }
    offer(q.lo, x);
    offer(q.lo, q.hi);
    offer(x, q.hi);
}

template <class Offer>
void boundary_vertices(const StepFunction& f, const HalfQuery& q, const Rational& x, Offer&& offer) {
    if (q.side == Side::Right) {
        const Rational end = x + q.reach;
        for (const auto& p : f.breakpoints()) {
            if (p > x && p < end) offer(x, p);
        }
        offer(x, end);
    } else {
        const Rational start = x - q.reach;
        for (const auto& p : f.breakpoints()) {
            if (p < x && p > start) offer(p, x);
        }
        offer(start, x);
    }
}

Rational floor_value(const StepFunction& f, const Query& q, const Rational& x) {
    if (const auto* c = std::get_if<ConeQuery>(&q)) return f.normalized_value(x, Normalization::Alpha, c->alpha);
    if (const auto* h = std::get_if<HalfQuery>(&q)) {
        const auto lim = f.one_sided_limits(x);
        return h->side == Side::Right ? lim.right : lim.left;
    }
    return f.normalized_value(x, Normalization::One);
}

struct BestVertex {
    bool found = false;
    Rational value;
    Rational a;
    Rational b;

    void offer(Rational v, const Rational& pa, const Rational& pb) {
        if (found) {
            if (v < value) return;
            if (v == value && std::tie(a, b) <= std::tie(pa, pb)) return;
        }
        found = true;
        value = std::move(v);
        a = pa;
        b = pb;
    }
};

EvalResult evaluate_prepared(const PreparedFunction& pf, const RegionShape& shape, const Rational& x) {
    const Query q = make_query(shape, x);
    const StepFunction& f = pf.f;
    const auto bps = f.breakpoints();
    BestVertex best;
    auto offer = [&](const Rational& a, const Rational& b) { best.offer(pf.average(a, b), a, b); };

    std::visit(
        [&](const auto& query) {
            using Q = std::decay_t<decltype(query)>;
            if constexpr (std::is_same_v<Q, ConeQuery>) {
                if (!(query.radius && query.radius->is_zero())) {
                    for (const auto& p : pf.pairs) {
                        if (grid_admits(query, x, p.center, p.half_length)) {
                            best.offer(p.average, bps[p.i], bps[p.j]);
                            break;
                        }
                    }
                }
            } else if constexpr (std::is_same_v<Q, SquareQuery>) {
                for (const auto& p : pf.pairs) {
                    if (grid_admits(query, x, bps[p.i], bps[p.j])) {
                        best.offer(p.average, bps[p.i], bps[p.j]);
                        break;
                    }
                }
            }
            boundary_vertices(f, query, x, offer);
        },
        q);

    Rational floor = floor_value(f, q, x);
    std::optional<Rational> tail;
    if (const auto* c = std::get_if<ConeQuery>(&q); c && !c->radius) tail = asymptotic_sup(f, c->alpha);

    if (best.found && best.value >= floor && (!tail || best.value >= *tail)) {
        return {best.value, IntervalWitness{best.a, best.b}};
    }
    if (!tail || floor >= *tail) return {std::move(floor), NormalizationFloor{}};
    return {std::move(*tail), AsymptoticTail{}};
}

}  // namespace

void validate_region(const Region& region) { (void)make_query(region.shape, region.base); }

bool region_admits(const Region& region, const Rational& a, const Rational& b) {
    if (!(a < b)) return false;
    const Rational& x = region.base;
    const Query q = make_query(region.shape, x);
    return std::visit(
        [&](const auto& query) {
            using Q = std::decay_t<decltype(query)>;
            if constexpr (std::is_same_v<Q, ConeQuery>) {
                return grid_admits(query, x, (a + b) / 2, (b - a) / 2);
            } else if constexpr (std::is_same_v<Q, SquareQuery>) {
                return grid_admits(query, x, a, b);
            } else {
                if (query.side == Side::Right) return a == x && b - a <= query.reach;
                return b == x && b - a <= query.reach;
            }
        },
        q);
}

std::vector<EndpointPair> candidate_vertices(const StepFunction& f, const Region& region) {
    const Rational& x = region.base;
    const Query q = make_query(region.shape, x);
    std::vector<EndpointPair> out;
    auto offer = [&](const Rational& a, const Rational& b) {
        if (a < b) out.emplace_back(a, b);
    };
    const auto bps = f.breakpoints();
    std::visit(
        [&](const auto& query) {
            using Q = std::decay_t<decltype(query)>;
            if constexpr (!std::is_same_v<Q, HalfQuery>) {
                for (std::size_t i = 0; i < bps.size(); ++i) {
                    for (std::size_t j = i + 1; j < bps.size(); ++j) {
                        bool ok = false;
                        if constexpr (std::is_same_v<Q, ConeQuery>) {
                            ok = !(query.radius && query.radius->is_zero()) &&
                                 grid_admits(query, x, (bps[i] + bps[j]) / 2, (bps[j] - bps[i]) / 2);
                        } else {
                            ok = grid_admits(query, x, bps[i], bps[j]);
                        }
                        if (ok) out.emplace_back(bps[i], bps[j]);
                    }
                }
            }
            boundary_vertices(f, query, x, offer);
        },
        q);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Rational asymptotic_sup(const StepFunction& f, const Rational& alpha) {
    if (alpha.sign() < 0) throw std::invalid_argument("asymptotic_sup: alpha must be nonnegative");
    const Rational left = abs(f.left_tail());
    const Rational right = abs(f.right_tail());
    const Rational lo = max(Rational(0), (1 - alpha) / 2);
    const Rational hi = min(Rational(1), (1 + alpha) / 2);
    auto mix = [&](const Rational& lambda) { return lambda * left + (1 - lambda) * right; };
    return max(mix(lo), mix(hi));
}

EvalResult eval_max_average(const StepFunction& f, const Region& region) {
    if (!f.is_nonnegative()) throw std::invalid_argument("eval_max_average: f must be nonnegative");
    const PreparedFunction pf(f);
    return evaluate_prepared(pf, region.shape, region.base);
}

EvalResult eval_nontangential(const StepFunction& f, const Rational& alpha, const Rational& x) {
    return eval_max_average(f.absolute_value(), {Cone{alpha}, x});
}

EvalResult eval_truncated_nontangential(const StepFunction& f, const Rational& alpha, const Rational& radius,
                                        const Rational& x) {
    return eval_max_average(f.absolute_value(), {TruncatedCone{alpha, radius}, x});
}

EvalResult eval_uncentered_truncated(const StepFunction& f, const Rational& radius, const Rational& x) {
    return eval_max_average(f.absolute_value(), {TruncatedCone{Rational(1), radius}, x});
}

EvalResult eval_diamond(const StepFunction& f, const Rational& radius, const Rational& x) {
    return eval_max_average(f.absolute_value(), {Diamond{radius}, x});
}

EvalResult eval_one_sided(const StepFunction& f, const Rational& reach, const Rational& x, Side side) {
    return eval_max_average(f.absolute_value(), {OneSided{reach, side}, x});
}

EvalResult eval_lipschitz_truncated(const StepFunction& f, const PiecewiseLinearFunction& radius,
                                    const Rational& x) {
    return eval_max_average(f.absolute_value(), {LipschitzCone{Rational(1), radius}, x});
}

EvalResult eval_mixed(const StepFunction& f, const Rational& alpha, const PiecewiseLinearFunction& radius,
                      const Rational& x) {
    if (alpha.sign() < 0 || alpha > 1) throw std::invalid_argument("eval_mixed: alpha must lie in [0, 1]");
    return eval_max_average(f.absolute_value(), {LipschitzCone{alpha, radius}, x});
}

MaximalOperator::MaximalOperator(const StepFunction& f, RegionShape shape)
    : prepared_(std::make_shared<const PreparedFunction>(f)), shape_(std::move(shape)) {}

EvalResult MaximalOperator::evaluate(const Rational& x) const { return evaluate_prepared(*prepared_, shape_, x); }

const StepFunction& MaximalOperator::function() const { return prepared_->f; }

Rational MaximalOperator::attachment_level(const Rational& x) const {
    return prepared_->f.normalized_value(x, Normalization::One);
}

Rational MaximalOperator::tail_limit(Side side) const {
    const StepFunction& f = prepared_->f;
    const Rational& own = side == Side::Left ? f.left_tail() : f.right_tail();
    if (const auto* c = std::get_if<Cone>(&shape_)) return max(own, asymptotic_sup(f, c->alpha));
    return own;
}

}  // namespace maxbv
