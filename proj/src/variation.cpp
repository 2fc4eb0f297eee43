#include "maxbv/variation.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxbv {

namespace {

Rational tail_terms(const MaximalOperator& op, const Rational& at_lo, const Rational& at_hi) {
    return abs(at_lo - op.tail_limit(Side::Left)) + abs(at_hi - op.tail_limit(Side::Right));
}

// Exact variation of M f = f~ over an attached stretch [u, v]: constant on the
// open pieces, f~ at the breakpoints.
Rational attached_variation(const MaximalOperator& op, const Rational& u, const Rational& v,
                            const Rational& mu, const Rational& mv) {
    if (!(u < v)) return Rational(0);
    const StepFunction& f = op.function();
    const auto bps = f.breakpoints();
    const auto lv = f.levels();
    Rational total;
    Rational prev = mu;
    auto it = std::upper_bound(bps.begin(), bps.end(), u);
    for (; it != bps.end() && *it < v; ++it) {
        const auto i = static_cast<std::size_t>(it - bps.begin());
        const Rational& left = lv[i];
        Rational at = op(*it);
        total += abs(left - prev) + abs(at - left);
        prev = std::move(at);
    }
    // Piece just left of v.
    const auto i = static_cast<std::size_t>(it - bps.begin());
    const Rational& last = lv[i];
    total += abs(last - prev) + abs(mv - last);
    return total;
}

std::optional<Rational> component_variation(const DetachmentComponent& c) {
    if (!c.shape) return std::nullopt;
    switch (*c.shape) {
        case ComponentShape::Monotone: return abs(c.hi_value - c.lo_value);
        case ComponentShape::VShaped:
            return (c.lo_value - *c.vertex_value) + (c.hi_value - *c.vertex_value);
        case ComponentShape::Undetermined: return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

Rational variation_lower_bound(const std::function<Rational(const Rational&)>& evaluate,
                               std::span<const Rational> partition) {
    if (partition.size() < 2) throw std::invalid_argument("variation_lower_bound: need at least two points");
    for (std::size_t i = 1; i < partition.size(); ++i) {
        if (!(partition[i - 1] < partition[i])) {
            throw std::invalid_argument("variation_lower_bound: partition must be strictly increasing");
        }
    }
    Rational total;
    Rational prev = evaluate(partition[0]);
    for (std::size_t i = 1; i < partition.size(); ++i) {
        Rational cur = evaluate(partition[i]);
        total += abs(cur - prev);
        prev = std::move(cur);
    }
    return total;
}

void require_padded_window(const StepFunction& f, const Window& window) {
    const auto bps = f.breakpoints();
    const Rational diameter = bps.back() - bps.front();
    if (!(window.lo <= bps.front() - diameter) || !(window.hi >= bps.back() + diameter) ||
        !(window.lo < window.hi)) {
        throw std::invalid_argument("window too small: must pad the breakpoints by their diameter");
    }
}

std::vector<Rational> variation_partition(const MaximalOperator& op, const Window& window,
                                          std::span<const DetachmentComponent> components, int level) {
    std::vector<Rational> pts{window.lo, window.hi};
    const auto bps = op.function().breakpoints();
    for (std::size_t i = 0; i < bps.size(); ++i) {
        if (window.lo < bps[i] && bps[i] < window.hi) pts.push_back(bps[i]);
        // One point inside every piece, so a coarse grid still sees each level.
        if (i + 1 < bps.size()) {
            const Rational mid = (bps[i] + bps[i + 1]) / 2;
            if (window.lo < mid && mid < window.hi) pts.push_back(mid);
        }
    }
    for (const auto& c : components) {
        pts.push_back(c.lo);
        pts.push_back(c.hi);
        if (c.vertex) pts.push_back(*c.vertex);
    }
    const long long parts = 1LL << level;
    const Rational step = (window.hi - window.lo) / Rational(parts);
    for (long long k = 1; k < parts; ++k) pts.push_back(window.lo + step * k);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

VariationReport maximal_variation(const MaximalOperator& op, const Window& window, const VariationOptions& opt) {
    require_padded_window(op.function(), window);
    VariationReport report;
    report.tolerance = opt.tol;
    report.components = detachment_set(op, window, opt.location_tol, opt.scan_density);

    const Rational at_lo = op(window.lo);
    const Rational at_hi = op(window.hi);
    const Rational tails = tail_terms(op, at_lo, at_hi);

    if (opt.structural) {
        for (auto& c : report.components) c = classify_shape(op, std::move(c), opt.probes);
        std::optional<Rational> total = tails;
        Rational u = window.lo;
        Rational mu = at_lo;
        for (const auto& c : report.components) {
            const auto part = component_variation(c);
            if (!part) {
                total.reset();
                break;
            }
            *total += *part;
            if (!c.lo_clipped) *total += attached_variation(op, u, c.lo, mu, c.lo_value);
            u = c.hi;
            mu = c.hi_value;
        }
        if (total && (report.components.empty() || !report.components.back().hi_clipped)) {
            *total += attached_variation(op, u, window.hi, mu, at_hi);
        }
        report.structural_value = std::move(total);
    }

    const auto eval = [&op](const Rational& x) { return op(x); };
    int rounds = 0;
    for (int level = opt.min_level; level <= opt.max_level; ++level) {
        const auto partition = variation_partition(op, window, report.components, level);
        const Rational bound = variation_lower_bound(eval, partition) + tails;
        ++rounds;
        const bool small = !report.history.empty() && bound - report.history.back() < opt.tol;
        report.history.push_back(bound);
        report.lower_bound = bound;
        report.partition_size = partition.size();
        report.converged = small;
        if (small && rounds >= opt.min_rounds) break;
    }
    return report;
}

VariationReport maximal_variation(const StepFunction& f, const RegionShape& shape, const Window& window,
                                  const VariationOptions& options) {
    return maximal_variation(MaximalOperator(f, shape), window, options);
}

}  // namespace maxbv
