#include "maxbv/detachment.hpp"

#include <algorithm>
#include <stdexcept>

#include "maxbv/search.hpp"

namespace maxbv {

namespace {

unsigned depth_for(const Rational& width, const Rational& tol) {
    unsigned depth = 0;
    for (Rational w = width; w > tol; w /= 2) ++depth;
    return depth;
}

std::vector<Rational> scan_points(const StepFunction& f, const Window& window, int density) {
    std::vector<Rational> nodes{window.lo};
    for (const auto& b : f.breakpoints()) {
        if (window.lo < b && b < window.hi) nodes.push_back(b);
    }
    nodes.push_back(window.hi);
    std::vector<Rational> points;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        points.push_back(nodes[i]);
        const Rational step = (nodes[i + 1] - nodes[i]) / (density + 1);
        for (int k = 1; k <= density; ++k) points.push_back(nodes[i] + step * k);
    }
    points.push_back(window.hi);
    return points;
}

}  // namespace

Window default_window(const StepFunction& f) {
    const auto bps = f.breakpoints();
    const Rational diameter = bps.back() - bps.front();
    return {bps.front() - diameter - 1, bps.back() + diameter + 1};
}

const char* shape_name(ComponentShape s) {
    switch (s) {
        case ComponentShape::Monotone: return "monotone";
        case ComponentShape::VShaped: return "v-shaped";
        case ComponentShape::Undetermined: return "undetermined";
    }
    return "undetermined";
}

bool is_detached(const MaximalOperator& op, const Rational& x) { return op(x) > op.attachment_level(x); }

std::vector<DetachmentComponent> detachment_set(const MaximalOperator& op, const Window& window,
                                                const Rational& tol, int scan_density) {
    if (!(window.lo < window.hi)) throw std::invalid_argument("detachment_set: window must satisfy lo < hi");
    if (tol.sign() <= 0) throw std::invalid_argument("detachment_set: tolerance must be positive");
    if (scan_density < 0) throw std::invalid_argument("detachment_set: scan density must be nonnegative");

    const auto points = scan_points(op.function(), window, scan_density);
    std::vector<char> detached;
    detached.reserve(points.size());
    for (const auto& p : points) detached.push_back(is_detached(op, p));

    const ScalarMap sign = [&op](const Rational& x) { return Rational(is_detached(op, x) ? 1 : -1); };

    std::vector<DetachmentComponent> out;
    std::size_t i = 0;
    while (i < points.size()) {
        if (!detached[i]) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < points.size() && detached[j + 1]) ++j;

        DetachmentComponent c;
        if (i == 0) {
            c.lo = points[0];
            c.lo_clipped = true;
        } else {
            const Rational& a = points[i - 1];
            c.lo = bisect_sign_change(sign, a, points[i], depth_for(points[i] - a, tol)).lo;
        }
        if (j + 1 == points.size()) {
            c.hi = points[j];
            c.hi_clipped = true;
        } else {
            const Rational& b = points[j + 1];
            c.hi = bisect_sign_change(sign, points[j], b, depth_for(b - points[j], tol)).hi;
        }
        c.lo_value = op(c.lo);
        c.hi_value = op(c.hi);
        out.push_back(std::move(c));
        i = j + 1;
    }
    return out;
}

std::vector<DetachmentComponent> detachment_set(const StepFunction& f, const RegionShape& shape,
                                                const Window& window, const Rational& tol, int scan_density) {
    return detachment_set(MaximalOperator(f, shape), window, tol, scan_density);
}

DetachmentComponent classify_shape(const MaximalOperator& op, DetachmentComponent c, int probes) {
    if (probes < 3) throw std::invalid_argument("classify_shape: need at least 3 probes");
    const Rational step = (c.hi - c.lo) / (probes - 1);
    std::vector<Rational> xs;
    std::vector<Rational> vs;
    for (int k = 0; k < probes; ++k) {
        xs.push_back(k + 1 == probes ? c.hi : c.lo + step * k);
        vs.push_back(op(xs.back()));
    }

    const auto n = vs.size();
    const bool nonincreasing = std::is_sorted(vs.rbegin(), vs.rend());
    const bool nondecreasing = std::is_sorted(vs.begin(), vs.end());
    if (nonincreasing || nondecreasing) {
        c.shape = ComponentShape::Monotone;
        return c;
    }
    const auto m = static_cast<std::size_t>(std::min_element(vs.begin(), vs.end()) - vs.begin());
    const bool v_shape = std::is_sorted(vs.rbegin() + static_cast<long>(n - 1 - m), vs.rend()) &&
                         std::is_sorted(vs.begin() + static_cast<long>(m), vs.end());
    if (!v_shape) {
        c.shape = ComponentShape::Undetermined;
        return c;
    }
    c.shape = ComponentShape::VShaped;
    const Rational& lo = xs[m == 0 ? 0 : m - 1];
    const Rational& hi = xs[std::min(m + 1, n - 1)];
    const UnimodalMinimum refined = minimize_unimodal([&op](const Rational& x) { return op(x); }, lo, hi, 48);
    if (refined.min < vs[m]) {
        c.vertex = refined.argmin;
        c.vertex_value = refined.min;
    } else {
        c.vertex = xs[m];
        c.vertex_value = vs[m];
    }
    return c;
}

}  // namespace maxbv
