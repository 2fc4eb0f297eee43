#include "maxbv/weak_type.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "maxbv/search.hpp"

namespace maxbv {

namespace {

Rational require_l1(const StepFunction& f) {
    const ExtendedRational norm = f.l1_norm();
    if (!norm.is_finite() || norm.value().is_zero()) {
        throw std::invalid_argument("weak type: need finite nonzero L1 norm");
    }
    return norm.value();
}

}  // namespace

Window superlevel_window(const StepFunction& f, const Rational& alpha, const Rational& lambda) {
    if (lambda.sign() <= 0) throw std::invalid_argument("weak type: lambda must be positive");
    const Rational pad = max(alpha, Rational(1)) * require_l1(f) / lambda + 1;
    const auto bps = f.breakpoints();
    return {bps.front() - pad, bps.back() + pad};
}

Rational superlevel_measure_estimate(const MaximalOperator& op, const Rational& lambda, const Window& window,
                                     const Rational& grid_step, const Rational& tol) {
    if (lambda.sign() <= 0) throw std::invalid_argument("weak type: lambda must be positive");
    if (grid_step.sign() <= 0 || tol.sign() <= 0) throw std::invalid_argument("weak type: steps must be positive");
    if (!(window.lo < window.hi)) throw std::invalid_argument("weak type: window must satisfy lo < hi");

    std::vector<Rational> pts;
    for (Rational x = window.lo; x < window.hi; x += grid_step) pts.push_back(x);
    pts.push_back(window.hi);
    for (const auto& b : op.function().breakpoints()) {
        if (window.lo < b && b < window.hi) pts.push_back(b);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const auto inside = [&](const Rational& x) { return op(x) > lambda; };
    std::vector<char> in;
    for (const auto& p : pts) in.push_back(inside(p));
    if (in.front() || in.back()) throw std::invalid_argument("weak type: window does not contain the superlevel set");

    const ScalarMap sign = [&](const Rational& x) { return Rational(inside(x) ? 1 : -1); };
    Rational measure;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Rational& a = pts[i];
        const Rational& b = pts[i + 1];
        if (in[i] && in[i + 1]) {
            measure += b - a;
            continue;
        }
        if (in[i] == in[i + 1]) continue;
        unsigned depth = 0;
        for (Rational w = b - a; w > tol; w /= 2) ++depth;
        const Bracket br = bisect_sign_change(sign, a, b, depth);
        // Count only the part certified to lie in the set.
        measure += in[i] ? br.lo - a : b - br.hi;
    }
    return measure;
}

Rational weak_type_ratio(const StepFunction& f, const Rational& alpha, const Rational& lambda,
                         const std::optional<Window>& window, const Rational& grid_step, const Rational& tol) {
    const Rational norm = require_l1(f);
    const Window w = window ? *window : superlevel_window(f, alpha, lambda);
    const MaximalOperator op(f, Cone{alpha});
    return lambda * superlevel_measure_estimate(op, lambda, w, grid_step, tol) / norm;
}

Rational balpha_ratio(const StepFunction& f, const Rational& alpha, const Window& window, const Rational& tol) {
    const Rational tv = f.total_variation();
    if (tv.is_zero()) throw std::invalid_argument("balpha_ratio: f must not be constant");
    VariationOptions opt;
    opt.tol = tol;
    opt.structural = false;
    return maximal_variation(f, Cone{alpha}, window, opt).lower_bound / tv;
}

WeakTypeCase centered_weak_type_witness() {
    // Positions and masses in units of 1/25; each mass is spread over a bump of width 1/1000.
    constexpr std::array<long long, 7> position{0, 16, 34, 71, 127, 184, 239};
    constexpr std::array<long long, 7> mass{7, 13, 12, 37, 39, 37, 36};
    const Rational width(1, 1000);
    std::vector<Rational> bps;
    std::vector<Rational> values;
    for (std::size_t i = 0; i < position.size(); ++i) {
        const Rational c(position[i], 25);
        if (i > 0) values.push_back(Rational(0));
        bps.push_back(c - width / 2);
        bps.push_back(c + width / 2);
        values.push_back(Rational(mass[i], 25) / width);
    }
    return {StepFunction(std::move(bps), std::move(values)), Rational(1)};
}

}  // namespace maxbv
