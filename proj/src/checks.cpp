#include "maxbv/checks.hpp"

#include <stdexcept>

#include "maxbv/maximal.hpp"

namespace maxbv {

bool verify_bpl(const StepFunction& f, const Rational& x, const Rational& y, const Rational& t) {
    const Rational gap = abs(x - y);
    if (gap.is_zero() || gap > t) throw std::invalid_argument("verify_bpl: need 0 < |x - y| <= t");
    const StepFunction g = f.absolute_value();
    const auto u = [&g](const Rational& c, const Rational& h) { return g.average(c - h, c + h); };
    const Rational lhs = u(y, t);
    // With |x - y| = t one of the two intervals has zero length and the
    // other is (y - t, y + t) itself.
    const Rational h_left = (x - y + t) / 2;
    const Rational h_right = (y - x + t) / 2;
    Rational rhs = h_left.is_zero() ? u((x + y + t) / 2, h_right) : u((x + y - t) / 2, h_left);
    if (!h_left.is_zero() && !h_right.is_zero()) rhs = max(rhs, u((x + y + t) / 2, h_right));
    return lhs <= rhs;
}

bool verify_square_lemma(const StepFunction& f, const Rational& radius, const Rational& x) {
    const Rational truncated = eval_uncentered_truncated(f, radius, x).value;
    const Rational diamond = eval_diamond(f, radius, x).value;
    const Rational one_sided =
        max(eval_one_sided(f, radius, x, Side::Left).value, eval_one_sided(f, radius, x, Side::Right).value);
    return truncated == diamond && diamond == one_sided;
}

}  // namespace maxbv
