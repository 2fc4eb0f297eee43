#include "maxbv/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace maxbv {

namespace {

// Prefix integral of |f| rebuilt from the raw levels.
class Prefix {
public:
    explicit Prefix(const StepFunction& f) : bps_(f.breakpoints().begin(), f.breakpoints().end()) {
        for (const auto& v : f.levels()) levels_.push_back(abs(v));
        prefix_.push_back(Rational(0));
        for (std::size_t i = 1; i < bps_.size(); ++i) prefix_.push_back(prefix_.back() + levels_[i] * (bps_[i] - bps_[i - 1]));
    }
    Rational at(const Rational& s) const {
        const auto i = static_cast<std::size_t>(std::upper_bound(bps_.begin(), bps_.end(), s) - bps_.begin());
        if (i == 0) return levels_[0] * (s - bps_[0]);
        return prefix_[i - 1] + levels_[i] * (s - bps_[i - 1]);
    }
    const std::vector<Rational>& breakpoints() const { return bps_; }

private:
    std::vector<Rational> bps_;
    std::vector<Rational> levels_;
    std::vector<Rational> prefix_;
};

}  // namespace

Rational sampled_cone_sup(const StepFunction& f, const Rational& alpha, const Rational& x, const Rational& h,
                          const Rational& t_max, const std::optional<Rational>& radius) {
    if (h.sign() <= 0) throw std::invalid_argument("sampled_cone_sup: step must be positive");
    const Prefix F(f);
    Rational best;
    for (Rational t = h; t <= t_max && (!radius || t <= *radius); t += h) {
        const Rational lo = x - alpha * t;
        const Rational hi = x + alpha * t;
        Rational mass = F.at(lo + t) - F.at(lo - t);
        const auto probe = [&](const Rational& y) {
            if (y < lo || y > hi) return;
            Rational m = F.at(y + t) - F.at(y - t);
            if (m > mass) mass = std::move(m);
        };
        probe(hi);
        for (const auto& b : F.breakpoints()) {
            probe(b - t);
            probe(b + t);
        }
        Rational avg = mass / (2 * t);
        if (avg > best) best = std::move(avg);
    }
    return best;
}

}  // namespace maxbv
