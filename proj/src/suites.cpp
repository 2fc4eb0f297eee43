#include "maxbv/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "maxbv/checks.hpp"
#include "maxbv/constructions.hpp"
#include "maxbv/corpus.hpp"
#include "maxbv/oracle.hpp"
#include "maxbv/variation.hpp"
#include "maxbv/weak_type.hpp"

namespace maxbv {

namespace {

class Draw {
public:
    Draw(std::uint64_t seed, std::uint64_t stream) : gen_(seed * 0x9e3779b97f4a7c15ULL + stream) {}
    long long in(long long lo, long long hi) {
        return lo + static_cast<long long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    std::uint64_t next() { return gen_(); }
    // Uniform point of the window on a 1/16 grid.
    Rational point(const Window& w) {
        const Rational span = (w.hi - w.lo) * 16;
        const mpz_class steps = span.raw().get_num() / span.raw().get_den();
        return w.lo + Rational(in(0, steps.get_si()), 16);
    }

private:
    std::mt19937_64 gen_;
};

struct Outcome {
    bool passed;
    std::string detail;
};

int scaled(int full, const SuiteConfig& c) { return c.quick ? std::max(1, full / 10) : full; }

std::string show(const Rational& r) { return r.to_decimal(8); }

const std::vector<Rational>& variation_alphas() {
    static const std::vector<Rational> a{Rational(1, 3), Rational(2, 5), Rational(1, 2),
                                         Rational(3, 4), Rational(1),    Rational(2)};
    return a;
}

// Partition bound with the analytic tails: breakpoints, component endpoints
// and the window cut into 2^level parts.
Rational partition_bound(const MaximalOperator& op, const Window& window, int level,
                         const std::vector<Rational>& extra = {}) {
    const auto comps = detachment_set(op, window, dyadic(30), kDefaultScanDensity);
    auto pts = variation_partition(op, window, comps, level);
    for (const auto& e : extra) {
        if (window.lo < e && e < window.hi) pts.push_back(e);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const Rational tails = abs(op(window.lo) - op.tail_limit(Side::Left)) + abs(op(window.hi) - op.tail_limit(Side::Right));
    return variation_lower_bound([&op](const Rational& x) { return op(x); }, pts) + tails;
}

Outcome variation_bound(const SuiteConfig& c, double& seconds_budget) {
    seconds_budget = 600;
    const auto corpus = step_corpus(c.seed, scaled(200, c), 12);
    int cases = 0;
    int failures = 0;
    Rational worst;
    for (const auto& f : corpus) {
        const Rational tv = f.total_variation();
        const Window w = default_window(f);
        for (const auto& alpha : variation_alphas()) {
            const MaximalOperator op(f, Cone{alpha});
            const Rational lb = partition_bound(op, w, 10);
            ++cases;
            if (lb > tv) ++failures;
            if (tv.sign() > 0) worst = max(worst, lb / tv);
        }
    }
    std::ostringstream d;
    d << cases << " cases, " << failures << " with bound > V(f), max bound/V(f) = " << show(worst);
    return {failures == 0, d.str()};
}

Outcome sharpness(const SuiteConfig&, double&) {
    const StepFunction chi = StepFunction::indicator(-1, 0);
    bool ok = true;
    std::ostringstream d;
    for (const Rational& alpha : {Rational(1, 3), Rational(1, 2), Rational(1), Rational(2)}) {
        const VariationReport r = maximal_variation(chi, Cone{alpha}, default_window(chi));
        const bool in_range = r.structural_value && *r.structural_value <= 2 &&
                              *r.structural_value >= 2 - Rational(1, 1000000);
        bool upward = r.history.size() >= 3;
        for (std::size_t i = 1; i < r.history.size(); ++i) upward = upward && r.history[i - 1] <= r.history[i];
        ok = ok && in_range && upward;
        d << "alpha=" << alpha << ": struct=" << (r.structural_value ? show(*r.structural_value) : "none")
          << " lower=" << show(r.lower_bound) << " (" << r.history.size() << " rounds" << (upward ? "" : ", not monotone")
          << "); ";
    }
    return {ok, d.str()};
}

Outcome spike(const SuiteConfig&, double& seconds_budget) {
    seconds_budget = 60;
    const Rational alpha(1, 5);
    const SpikeProfile p = spike_profile(alpha, 1000);
    const bool near_third = abs(p.at_third - Rational(9, 5)) <= Rational(5, 100);
    const bool near_half = p.at_half >= 2 - Rational(1, 100);
    const std::vector<long long> candidates{10, 100, 1000};
    const auto first = find_spike_counterexample(alpha, candidates);
    std::ostringstream d;
    d << "M(1/3)=" << show(p.at_third) << " M(1/2)=" << show(p.at_half) << " M(2/3)=" << show(p.at_two_thirds)
      << "; first n with a local max: " << (first ? std::to_string(first->n) : "none");
    return {p.local_max() && near_third && near_half, d.str()};
}

Outcome square(const SuiteConfig& c, double&) {
    Draw draw(c.seed, 4);
    const int n = scaled(500, c);
    int failures = 0;
    for (int i = 0; i < n; ++i) {
        const StepFunction f = random_step_function(draw.next());
        const Rational r(draw.in(1, 128), 16);
        const Rational x = draw.point(default_window(f));
        bool ok = verify_square_lemma(f, r, x);
        if (c.inject_fault) ok = eval_uncentered_truncated(f, r, x).value == eval_diamond(f, 2 * r, x).value;
        if (!ok) ++failures;
    }
    return {failures == 0, std::to_string(n) + " cases, " + std::to_string(failures) + " failures"};
}

Outcome bpl(const SuiteConfig& c, double&) {
    Draw draw(c.seed, 5);
    const int n = scaled(500, c);
    int failures = 0;
    int boundary = 0;
    for (int i = 0; i < n; ++i) {
        const StepFunction f = random_step_function(draw.next());
        const Window w = default_window(f);
        const Rational x = draw.point(w);
        const Rational t(draw.in(1, 128), 16);
        // |x - y| = t exactly for one case in eight.
        const Rational gap = draw.in(0, 7) == 0 ? t : t * Rational(draw.in(1, 63), 64);
        if (gap == t) ++boundary;
        const Rational y = draw.in(0, 1) ? x + gap : x - gap;
        if (!verify_bpl(f, x, y, t)) ++failures;
    }
    return {failures == 0, std::to_string(n) + " cases (" + std::to_string(boundary) + " with |x-y|=t), " +
                               std::to_string(failures) + " failures"};
}

Outcome sandwich(const SuiteConfig& c, double&) {
    Draw draw(c.seed, 6);
    const std::vector<Rational> alphas{Rational(1, 5), Rational(1, 3), Rational(1, 2), Rational(1), Rational(2)};
    const int n = scaled(500, c);
    int checks = 0;
    int failures = 0;
    for (int i = 0; i < n; ++i) {
        const StepFunction f = random_step_function(draw.next());
        const Rational x = draw.point(default_window(f));
        std::vector<Rational> m;
        for (const auto& a : alphas) m.push_back(eval_nontangential(f, a, x).value);
        if (c.inject_fault) m[0] /= 2;
        for (std::size_t b = 0; b < alphas.size(); ++b) {
            for (std::size_t a = b + 1; a < alphas.size(); ++a) {
                ++checks;
                if (!(alphas[b] / alphas[a] * m[a] <= m[b] && m[b] <= m[a])) ++failures;
            }
        }
    }
    return {failures == 0, std::to_string(checks) + " comparisons, " + std::to_string(failures) + " failures"};
}

Outcome lipschitz_variation(const SuiteConfig& c, double&) {
    Draw draw(c.seed, 7);
    const int n = scaled(100, c);
    int failures = 0;
    int sharp = 0;
    Rational worst;
    for (int i = 0; i < n; ++i) {
        const StepFunction f = random_step_function(draw.next());
        const Window w = default_window(f);
        const PiecewiseLinearFunction radius = random_lipschitz_N(draw.next(), Rational(1, 2), w);
        const Rational lip = radius.lipschitz_constant();
        if (lip > Rational(1, 2)) ++failures;
        if (lip == Rational(1, 2)) ++sharp;
        const MaximalOperator op(f, LipschitzCone{Rational(1), radius});
        const std::vector<Rational> nodes(radius.breakpoints().begin(), radius.breakpoints().end());
        const Rational lb = partition_bound(op, w, 10, nodes);
        const Rational tv = f.total_variation();
        if (lb > tv) ++failures;
        if (tv.sign() > 0) worst = max(worst, lb / tv);
    }
    std::ostringstream d;
    d << n << " pairs (" << sharp << " with Lip(N) = 1/2), " << failures << " failures, max bound/V(f) = "
      << show(worst);
    return {failures == 0 && sharp > 0, d.str()};
}

Outcome divergence(const SuiteConfig&, double& seconds_budget) {
    seconds_budget = 120;
    const Rational beta(3, 4);
    const int bumps = 200;
    const auto rows = divergence_certificate(beta, bumps);
    int failures = 0;
    std::vector<Rational> analytic{Rational(0)};
    for (int k = 0; k <= bumps; ++k) analytic.push_back(analytic.back() + 1 / (divergence_peak(beta, k) + 1));
    for (const auto& r : rows) {
        const Rational peak = divergence_peak(beta, r.k);
        if (r.x_prime != peak || r.value != 1 / (peak + 1) || !r.zero_value.is_zero()) ++failures;
    }
    const bool sum_ok = rows.size() == static_cast<std::size_t>(bumps + 1) && rows.back().partial_sum == analytic.back();
    bool growth = true;
    std::ostringstream d;
    for (const int k : {25, 50, 100}) {
        const Rational inc = rows[static_cast<std::size_t>(2 * k)].partial_sum - rows[static_cast<std::size_t>(k)].partial_sum;
        growth = growth && inc > Rational(1, 20);
        d << "S(" << 2 * k << ")-S(" << k << ")=" << show(inc) << " ";
    }
    d << "S(200)=" << show(rows.back().partial_sum) << ", " << failures << " bump failures";
    return {failures == 0 && sum_ok && growth, d.str()};
}

Outcome weaktype(const SuiteConfig& c, double&) {
    bool ok = true;
    std::ostringstream d;
    const StepFunction chi = StepFunction::indicator(-1, 0);
    const MaximalOperator uncentered(chi, Cone{Rational(1)});
    for (const Rational& lambda : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
        const Window w = superlevel_window(chi, Rational(1), lambda);
        const Rational m = superlevel_measure_estimate(uncentered, lambda, w, Rational(1, 16), dyadic(30));
        const Rational expected = 2 / lambda - 1;
        ok = ok && abs(m - expected) <= Rational(1, 1000000);
        d << "|{M~chi>" << lambda << "}|=" << show(m) << " ";
    }

    const auto corpus = step_corpus(c.seed, scaled(200, c), 12);
    Rational max1;
    Rational max0;
    int cases = 0;
    for (const auto& f : corpus) {
        if (f.max_level().is_zero()) continue;
        for (const Rational& frac : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
            const Rational lambda = f.max_level() * frac;
            for (const Rational& alpha : {Rational(1), Rational(0)}) {
                const Window w = superlevel_window(f, alpha, lambda);
                const Rational r = weak_type_ratio(f, alpha, lambda, w, (w.hi - w.lo) / 512);
                (alpha.is_zero() ? max0 : max1) = max(alpha.is_zero() ? max0 : max1, r);
                ++cases;
            }
        }
    }
    const WeakTypeCase witness = centered_weak_type_witness();
    const Window ww = superlevel_window(witness.f, Rational(0), witness.lambda);
    const Rational wr = weak_type_ratio(witness.f, Rational(0), witness.lambda, ww, Rational(1, 1000));
    max0 = max(max0, wr);
    const double threshold = (11 + std::sqrt(61.0)) / 12 - 0.2;
    ok = ok && max1 <= 2 && max0 <= 2 && max0.to_double() > threshold;
    d << "; " << cases << " corpus ratios, max at alpha=1: " << show(max1) << ", max at alpha=0: " << show(max0)
      << " (spike train " << show(wr) << ", threshold " << threshold << ")";
    return {ok, d.str()};
}

Outcome shape(const SuiteConfig& c, double&) {
    const auto corpus = step_corpus(c.seed, scaled(200, c), 12);
    int components = 0;
    int undetermined = 0;
    for (const auto& f : corpus) {
        const Window w = default_window(f);
        for (const Rational& alpha : {Rational(1, 3), Rational(1, 2), Rational(1)}) {
            const MaximalOperator op(f, Cone{alpha});
            for (auto comp : detachment_set(op, w, dyadic(30), kDefaultScanDensity)) {
                comp = classify_shape(op, std::move(comp));
                ++components;
                if (comp.shape == ComponentShape::Undetermined) ++undetermined;
            }
        }
    }
    const StepFunction spikes = make_spike_pair(1000);
    const MaximalOperator op(spikes, Cone{Rational(1, 5)});
    bool spike_flagged = false;
    for (auto comp : detachment_set(op, default_window(spikes), dyadic(30), kDefaultScanDensity)) {
        if (comp.lo < Rational(1, 2) && Rational(1, 2) < comp.hi) {
            spike_flagged = classify_shape(op, std::move(comp)).shape == ComponentShape::Undetermined;
        }
    }
    std::ostringstream d;
    d << components << " corpus components, " << undetermined << " undetermined; spike pair at alpha=1/5 "
      << (spike_flagged ? "undetermined" : "not flagged");
    return {undetermined == 0 && spike_flagged, d.str()};
}

Outcome oracle(const SuiteConfig& c, double&) {
    Draw draw(c.seed, 11);
    const std::vector<Rational> alphas{Rational(0), Rational(1, 5), Rational(1, 3), Rational(1, 2), Rational(1), Rational(2)};
    const int n = scaled(50, c);
    int failures = 0;
    Rational worst_gap;
    for (int i = 0; i < n; ++i) {
        const StepFunction f = random_step_function(draw.next(), 6);
        const Rational& alpha = alphas[static_cast<std::size_t>(draw.in(0, 5))];
        const Window w = default_window(f);
        const Rational x = draw.point(w);
        const Rational value = eval_nontangential(f, alpha, x).value;
        // An average above `value` needs ||f||_1 / (2 t) > value, so larger t
        // cannot beat the engine.
        const Rational t_max = value.sign() > 0 ? f.l1_norm().value() / (2 * value) : Rational(1);
        Rational prev_gap = value + 1;
        bool ok = true;
        for (const unsigned k : {8u, 10u, 12u}) {
            const Rational sampled = sampled_cone_sup(f, alpha, x, dyadic(k), t_max);
            const Rational gap = value - sampled;
            ok = ok && sampled <= value && gap <= prev_gap;
            prev_gap = gap;
        }
        ok = ok && prev_gap <= Rational(1, 100);
        worst_gap = max(worst_gap, prev_gap);
        if (!ok) ++failures;
    }
    std::ostringstream d;
    d << n << " cases, " << failures << " failures, largest final gap " << show(worst_gap);
    return {failures == 0, d.str()};
}

using SuiteFn = std::function<Outcome(const SuiteConfig&, double&)>;

struct Entry {
    SuiteInfo info;
    SuiteFn fn;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e{
        {{"variation", "variation of M^alpha f bounded by V(f), alpha >= 1/3"}, variation_bound},
        {{"sharpness", "chi_(-1,0) attains the variation bound"}, sharpness},
        {{"spike", "interior local maximum for alpha = 1/5"}, spike},
        {{"square", "truncated = diamond = max of one-sided"}, square},
        {{"bpl", "boundary projection inequality"}, bpl},
        {{"sandwich", "alpha-monotonicity sandwich"}, sandwich},
        {{"lipschitz-variation", "variation of M^1_N f bounded by V(f), Lip(N) <= 1/2"}, lipschitz_variation},
        {{"divergence", "divergence certificate for Lip(N) = 3/4"}, divergence},
        {{"weaktype", "weak-type ratios"}, weaktype},
        {{"shape", "monotone or V-shaped detachment components"}, shape},
        {{"oracle", "engine against the sampled oracle"}, oracle},
    };
    return e;
}

}  // namespace

const std::vector<SuiteInfo>& suite_list() {
    static const std::vector<SuiteInfo> list = [] {
        std::vector<SuiteInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return list;
}

SuiteResult run_suite(const std::string& id, const SuiteConfig& config) {
    for (const auto& e : entries()) {
        if (e.info.id != id) continue;
        double budget = 0;
        const auto start = std::chrono::steady_clock::now();
        Outcome o = e.fn(config, budget);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool passed = o.passed;
        if (budget > 0 && !config.quick && seconds > budget) {
            passed = false;
            o.detail += "; exceeded the " + std::to_string(static_cast<int>(budget)) + " s budget";
        }
        return {e.info.id, e.info.title, passed, std::move(o.detail), seconds};
    }
    throw std::invalid_argument("unknown suite '" + id + "'");
}

}  // namespace maxbv
