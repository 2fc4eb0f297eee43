#include "maxbv/corpus.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

namespace maxbv {

namespace {

class Draw {
public:
    explicit Draw(std::uint64_t seed) : gen_(seed) {}
    long long in(long long lo, long long hi) {
        return lo + static_cast<long long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    template <std::size_t N>
    long long pick(const std::array<long long, N>& options) {
        return options[static_cast<std::size_t>(in(0, N - 1))];
    }

private:
    std::mt19937_64 gen_;
};

constexpr std::array<long long, 5> kGridDenominators{1, 2, 4, 8, 16};
constexpr std::array<long long, 5> kValueDenominators{1, 2, 3, 4, 8};

// floor(r * d) for r >= 0.
long long floor_scaled(const Rational& r, long long d) {
    const mpz_class q = (r * d).raw().get_num() / (r * d).raw().get_den();
    return q.get_si();
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

StepFunction random_step_function(std::uint64_t seed, int max_pieces, const Rational& value_bound,
                                  const Rational& span_bound, CorpusShape shape) {
    if (max_pieces < 1) throw std::invalid_argument("random_step_function: need max_pieces >= 1");
    if (value_bound.sign() < 0 || span_bound.sign() <= 0) {
        throw std::invalid_argument("random_step_function: bounds must be positive");
    }
    Draw draw(seed);
    int pieces = static_cast<int>(draw.in(std::min(3, max_pieces), max_pieces));
    long long d = draw.pick(kGridDenominators);
    // Refine the grid until every piece gets at least one unit of the span.
    while (floor_scaled(span_bound, d) < pieces && d < kGridDenominators.back()) d *= 2;
    const long long units = floor_scaled(span_bound, d);
    if (units < 1) throw std::invalid_argument("random_step_function: span bound below the finest grid step");
    pieces = static_cast<int>(std::min<long long>(pieces, units));
    std::vector<long long> widths(static_cast<std::size_t>(pieces), 1);
    const long long spare_cap = units - pieces;
    long long spare = spare_cap > 0 ? draw.in(0, spare_cap) : 0;
    while (spare > 0) {
        const auto k = static_cast<std::size_t>(draw.in(0, pieces - 1));
        const long long add = draw.in(1, std::min<long long>(spare, 4 * d));
        widths[k] += add;
        spare -= add;
    }
    long long pos = -draw.in(0, units);
    std::vector<Rational> bps{Rational(pos, d)};
    for (const long long w : widths) {
        pos += w;
        bps.emplace_back(pos, d);
    }

    std::vector<Rational> values;
    for (int k = 0; k < pieces; ++k) {
        const long long q = draw.pick(kValueDenominators);
        values.emplace_back(draw.in(0, floor_scaled(value_bound, q)), q);
    }
    if (shape == CorpusShape::SinglePeak) {
        const auto peak = static_cast<std::size_t>(draw.in(0, pieces - 1));
        std::sort(values.begin(), values.end());
        // Largest value at `peak`; the rest alternate to the two sides in
        // decreasing order so both flanks are monotone.
        std::vector<Rational> arranged(values.size());
        std::size_t left = peak;
        std::size_t right = peak;
        arranged[peak] = values.back();
        for (std::size_t r = values.size() - 1; r-- > 0;) {
            const bool go_left = left > 0 && (right + 1 >= values.size() || (r % 2 == 0));
            if (go_left) arranged[--left] = values[r];
            else arranged[++right] = values[r];
        }
        values = std::move(arranged);
    }
    return StepFunction(std::move(bps), std::move(values));
}

PiecewiseLinearFunction random_lipschitz_N(std::uint64_t seed, const Rational& lip_bound, const Window& window) {
    if (lip_bound.sign() < 0) throw std::invalid_argument("random_lipschitz_N: bound must be nonnegative");
    if (!(window.lo < window.hi)) throw std::invalid_argument("random_lipschitz_N: window must satisfy lo < hi");
    Draw draw(seed);
    const int segments = static_cast<int>(draw.in(1, 6));
    // Interior nodes on a 1/16 grid of the window.
    const Rational unit = (window.hi - window.lo) / 16;
    std::vector<long long> cuts;
    for (long long c = 1; c < 16; ++c) cuts.push_back(c);
    for (std::size_t i = cuts.size(); i > 1; --i) {
        std::swap(cuts[i - 1], cuts[static_cast<std::size_t>(draw.in(0, static_cast<long long>(i) - 1))]);
    }
    cuts.resize(static_cast<std::size_t>(segments - 1));
    std::sort(cuts.begin(), cuts.end());
    std::vector<Rational> xs{window.lo};
    for (const long long c : cuts) xs.push_back(window.lo + unit * c);
    xs.push_back(window.hi);

    const auto steep = static_cast<std::size_t>(draw.in(0, segments - 1));
    std::vector<Rational> ys{Rational(0)};
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        Rational slope = k == steep ? lip_bound : lip_bound * Rational(draw.in(0, 8), 8);
        if (draw.in(0, 1) == 1) slope = -slope;
        ys.push_back(ys.back() + slope * (xs[k + 1] - xs[k]));
    }
    // Shift so the minimum is a random value in [0, 2].
    const Rational lowest = *std::min_element(ys.begin(), ys.end());
    const Rational base(draw.in(0, 8), 4);
    for (auto& y : ys) y += base - lowest;
    return PiecewiseLinearFunction::truncation_radius(std::move(xs), std::move(ys));
}

std::vector<StepFunction> step_corpus(std::uint64_t seed, int count, int max_pieces) {
    std::vector<StepFunction> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int i = 0; i < count; ++i) {
        const CorpusShape shape = i % 5 == 4 ? CorpusShape::SinglePeak : CorpusShape::Arbitrary;
        out.push_back(random_step_function(mix(seed, static_cast<std::uint64_t>(i)), max_pieces, 4, 8, shape));
    }
    return out;
}

}  // namespace maxbv
