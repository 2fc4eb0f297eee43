#include "maxbv/search.hpp"

#include <stdexcept>

namespace maxbv {

Bracket bisect_sign_change(const ScalarMap& g, Rational lo, Rational hi, unsigned depth) {
    if (!(lo < hi)) throw std::invalid_argument("bisect_sign_change: need lo < hi");
    const int slo = g(lo).sign();
    const int shi = g(hi).sign();
    if (slo == 0 || shi == 0 || slo == shi) {
        throw std::invalid_argument("bisect_sign_change: endpoints lack a strict sign change");
    }
    for (unsigned i = 0; i < depth; ++i) {
        Rational mid = (lo + hi) / 2;
        const int s = g(mid).sign();
        // A zero lands on the hi side; the bracket then still holds a sign change.
        if (s == slo) lo = std::move(mid);
        else hi = std::move(mid);
    }
    return {std::move(lo), std::move(hi)};
}

UnimodalMinimum minimize_unimodal(const ScalarMap& g, Rational lo, Rational hi, unsigned depth) {
    if (!(lo < hi)) throw std::invalid_argument("minimize_unimodal: need lo < hi");
    for (unsigned i = 0; i < depth; ++i) {
        const Rational third = (hi - lo) / 3;
        Rational m1 = lo + third;
        Rational m2 = hi - third;
        if (g(m1) <= g(m2)) hi = std::move(m2);
        else lo = std::move(m1);
    }
    Rational arg = (lo + hi) / 2;
    Rational value = g(arg);
    return {std::move(arg), std::move(value)};
}

}  // namespace maxbv
