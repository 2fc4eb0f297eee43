#include "maxbv/rational.hpp"

#include <cctype>
#include <ostream>

namespace maxbv {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class pow10(unsigned long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

}  // namespace

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    const std::string original(text);
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    mpq_class out;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed rational '" + original + "'");
        const mpz_class d(std::string(den), 10);
        if (d == 0) throw ParseError("zero denominator in '" + original + "'");
        out = mpq_class(mpz_class(std::string(num), 10), d);
    } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) throw ParseError("malformed decimal '" + original + "'");
        const mpz_class scaled(std::string(whole) + std::string(frac), 10);
        out = mpq_class(scaled, pow10(frac.size()));
    } else {
        if (!all_digits(text)) throw ParseError("malformed rational '" + original + "'");
        out = mpq_class(mpz_class(std::string(text), 10));
    }
    out.canonicalize();
    if (negative) out = -out;
    return Rational(std::move(out));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::to_decimal(int significant) const {
    if (significant < 1) significant = 1;
    if (is_zero()) return "0";
    const mpz_class num = ::abs(v_.get_num());
    const mpz_class den = v_.get_den();

    // Decimal exponent e with 10^e <= |v| < 10^(e+1).
    long e = static_cast<long>(num.get_str().size()) - static_cast<long>(den.get_str().size());
    auto ge_pow = [&](long k) {  // |v| >= 10^k
        if (k >= 0) return num >= den * pow10(static_cast<unsigned long>(k));
        return num * pow10(static_cast<unsigned long>(-k)) >= den;
    };
    while (!ge_pow(e)) --e;
    while (ge_pow(e + 1)) ++e;

    // Round |v| * 10^(significant-1-e) half away from zero.
    const long shift = significant - 1 - e;
    mpz_class n = num, d = den;
    if (shift >= 0) n *= pow10(static_cast<unsigned long>(shift));
    else d *= pow10(static_cast<unsigned long>(-shift));
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (2 * r >= d) ++q;
    if (q == pow10(static_cast<unsigned long>(significant))) {
        q = pow10(static_cast<unsigned long>(significant - 1));
        ++e;
    }
    std::string digits = q.get_str();

    std::string out = sgn(v_) < 0 ? "-" : "";
    auto strip = [](std::string s) {
        while (!s.empty() && s.back() == '0') s.pop_back();
        return s;
    };
    if (e >= -5 && e < significant) {
        if (e >= 0) {
            const auto int_len = static_cast<std::size_t>(e + 1);
            std::string frac = strip(digits.substr(int_len));
            out += digits.substr(0, int_len);
            if (!frac.empty()) out += "." + frac;
        } else {
            out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + strip(digits);
        }
    } else {
        std::string frac = strip(digits.substr(1));
        out += digits.substr(0, 1);
        if (!frac.empty()) out += "." + frac;
        out += (e < 0 ? "e-" : "e+");
        const std::string ex = std::to_string(e < 0 ? -e : e);
        out += (ex.size() < 2 ? "0" : "") + ex;
    }
    return out;
}

Rational dyadic(unsigned k) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
    return Rational(mpq_class(mpz_class(1), den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

const Rational& ExtendedRational::value() const {
    if (kind_ != Kind::Finite) throw std::logic_error("extended rational: value() on an infinity");
    return value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    using K = ExtendedRational::Kind;
    if (a.kind_ != b.kind_) {
        return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    }
    if (a.kind_ != K::Finite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
}

std::string ExtendedRational::str() const {
    switch (kind_) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "inf";
        case Kind::Finite: break;
    }
    return value_.str();
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) { return os << r.str(); }

}  // namespace maxbv
