#pragma once

// Exact rational scalars for the maximal-function engine.
//
// Rational is a thin value type over GMP's mpq_class: always in lowest terms
// with a positive denominator. ExtendedRational adds the two infinities used
// for unbounded windows and divergent quantities.

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace maxbv {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T n) : v_(from_integral(n)) {}  // NOLINT: implicit on purpose
    Rational(long long num, long long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p", "p/q" and finite decimals such as "-0.75".
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const { return Rational(::abs(v_)); }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // "p/q", or "p" for integers.
    std::string str() const;
    // Exact rounding to `significant` digits, printf("%g")-like layout.
    std::string to_decimal(int significant = 17) const;
    double to_double() const { return v_.get_d(); }

private:
    template <std::integral T>
    static mpq_class from_integral(T n) {
        if constexpr (std::is_signed_v<T>) return mpq_class(static_cast<long>(n));
        else return mpq_class(static_cast<unsigned long>(n));
    }
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.abs(); }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// 2^-k as an exact rational.
Rational dyadic(unsigned k);

std::ostream& operator<<(std::ostream& os, const Rational& r);

class ExtendedRational {
public:
    enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

    ExtendedRational() = default;
    ExtendedRational(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT
    ExtendedRational(int v) : kind_(Kind::Finite), value_(v) {}                  // NOLINT

    static ExtendedRational pos_inf() { return ExtendedRational(Kind::PosInf); }
    static ExtendedRational neg_inf() { return ExtendedRational(Kind::NegInf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    // Throws std::logic_error on an infinity.
    const Rational& value() const;

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

    std::string str() const;

private:
    explicit ExtendedRational(Kind k) : kind_(k) {}
    Kind kind_ = Kind::Finite;
    Rational value_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r);

}  // namespace maxbv
