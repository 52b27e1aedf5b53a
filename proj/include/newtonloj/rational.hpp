#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace newtonloj {

using Rational = mpq_class;

// Builds a canonical rational num/den (den != 0).
Rational make_rational(std::int64_t num, std::int64_t den = 1);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

// Exact complex number a + b i with a, b rational.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re, Rational im = 0);
    GaussianRational(std::int64_t re) : GaussianRational(Rational(static_cast<long>(re))) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    // |z|^2, exact.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    // Throws std::domain_error on division by zero.
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::complex<double> to_complex() const;

    // Literal form accepted by the polynomial parser: "3/2", "-1/2i", "(3/2+1/2i)".
    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

// Rational number extended by +inf and -inf, totally ordered.
// The empty infimum is +inf and the empty supremum is -inf.
class ExtRational {
public:
    enum class Kind { MinusInfinity, Finite, PlusInfinity };

    ExtRational() = default;  // zero
    ExtRational(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {}
    ExtRational(std::int64_t value) : ExtRational(Rational(static_cast<long>(value))) {}

    static ExtRational plus_infinity() { return ExtRational(Kind::PlusInfinity); }
    static ExtRational minus_infinity() { return ExtRational(Kind::MinusInfinity); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_plus_infinity() const { return kind_ == Kind::PlusInfinity; }
    bool is_minus_infinity() const { return kind_ == Kind::MinusInfinity; }

    // Precondition: is_finite().
    const Rational& value() const;

    double to_double() const;
    // "13/3", "-8", "+inf", "-inf".
    std::string to_string() const;

    // Shifting an infinity by a finite amount leaves it unchanged.
    friend ExtRational operator+(const ExtRational& a, const Rational& b);
    friend ExtRational operator-(const ExtRational& a, const Rational& b);

    friend bool operator==(const ExtRational& a, const ExtRational& b);
    friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
    friend bool operator<(const ExtRational& a, const ExtRational& b);
    friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
    friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
    friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }

private:
    explicit ExtRational(Kind k) : kind_(k) {}

    Kind kind_ = Kind::Finite;
    Rational value_{0};
};

ExtRational min(const ExtRational& a, const ExtRational& b);
ExtRational max(const ExtRational& a, const ExtRational& b);

}  // namespace newtonloj
