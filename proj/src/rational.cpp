#include "newtonloj/rational.hpp"

#include <limits>
#include <stdexcept>

namespace newtonloj {

Rational make_rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

double to_double(const Rational& q)
{
    return q.get_d();
}

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
    const Rational n = o.norm();
    if (sgn(n) == 0)
        throw std::domain_error("division by zero Gaussian rational");
    Rational re = (re_ * o.re_ + im_ * o.im_) / n;
    Rational im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::complex<double> GaussianRational::to_complex() const
{
    return {re_.get_d(), im_.get_d()};
}

std::string GaussianRational::to_string() const
{
    if (is_real())
        return re_.get_str();
    std::string imag = im_.get_str() + "i";
    if (sgn(re_) == 0)
        return "(" + imag + ")";
    std::string out = "(" + re_.get_str();
    if (sgn(im_) > 0)
        out += "+";
    return out + imag + ")";
}

const Rational& ExtRational::value() const
{
    if (!is_finite())
        throw std::logic_error("value() of an infinite ExtRational");
    return value_;
}

double ExtRational::to_double() const
{
    switch (kind_) {
    case Kind::PlusInfinity:
        return std::numeric_limits<double>::infinity();
    case Kind::MinusInfinity:
        return -std::numeric_limits<double>::infinity();
    case Kind::Finite:
        break;
    }
    return value_.get_d();
}

std::string ExtRational::to_string() const
{
    switch (kind_) {
    case Kind::PlusInfinity:
        return "+inf";
    case Kind::MinusInfinity:
        return "-inf";
    case Kind::Finite:
        break;
    }
    return value_.get_str();
}

ExtRational operator+(const ExtRational& a, const Rational& b)
{
    if (!a.is_finite())
        return a;
    return ExtRational(Rational(a.value_ + b));
}

ExtRational operator-(const ExtRational& a, const Rational& b)
{
    if (!a.is_finite())
        return a;
    return ExtRational(Rational(a.value_ - b));
}

bool operator==(const ExtRational& a, const ExtRational& b)
{
    if (a.kind_ != b.kind_)
        return false;
    return !a.is_finite() || a.value_ == b.value_;
}

bool operator<(const ExtRational& a, const ExtRational& b)
{
    if (a.kind_ != b.kind_)
        return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    return a.is_finite() && a.value_ < b.value_;
}

ExtRational min(const ExtRational& a, const ExtRational& b)
{
    return b < a ? b : a;
}

ExtRational max(const ExtRational& a, const ExtRational& b)
{
    return a < b ? b : a;
}

}  // namespace newtonloj
