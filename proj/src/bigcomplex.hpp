#pragma once

#include <complex>

#include <boost/multiprecision/mpfr.hpp>

#include "newtonloj/rational.hpp"

namespace newtonloj::detail {

using Real = boost::multiprecision::mpfr_float;

// Values created inside the scope get `bits` of mantissa; arithmetic keeps the
// precision of its operands, so build every input inside the same scope.
class PrecisionScope {
public:
    explicit PrecisionScope(int bits) : saved_(Real::default_precision())
    {
        Real::default_precision(static_cast<unsigned>(bits * 0.30103) + 1);
    }
    ~PrecisionScope() { Real::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

inline Real to_real(const Rational& q)
{
    return Real(q.get_mpq_t());
}

struct BigComplex {
    Real re{0};
    Real im{0};

    BigComplex() = default;
    BigComplex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}
    explicit BigComplex(const GaussianRational& z) : re(to_real(z.re())), im(to_real(z.im())) {}

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b)
    {
        const Real n = b.norm();
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }

    Real norm() const { return re * re + im * im; }
    Real abs() const { return sqrt(norm()); }
    bool is_zero() const { return re == 0 && im == 0; }
    // log10 |z|; -inf for zero.
    double log10_abs() const
    {
        if (is_zero())
            return -std::numeric_limits<double>::infinity();
        return static_cast<double>(log10(norm())) / 2;
    }
    std::complex<double> to_complex() const { return {static_cast<double>(re), static_cast<double>(im)}; }

    // exp(theta * Log z), principal branch.
    BigComplex pow(const Rational& theta) const
    {
        const Real t = to_real(theta);
        const Real mag = exp(t * log(norm()) / 2);
        const Real arg = t * atan2(im, re);
        return {mag * cos(arg), mag * sin(arg)};
    }
};

}  // namespace newtonloj::detail
