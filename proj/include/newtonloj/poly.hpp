#pragma once

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "newtonloj/rational.hpp"

namespace newtonloj {

enum class Var { X, Y };

Var other(Var v);
char to_char(Var v);

// Exponent (alpha, beta) of the monomial X^alpha Y^beta.
struct ExponentPair {
    int alpha = 0;
    int beta = 0;

    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;

    ExponentPair swapped() const { return {beta, alpha}; }
};

// Lexicographic on (alpha, beta); used for sorting point sets.
struct LexLess {
    bool operator()(const ExponentPair& a, const ExponentPair& b) const
    {
        return a.alpha != b.alpha ? a.alpha < b.alpha : a.beta < b.beta;
    }
};

// Graded lexicographic on (alpha + beta, alpha): the canonical term order.
struct GradedLexLess {
    bool operator()(const ExponentPair& a, const ExponentPair& b) const
    {
        const long da = static_cast<long>(a.alpha) + a.beta;
        const long db = static_cast<long>(b.alpha) + b.beta;
        return da != db ? da < db : a.alpha < b.alpha;
    }
};

// Exponents above this bound are rejected so that hull arithmetic on
// int64 cross products can never overflow.
inline constexpr int kMaxExponent = 1 << 20;

// Adds with overflow and range checks; throws DomainError.
ExponentPair checked_add(const ExponentPair& a, const ExponentPair& b);

// Degrees and orders of a polynomial; -inf degrees and +inf orders for zero.
struct DegreeStats {
    ExtRational deg, deg_x, deg_y;
    ExtRational ord, ord_x, ord_y;
};

struct ComplexValue {
    std::complex<double> value;
    bool finite = true;
};

// Sparse bivariate polynomial with Gaussian-rational coefficients.
// Zero coefficients are never stored; the empty map is the zero polynomial.
class SparsePoly {
public:
    using TermMap = std::map<ExponentPair, GaussianRational, GradedLexLess>;

    SparsePoly() = default;
    explicit SparsePoly(TermMap terms);

    static SparsePoly monomial(ExponentPair e, GaussianRational c = GaussianRational(1));
    static SparsePoly constant(GaussianRational c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool is_constant() const;

    // Coefficient at e (zero when absent).
    GaussianRational coeff(ExponentPair e) const;
    void add_term(ExponentPair e, const GaussianRational& c);

    std::vector<ExponentPair> support() const;

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(const GaussianRational& c, const SparsePoly& p);
    SparsePoly operator-() const;
    SparsePoly pow(unsigned n) const;

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    // h(Y, X): exchanges the roles of the two variables.
    SparsePoly swapped() const;

    // h with the variable v set to zero.
    SparsePoly restrict_to_axis(Var zeroed) const;

    // Canonical text, parseable by parse_polynomial.
    std::string to_string() const;

private:
    TermMap terms_;
};

SparsePoly partial_derivative(const SparsePoly& p, Var v);
DegreeStats degree_stats(const SparsePoly& p);

// Double-precision evaluation, nested Horner in Y then X.
ComplexValue eval_complex(const SparsePoly& p, std::complex<double> x, std::complex<double> y);

// Text grammar:
//   expr    := term (('+'|'-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+'|'-') unary | power
//   power   := primary ('^' integer)?
//   primary := number | 'i' | 'X' | 'Y' | '(' expr ')'
//   number  := integer ('/' integer)? 'i'?
// Variables are case-insensitive. Implicit multiplication is rejected.
SparsePoly parse_polynomial(std::string_view text);

// JSON list of [alpha, beta, "re", "im"] records; repeated exponents are summed.
SparsePoly parse_polynomial_json(std::string_view json_text);

}  // namespace newtonloj
