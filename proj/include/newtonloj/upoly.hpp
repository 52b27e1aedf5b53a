#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "newtonloj/rational.hpp"

namespace newtonloj {

// Dense univariate polynomial over Q(i), coefficients from degree 0 upward.
// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<GaussianRational> coeffs);

    static UPoly monomial(int degree, GaussianRational c = GaussianRational(1));

    const std::vector<GaussianRational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    GaussianRational coeff(int k) const;
    const GaussianRational& leading() const { return c_.back(); }

    UPoly derivative() const;
    UPoly monic() const;
    // Removes the factor t^k for the largest k with t^k | p; returns k.
    int strip_t_power();

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    std::complex<double> eval(std::complex<double> t) const;
    std::string to_string(char var = 't') const;

private:
    void trim();
    std::vector<GaussianRational> c_;
};

// Quotient and remainder; throws DomainError when b is zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

// Monic gcd (zero only when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

// Yun's algorithm: p = lc * prod f_k^k with f_k monic, squarefree, pairwise coprime.
// Only factors of positive degree are returned, ordered by multiplicity.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);

bool is_squarefree(const UPoly& p);

}  // namespace newtonloj
