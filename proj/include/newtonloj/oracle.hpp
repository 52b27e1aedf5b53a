#pragma once

#include <complex>
#include <string>
#include <vector>

#include "newtonloj/geometry.hpp"
#include "newtonloj/poly.hpp"
#include "newtonloj/rational.hpp"

namespace newtonloj {

// Which variable the branch is a series in: Y = a(X) or X = b(Y).
enum class Orientation { OverX, OverY };
const char* to_string(Orientation o);

// Leading term c * T^theta of a Laurent-Puiseux solution at infinity.
// leading_coeff^eta is a root of the univariate reduction of the segment.
struct Branch {
    Rational theta;
    std::complex<double> leading_coeff;
    int multiplicity = 1;
    Segment segment;
    Orientation solve_in = Orientation::OverX;
    int eta = 1;  // denominator of theta
};

struct OracleConfig {
    std::vector<double> radii{1e3, 1e4, 1e5, 1e6};
    int angles = 8;
    double tolerance = 0.05;     // agreement tolerance used by callers
    double max_residual = 0.1;   // rms misfit of the log-log line, in decades
    double match_ratio = 0.5;    // own-branch distance must be below this fraction of the next one
    double track_decades = 0.25; // largest radius step while following roots inwards
    double root_tolerance = 1e-10;  // relative residual accepted for roots of a reduction
    int initial_bits = 256;
    int max_bits = 8192;

    // Throws DomainError unless radii increase strictly over >= 3 decades and angles >= 1.
    void validate() const;
};

struct SlopeEstimate {
    double slope = 0;  // -inf when the substitution vanishes identically
    double residual = 0;
    std::vector<double> radii;
    int samples_per_radius = 0;
    std::vector<double> mean_log10;  // one per radius
    bool vanishes = false;
};

// Leading terms of all non-zero solutions of h = 0 attached to the right
// polygon (over X) or the top polygon (over Y). Per segment the
// multiplicities add up to |S2| (right) or |S1| (top).
std::vector<Branch> branch_leading_terms(const SparsePoly& h, Side side);

struct RootsAtPoint {
    std::vector<std::complex<double>> roots;  // deg_Y h of them, zeros included
    double backward_error = 0;                // max |h(x,r)| / sum |terms|
    bool ill_conditioned = false;
};

// Roots of y -> h(x, y) in double precision (companion matrix, then polished).
RootsAtPoint roots_at_radius(const SparsePoly& h, std::complex<double> x);

// deg g(T, a(T)) for a branch a of h, from log|g| at the configured radii.
// Roots are labelled at the largest radius and followed inwards by continuity;
// log|g| is averaged over the angles and over the conjugates of the branch.
// Throws OracleError on ambiguous matching or a bad fit.
SlopeEstimate substitution_degree(const SparsePoly& g, const SparsePoly& h, const Branch& branch,
                                  const OracleConfig& cfg = {});

// Growth of |h(x, c x^theta)| (Y-orientation) along a monomial curve.
SlopeEstimate curve_slope(const SparsePoly& h, std::complex<double> c, const Rational& theta,
                          const OracleConfig& cfg = {});

struct OracleTerm {
    std::string quantity;  // "deg H(X,0)", "deg g(X,a(X))", ...
    bool symbolic = false;
    double value = 0;
    double residual = 0;
    std::vector<Branch> branch;  // empty for the symbolic degree terms
};

struct OracleEstimate {
    double value = 0;
    std::vector<OracleTerm> terms;
    double max_residual = 0;
};

// Numeric l_inf(f, g): degree terms plus branch substitutions of degree <= 1 in
// both orientations. The branch filter uses the exact declivity.
OracleEstimate estimate_loj(const SparsePoly& f, const SparsePoly& g, const OracleConfig& cfg = {});

// Numeric relative exponent with respect to var: all branches of that orientation.
OracleEstimate estimate_relative(const SparsePoly& f, const SparsePoly& g, Var var,
                                 const OracleConfig& cfg = {});

}  // namespace newtonloj
