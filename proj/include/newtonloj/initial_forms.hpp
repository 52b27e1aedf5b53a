#pragma once

#include <optional>
#include <string>
#include <vector>

#include "newtonloj/geometry.hpp"
#include "newtonloj/poly.hpp"
#include "newtonloj/upoly.hpp"

namespace newtonloj {

struct InitialForm {
    Segment segment;
    SparsePoly poly;  // terms of h whose exponents lie on the segment
};

// Throws DomainError when s is not a boundary segment of the diagram of h.
InitialForm initial_form(const SparsePoly& h, const Segment& s);

// Quasi-homogeneous normal form of an initial form along its segment:
//   in(h,S) = X^zeta Y^theta * sum_k q_k (X^{xi sigma})^{d-k} (Y^eta)^k
// for the right side, with d = gcd(|S1|, |S2|), xi = |S1|/d, eta = |S2|/d.
// The top side uses the same form with the roles of X and Y exchanged.
// In both cases in(h,S) = sum_k q_k X^{base + k*step}.
struct UnivariateReduction {
    Side side = Side::Right;
    int zeta = 0;
    int theta = 0;
    int d = 0;
    ExponentPair base;  // lattice point for k = 0
    ExponentPair step;  // primitive direction
    UPoly q;

    SparsePoly reconstruct() const;
};

UnivariateReduction univariate_reduce(const InitialForm& inf, Side side);

// Coefficients of a polynomial supported on a line of direction `step`
// (normalized so that beta > 0, or alpha > 0 for horizontal lines), read
// from its lowest point. Throws DomainError if the support is off-line.
struct LineReduction {
    ExponentPair base;
    UPoly q;  // q(0) != 0 unless the input is zero
};
LineReduction reduce_along(const SparsePoly& f, ExponentPair step);

// Partials of in(h,S) have no common zero on the torus (exact gcd test).
bool segment_nondegenerate(const SparsePoly& h, const Segment& s);

// Multiple-factor shortcut: nullopt when the line through S meets the origin at
// an endpoint of S (the shortcut says nothing there).
std::optional<bool> segment_nondegenerate_shortcut(const SparsePoly& h, const Segment& s);

struct SegmentVerdict {
    Side side = Side::Right;
    Segment segment;
    bool nondegenerate = true;
    std::string reason;  // "ok" or "common-torus-zero"
};

struct NondegeneracyReport {
    bool nondegenerate = true;
    std::vector<SegmentVerdict> segments;  // right polygon, then top segments not already listed
};

NondegeneracyReport poly_nondegenerate_at_infinity(const SparsePoly& h);

// Common zero of two polynomials supported on parallel lines (both on the torus).
bool have_common_torus_zero(const SparsePoly& a, const SparsePoly& b, ExponentPair step);

struct PairWitness {
    Segment s;
    Side s_side = Side::Right;
    Segment t;
    Side t_side = Side::Right;
    std::string reason;
};

struct PairReport {
    bool nondegenerate = true;
    std::optional<PairWitness> witness;  // first failing (S, T)
    // Parallel pairs lying on opposite sides only; informational, not failures.
    std::vector<PairWitness> cross_side_parallel;
};

PairReport pair_nondegenerate(const SparsePoly& f, const SparsePoly& g);

enum class SegmentClass { Standard, LowerNonStandard, UpperNonStandard };
const char* to_string(SegmentClass c);

struct DerivSegmentClass {
    Segment segment;
    SegmentClass cls = SegmentClass::Standard;
    std::optional<Segment> parent;
};

// Labels every segment of the given side polygon of the partial derivative of h.
// Throws DomainError when the derivative is zero.
std::vector<DerivSegmentClass> classify_derivative_polygon(const SparsePoly& h, Var var, Side side);

}  // namespace newtonloj
