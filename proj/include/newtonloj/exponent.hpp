#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "newtonloj/geometry.hpp"
#include "newtonloj/initial_forms.hpp"
#include "newtonloj/poly.hpp"
#include "newtonloj/rational.hpp"

namespace newtonloj {

enum class Status { Exact, UpperBound, MinusInfinity, SpecialCase };
const char* to_string(Status s);

// Degree and intercept bounds of a pair H = (f, g). Infima over empty polygons
// are +inf; degrees of zero restrictions are -inf.
struct SixQuantities {
    ExtRational degH_X0;
    ExtRational alpha_f_over_g;  // inf over right segments S of f of alpha(S, Dg)
    ExtRational alpha_g_over_f;
    ExtRational degH_0Y;
    ExtRational beta_f_over_g;   // inf over top segments S of f of beta(S, Dg)
    ExtRational beta_g_over_f;

    std::array<ExtRational, 6> values() const;
    ExtRational minimum() const;
    ExtRational x_minimum() const;  // first three
    ExtRational y_minimum() const;  // last three
};

struct Witness {
    std::string quantity;  // "alpha(S)", "beta(S)", "alpha(S,Dg)", "alpha(T,Df)", ...
    Side side = Side::Right;
    Segment segment;
    Rational value;
    bool attains = false;
};

struct ExponentResult {
    ExtRational value;
    Status status = Status::Exact;
    bool nondegenerate = false;
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;
    std::optional<SixQuantities> six;
    std::optional<PairReport> pair;
    std::optional<NondegeneracyReport> segments;
};

SixQuantities six_quantities(const SparsePoly& f, const SparsePoly& g);

// Same six quantities with the side polygons truncated to declivity <= 1.
SixQuantities six_quantities_truncated(const SparsePoly& f, const SparsePoly& g);

ExponentResult loj_pair(const SparsePoly& f, const SparsePoly& g);
ExponentResult loj_gradient(const SparsePoly& h);
ExponentResult relative_bound(const SparsePoly& f, const SparsePoly& g, Var var);

struct IdentityClause {
    std::string name;
    std::string detail;
    bool pass = false;
};

struct ReductionReport {
    // "newton-polygon" or "bilinear-special-case"
    std::string routing;
    std::vector<IdentityClause> clauses;
    std::vector<std::string> notes;
    ExtRational m_right = ExtRational::plus_infinity();
    ExtRational m_top = ExtRational::plus_infinity();
    ExtRational gradient_value;

    bool all_pass() const;
};

// Checks the combinatorial identities linking the polygons of h with those of
// its partial derivatives. Throws DomainError, naming the failed hypothesis,
// when h has a vanishing partial or is divisible by X^2 or Y^2.
ReductionReport reduction_identities(const SparsePoly& h);

}  // namespace newtonloj
