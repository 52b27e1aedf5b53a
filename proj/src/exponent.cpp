#include "newtonloj/exponent.hpp"

#include <stdexcept>

#include "newtonloj/errors.hpp"

namespace newtonloj {

const char* to_string(Status s)
{
    switch (s) {
    case Status::Exact:
        return "exact";
    case Status::UpperBound:
        return "upper-bound";
    case Status::MinusInfinity:
        return "minus-infinity";
    case Status::SpecialCase:
        return "special-case";
    }
    return "?";
}

std::array<ExtRational, 6> SixQuantities::values() const
{
    return {degH_X0, alpha_f_over_g, alpha_g_over_f, degH_0Y, beta_f_over_g, beta_g_over_f};
}

ExtRational SixQuantities::x_minimum() const
{
    return min(degH_X0, min(alpha_f_over_g, alpha_g_over_f));
}

ExtRational SixQuantities::y_minimum() const
{
    return min(degH_0Y, min(beta_f_over_g, beta_g_over_f));
}

ExtRational SixQuantities::minimum() const
{
    return min(x_minimum(), y_minimum());
}

namespace {

ExtRational axis_degree(const SparsePoly& p, Var zeroed)
{
    return degree_stats(p.restrict_to_axis(zeroed)).deg;
}

std::vector<Segment> truncate(const SidePolygon& poly, bool truncated)
{
    if (!truncated)
        return poly.segments;
    std::vector<Segment> out;
    for (const auto& s : poly.segments)
        if (declivity(s, poly.side) <= 1)
            out.push_back(s);
    return out;
}

ExtRational infimum(const std::vector<Segment>& segs, const SparsePoly& other, Side side)
{
    ExtRational best = ExtRational::plus_infinity();
    for (const auto& s : segs)
        best = min(best, ExtRational(weighted_intercept(s, other, side)));
    return best;
}

SixQuantities six_impl(const SparsePoly& f, const SparsePoly& g, bool truncated)
{
    if (f.is_zero() || g.is_zero())
        throw DomainError("six quantities need nonzero polynomials");
    const SidePolygon fr = side_polygon(f, Side::Right), ft = side_polygon(f, Side::Top);
    const SidePolygon gr = side_polygon(g, Side::Right), gt = side_polygon(g, Side::Top);
    SixQuantities q;
    q.degH_X0 = max(axis_degree(f, Var::Y), axis_degree(g, Var::Y));
    q.degH_0Y = max(axis_degree(f, Var::X), axis_degree(g, Var::X));
    q.alpha_f_over_g = infimum(truncate(fr, truncated), g, Side::Right);
    q.alpha_g_over_f = infimum(truncate(gr, truncated), f, Side::Right);
    q.beta_f_over_g = infimum(truncate(ft, truncated), g, Side::Top);
    q.beta_g_over_f = infimum(truncate(gt, truncated), f, Side::Top);
    return q;
}

// Appends one witness per segment of the given polygon, flagging those attaining `target`.
void add_intercept_witnesses(std::vector<Witness>& out, const std::string& quantity, const SidePolygon& poly,
                             const SparsePoly& other, const ExtRational& target)
{
    for (const auto& s : poly.segments) {
        Rational v = weighted_intercept(s, other, poly.side);
        const bool attains = ExtRational(v) == target;
        out.push_back({quantity, poly.side, s, std::move(v), attains});
    }
}

std::string pair_witness_text(const PairWitness& w)
{
    return std::string(to_string(w.s_side)) + " " + w.s.to_string() + " / " + to_string(w.t_side) + " " +
           w.t.to_string() + ": " + w.reason;
}

bool divisible_by_square(const SparsePoly& h, Var v)
{
    for (const auto& [e, c] : h.terms())
        if ((v == Var::X ? e.alpha : e.beta) < 2)
            return false;
    return true;
}

}  // namespace

SixQuantities six_quantities(const SparsePoly& f, const SparsePoly& g)
{
    return six_impl(f, g, false);
}

SixQuantities six_quantities_truncated(const SparsePoly& f, const SparsePoly& g)
{
    return six_impl(f, g, true);
}

ExponentResult loj_pair(const SparsePoly& f, const SparsePoly& g)
{
    ExponentResult r;
    r.six = six_quantities(f, g);
    r.value = r.six->minimum();
    r.pair = pair_nondegenerate(f, g);
    r.nondegenerate = r.pair->nondegenerate;
    if (r.value.is_minus_infinity())
        r.status = Status::MinusInfinity;
    else
        r.status = r.nondegenerate ? Status::Exact : Status::UpperBound;
    if (r.pair->witness)
        r.notes.push_back("degenerate pair: " + pair_witness_text(*r.pair->witness));
    for (const auto& w : r.pair->cross_side_parallel)
        r.notes.push_back("parallel segments on opposite sides (not a degeneracy): " + pair_witness_text(w));

    add_intercept_witnesses(r.witnesses, "alpha(S,Dg)", side_polygon(f, Side::Right), g, r.value);
    add_intercept_witnesses(r.witnesses, "alpha(T,Df)", side_polygon(g, Side::Right), f, r.value);
    add_intercept_witnesses(r.witnesses, "beta(S,Dg)", side_polygon(f, Side::Top), g, r.value);
    add_intercept_witnesses(r.witnesses, "beta(T,Df)", side_polygon(g, Side::Top), f, r.value);
    return r;
}

ExponentResult relative_bound(const SparsePoly& f, const SparsePoly& g, Var var)
{
    ExponentResult r;
    r.six = six_quantities(f, g);
    r.value = var == Var::X ? r.six->x_minimum() : r.six->y_minimum();
    r.pair = pair_nondegenerate(f, g);
    r.nondegenerate = r.pair->nondegenerate;
    if (r.value.is_minus_infinity())
        r.status = Status::MinusInfinity;
    else
        r.status = r.nondegenerate ? Status::Exact : Status::UpperBound;
    if (r.pair->witness)
        r.notes.push_back("degenerate pair: " + pair_witness_text(*r.pair->witness));
    const Side side = var == Var::X ? Side::Right : Side::Top;
    const std::string a = var == Var::X ? "alpha" : "beta";
    add_intercept_witnesses(r.witnesses, a + "(S,Dg)", side_polygon(f, side), g, r.value);
    add_intercept_witnesses(r.witnesses, a + "(T,Df)", side_polygon(g, side), f, r.value);
    return r;
}

ExponentResult loj_gradient(const SparsePoly& input)
{
    if (input.is_constant())
        throw DomainError("gradient exponent of a constant polynomial");
    ExponentResult r;
    SparsePoly h = input;
    const GaussianRational c0 = h.coeff({0, 0});
    if (!c0.is_zero()) {
        h.add_term({0, 0}, -c0);
        r.notes.push_back("constant term " + c0.to_string() + " removed");
    }
    const SparsePoly hx = partial_derivative(h, Var::X);
    const SparsePoly hy = partial_derivative(h, Var::Y);

    if (hx.is_zero() || hy.is_zero()) {
        // The surviving component is a polynomial in one variable: a nonzero
        // constant keeps |grad h| bounded below, otherwise it vanishes on a whole line.
        const SparsePoly& other = hx.is_zero() ? hy : hx;
        r.status = Status::SpecialCase;
        r.nondegenerate = false;
        r.value = other.is_constant() ? ExtRational(0) : ExtRational::minus_infinity();
        r.notes.push_back(std::string("zero gradient component d/d") + (hx.is_zero() ? "X" : "Y"));
        return r;
    }
    if (divisible_by_square(h, Var::X) || divisible_by_square(h, Var::Y)) {
        r.status = Status::MinusInfinity;
        r.value = ExtRational::minus_infinity();
        r.notes.push_back(std::string("h divisible by ") + (divisible_by_square(h, Var::X) ? "X^2" : "Y^2"));
        return r;
    }

    const Diagram d = newton_diagram(h);
    const SidePolygon right = side_polygon(d, Side::Right);
    const SidePolygon top = side_polygon(d, Side::Top);
    const auto right_ne = right.non_exceptional();
    const auto top_ne = top.non_exceptional();

    if (right_ne.empty() && top_ne.empty()) {
        for (const auto& [e, c] : h.terms())
            if (!(e == ExponentPair{1, 0} || e == ExponentPair{0, 1} || e == ExponentPair{1, 1}))
                throw std::logic_error("exceptional-only polygons but h is not aX + bY + cXY");
        const bool has_c = !h.coeff({1, 1}).is_zero();
        r.status = Status::SpecialCase;
        r.nondegenerate = false;
        r.value = has_c ? ExtRational(1) : ExtRational(0);
        r.notes.push_back(has_c ? "h = aX + bY + cXY with c != 0" : "h = aX + bY with ab != 0");
        return r;
    }

    ExtRational best = ExtRational::plus_infinity();
    for (const auto& s : right_ne)
        best = min(best, ExtRational(axis_intercept(s, Axis::Horizontal)));
    for (const auto& s : top_ne)
        best = min(best, ExtRational(axis_intercept(s, Axis::Vertical)));
    for (const auto& s : right_ne) {
        Rational v = axis_intercept(s, Axis::Horizontal);
        const bool attains = ExtRational(v) == best;
        r.witnesses.push_back({"alpha(S)", Side::Right, s, std::move(v), attains});
    }
    for (const auto& s : top_ne) {
        Rational v = axis_intercept(s, Axis::Vertical);
        const bool attains = ExtRational(v) == best;
        r.witnesses.push_back({"beta(S)", Side::Top, s, std::move(v), attains});
    }
    for (std::size_t i = 0; i < right.size(); ++i)
        if (right.exceptional[i])
            r.notes.push_back("exceptional right segment " + right.segments[i].to_string() + " skipped");
    for (std::size_t i = 0; i < top.size(); ++i)
        if (top.exceptional[i])
            r.notes.push_back("exceptional top segment " + top.segments[i].to_string() + " skipped");

    r.value = best - Rational(1);
    r.segments = poly_nondegenerate_at_infinity(h);
    r.nondegenerate = r.segments->nondegenerate;
    r.status = r.nondegenerate ? Status::Exact : Status::UpperBound;
    r.six = six_quantities(hx, hy);
    return r;
}

bool ReductionReport::all_pass() const
{
    for (const auto& c : clauses)
        if (!c.pass)
            return false;
    return true;
}

namespace {

void add_clause(ReductionReport& rep, std::string name, const ExtRational& lhs, const char* op, const ExtRational& rhs)
{
    bool pass = false;
    const std::string o = op;
    if (o == "=")
        pass = lhs == rhs;
    else if (o == ">=")
        pass = lhs >= rhs;
    else
        throw std::logic_error("unknown clause operator");
    rep.clauses.push_back({std::move(name), lhs.to_string() + " " + o + " " + rhs.to_string(), pass});
}

}  // namespace

ReductionReport reduction_identities(const SparsePoly& input)
{
    if (input.is_constant())
        throw DomainError("hypothesis violated: h is constant");
    ReductionReport rep;
    SparsePoly h = input;
    const GaussianRational c0 = h.coeff({0, 0});
    if (!c0.is_zero()) {
        h.add_term({0, 0}, -c0);
        rep.notes.push_back("constant term " + c0.to_string() + " removed");
    }
    const SparsePoly hx = partial_derivative(h, Var::X);
    const SparsePoly hy = partial_derivative(h, Var::Y);
    if (hx.is_zero())
        throw DomainError("hypothesis violated: dh/dX is zero");
    if (hy.is_zero())
        throw DomainError("hypothesis violated: dh/dY is zero");
    if (divisible_by_square(h, Var::X))
        throw DomainError("hypothesis violated: h is divisible by X^2");
    if (divisible_by_square(h, Var::Y))
        throw DomainError("hypothesis violated: h is divisible by Y^2");

    const Diagram d = newton_diagram(h);
    const SidePolygon right = side_polygon(d, Side::Right);
    const SidePolygon top = side_polygon(d, Side::Top);
    const auto right_ne = right.non_exceptional();
    const auto top_ne = top.non_exceptional();
    const DegreeStats ds = degree_stats(h);

    rep.clauses.push_back({"right-non-exceptional-iff-degY>=2",
                           "non-exceptional right segment: " + std::string(right_ne.empty() ? "no" : "yes") +
                               ", deg_Y h = " + ds.deg_y.to_string(),
                           right_ne.empty() != (ds.deg_y >= ExtRational(2))});
    rep.clauses.push_back({"top-non-exceptional-iff-degX>=2",
                           "non-exceptional top segment: " + std::string(top_ne.empty() ? "no" : "yes") +
                               ", deg_X h = " + ds.deg_x.to_string(),
                           top_ne.empty() != (ds.deg_x >= ExtRational(2))});

    rep.gradient_value = loj_gradient(h).value;
    if (right_ne.empty() && top_ne.empty()) {
        rep.routing = "bilinear-special-case";
        return rep;
    }
    rep.routing = "newton-polygon";

    for (const auto& s : right.segments) {
        const Rational a = axis_intercept(s, Axis::Horizontal);
        add_clause(rep, "right " + s.to_string() + ": alpha(S, D_hX) = alpha(S) - 1",
                   weighted_intercept(s, hx, Side::Right), "=", ExtRational(a - 1));
        add_clause(rep, "right " + s.to_string() + ": alpha(S, D_hY) = alpha(S) - decl(S)",
                   weighted_intercept(s, hy, Side::Right), "=", ExtRational(a - declivity(s, Side::Right)));
    }
    for (const auto& s : top.segments) {
        const Rational b = axis_intercept(s, Axis::Vertical);
        add_clause(rep, "top " + s.to_string() + ": beta(S, D_hY) = beta(S) - 1",
                   weighted_intercept(s, hy, Side::Top), "=", ExtRational(b - 1));
        add_clause(rep, "top " + s.to_string() + ": beta(S, D_hX) = beta(S) - decl(S)",
                   weighted_intercept(s, hx, Side::Top), "=", ExtRational(b - declivity(s, Side::Top)));
    }

    const SixQuantities six = six_quantities(hx, hy);
    rep.m_right = six.x_minimum();
    rep.m_top = six.y_minimum();
    if (!right_ne.empty()) {
        const Segment& f = right_ne.front();
        const Rational a = axis_intercept(f, Axis::Horizontal);
        const ExtRational upper(Rational(a - 1));
        add_clause(rep, "right bracket: alpha(F) - 1 >= m_right", upper, ">=", rep.m_right);
        add_clause(rep, "right bracket: m_right >= min(alpha(F) - 1, alpha(F) - decl(F))", rep.m_right, ">=",
                   min(upper, ExtRational(Rational(a - declivity(f, Side::Right)))));
    }
    if (!top_ne.empty()) {
        const Segment& g = top_ne.front();
        const Rational b = axis_intercept(g, Axis::Vertical);
        const ExtRational upper(Rational(b - 1));
        add_clause(rep, "top bracket: beta(G) - 1 >= m_top", upper, ">=", rep.m_top);
        add_clause(rep, "top bracket: m_top >= min(beta(G) - 1, beta(G) - decl(G))", rep.m_top, ">=",
                   min(upper, ExtRational(Rational(b - declivity(g, Side::Top)))));
    }
    add_clause(rep, "gradient pair: full minimum = truncated minimum", six.minimum(), "=",
               six_quantities_truncated(hx, hy).minimum());
    add_clause(rep, "gradient pair minimum = polygon formula", min(rep.m_right, rep.m_top), "=", rep.gradient_value);
    return rep;
}

}  // namespace newtonloj
