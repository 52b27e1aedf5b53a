#include "newtonloj/initial_forms.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "newtonloj/errors.hpp"

namespace newtonloj {

namespace {

std::int64_t cross(const ExponentPair& o, const ExponentPair& a, const ExponentPair& b)
{
    const std::int64_t ax = a.alpha - o.alpha, ay = a.beta - o.beta;
    const std::int64_t bx = b.alpha - o.alpha, by = b.beta - o.beta;
    return ax * by - ay * bx;
}

ExponentPair normalized(ExponentPair v)
{
    if (v.beta < 0 || (v.beta == 0 && v.alpha < 0))
        return {-v.alpha, -v.beta};
    return v;
}

}  // namespace

InitialForm initial_form(const SparsePoly& h, const Segment& s)
{
    if (h.coeff(s.lower()).is_zero() || h.coeff(s.upper()).is_zero())
        throw DomainError("segment " + s.to_string() + " has an endpoint outside the support");
    int above = 0, below = 0;
    SparsePoly out;
    for (const auto& [e, c] : h.terms()) {
        const std::int64_t side = cross(s.lower(), s.upper(), e);
        if (side > 0)
            ++above;
        else if (side < 0)
            ++below;
        else if (!s.contains(e))
            throw DomainError("segment " + s.to_string() + " is not a boundary segment");
        else
            out.add_term(e, c);
    }
    if (above > 0 && below > 0)
        throw DomainError("segment " + s.to_string() + " is not a boundary segment");
    return {s, std::move(out)};
}

SparsePoly UnivariateReduction::reconstruct() const
{
    SparsePoly out;
    for (int k = 0; k <= q.degree(); ++k)
        out.add_term({base.alpha + k * step.alpha, base.beta + k * step.beta}, q.coeff(k));
    return out;
}

LineReduction reduce_along(const SparsePoly& f, ExponentPair step)
{
    step = normalized(step);
    LineReduction out;
    if (f.is_zero())
        return out;
    const ExponentPair p0 = f.terms().begin()->first;
    const std::int64_t norm = static_cast<std::int64_t>(step.alpha) * step.alpha +
                              static_cast<std::int64_t>(step.beta) * step.beta;
    std::vector<std::pair<std::int64_t, GaussianRational>> ks;
    std::int64_t kmin = std::numeric_limits<std::int64_t>::max();
    std::int64_t kmax = std::numeric_limits<std::int64_t>::min();
    for (const auto& [e, c] : f.terms()) {
        const std::int64_t da = e.alpha - p0.alpha, db = e.beta - p0.beta;
        if (da * step.beta - db * step.alpha != 0)
            throw DomainError("support is not on a line of the requested direction");
        const std::int64_t k = (da * step.alpha + db * step.beta) / norm;
        ks.emplace_back(k, c);
        kmin = std::min(kmin, k);
        kmax = std::max(kmax, k);
    }
    std::vector<GaussianRational> coeffs(static_cast<std::size_t>(kmax - kmin) + 1);
    for (auto& [k, c] : ks)
        coeffs[static_cast<std::size_t>(k - kmin)] = c;
    out.base = {p0.alpha + static_cast<int>(kmin) * step.alpha, p0.beta + static_cast<int>(kmin) * step.beta};
    out.q = UPoly(std::move(coeffs));
    return out;
}

UnivariateReduction univariate_reduce(const InitialForm& inf, Side side)
{
    const Segment& s = inf.segment;
    UnivariateReduction r;
    r.side = side;
    r.d = s.lattice_length();
    if (side == Side::Right) {
        if (s.s2() == 0)
            throw DomainError("horizontal segment " + s.to_string() + " has no right-side reduction");
        r.base = s.lower();
        r.step = s.step();
        r.zeta = s.upper().alpha;
        r.theta = s.lower().beta;
    } else {
        if (s.s1() == 0)
            throw DomainError("vertical segment " + s.to_string() + " has no top-side reduction");
        const Segment sw = s.swapped();
        r.base = sw.lower().swapped();
        r.step = sw.step().swapped();
        r.zeta = sw.lower().beta;
        r.theta = sw.upper().alpha;
    }
    std::vector<GaussianRational> coeffs(static_cast<std::size_t>(r.d) + 1);
    for (int k = 0; k <= r.d; ++k)
        coeffs[static_cast<std::size_t>(k)] = inf.poly.coeff({r.base.alpha + k * r.step.alpha, r.base.beta + k * r.step.beta});
    r.q = UPoly(std::move(coeffs));
    return r;
}

bool have_common_torus_zero(const SparsePoly& a, const SparsePoly& b, ExponentPair step)
{
    // Both sides are monomial * q(m) with m = X^step; m sweeps C* as (x, y) sweeps the torus.
    if (a.is_zero() && b.is_zero())
        return true;
    if (a.is_zero())
        return reduce_along(b, step).q.degree() >= 1;
    if (b.is_zero())
        return reduce_along(a, step).q.degree() >= 1;
    return gcd(reduce_along(a, step).q, reduce_along(b, step).q).degree() >= 1;
}

bool segment_nondegenerate(const SparsePoly& h, const Segment& s)
{
    const InitialForm inf = initial_form(h, s);
    return !have_common_torus_zero(partial_derivative(inf.poly, Var::X), partial_derivative(inf.poly, Var::Y),
                                   s.step());
}

std::optional<bool> segment_nondegenerate_shortcut(const SparsePoly& h, const Segment& s)
{
    const ExponentPair origin{0, 0};
    if (cross(s.lower(), s.upper(), origin) == 0) {
        if (s.lower() == origin || s.upper() == origin)
            return std::nullopt;
        return false;
    }
    return is_squarefree(reduce_along(initial_form(h, s).poly, s.step()).q);
}

NondegeneracyReport poly_nondegenerate_at_infinity(const SparsePoly& h)
{
    if (h.is_zero())
        throw DomainError("nondegeneracy of the zero polynomial");
    const Diagram d = newton_diagram(h);
    NondegeneracyReport report;
    const SidePolygon right = side_polygon(d, Side::Right);
    const SidePolygon top = side_polygon(d, Side::Top);
    auto check = [&](const Segment& s, Side side) {
        SegmentVerdict v{side, s, segment_nondegenerate(h, s), ""};
        v.reason = v.nondegenerate ? "ok" : "common-torus-zero";
        report.nondegenerate = report.nondegenerate && v.nondegenerate;
        report.segments.push_back(std::move(v));
    };
    for (const auto& s : right.segments)
        check(s, Side::Right);
    for (const auto& s : top.segments)
        if (!right.contains(s))
            check(s, Side::Top);
    return report;
}

namespace {

struct PolygonSegment {
    Segment segment;
    bool right = false;
    bool top = false;
};

std::vector<PolygonSegment> polygon_at_infinity(const SparsePoly& p)
{
    const Diagram d = newton_diagram(p);
    const SidePolygon right = side_polygon(d, Side::Right);
    const SidePolygon top = side_polygon(d, Side::Top);
    std::vector<PolygonSegment> out;
    for (const auto& s : right.segments)
        out.push_back({s, true, top.contains(s)});
    for (const auto& s : top.segments)
        if (!right.contains(s))
            out.push_back({s, false, true});
    return out;
}

}  // namespace

PairReport pair_nondegenerate(const SparsePoly& f, const SparsePoly& g)
{
    if (f.is_zero() || g.is_zero())
        throw DomainError("pair nondegeneracy needs nonzero polynomials");
    PairReport report;
    const auto fs = polygon_at_infinity(f);
    const auto gs = polygon_at_infinity(g);
    for (const auto& s : fs) {
        for (const auto& t : gs) {
            if (!s.segment.parallel_to(t.segment))
                continue;
            const bool both_right = s.right && t.right;
            const bool both_top = s.top && t.top;
            if (!both_right && !both_top) {
                report.cross_side_parallel.push_back({s.segment, s.right ? Side::Right : Side::Top, t.segment,
                                                      t.right ? Side::Right : Side::Top, "cross-side-parallel"});
                continue;
            }
            const Side side = both_right ? Side::Right : Side::Top;
            const SparsePoly in_f = initial_form(f, s.segment).poly;
            const SparsePoly in_g = initial_form(g, t.segment).poly;
            if (have_common_torus_zero(in_f, in_g, s.segment.step())) {
                report.nondegenerate = false;
                if (!report.witness)
                    report.witness = PairWitness{s.segment, side, t.segment, side, "common-torus-zero"};
            }
        }
    }
    return report;
}

const char* to_string(SegmentClass c)
{
    switch (c) {
    case SegmentClass::Standard:
        return "standard";
    case SegmentClass::LowerNonStandard:
        return "lower-non-standard";
    case SegmentClass::UpperNonStandard:
        return "upper-non-standard";
    }
    return "?";
}

std::vector<DerivSegmentClass> classify_derivative_polygon(const SparsePoly& h, Var var, Side side)
{
    if (side == Side::Top) {
        // The top polygon of h is the right polygon of h(Y, X).
        auto out = classify_derivative_polygon(h.swapped(), other(var), Side::Right);
        for (auto& c : out) {
            c.segment = c.segment.swapped();
            if (c.parent)
                c.parent = c.parent->swapped();
        }
        return out;
    }
    const SparsePoly deriv = partial_derivative(h, var);
    if (deriv.is_zero())
        throw DomainError(std::string("derivative with respect to ") + to_char(var) + " is zero");
    const SidePolygon hp = side_polygon(h, Side::Right);
    const SidePolygon dp = side_polygon(deriv, Side::Right);
    const int da = var == Var::X ? 1 : 0;
    const int db = var == Var::Y ? 1 : 0;

    // First and last right vertices of h with positive abscissa (strip bounds for d/dX).
    int nu1 = 0, nu2 = 0;
    if (var == Var::X) {
        std::vector<ExponentPair> verts;
        for (const auto& s : hp.segments) {
            verts.push_back(s.lower());
            verts.push_back(s.upper());
        }
        std::sort(verts.begin(), verts.end(), [](const auto& a, const auto& b) { return a.beta < b.beta; });
        bool found = false;
        for (const auto& v : verts) {
            if (v.alpha <= 0)
                continue;
            if (!found)
                nu1 = v.beta;
            nu2 = v.beta;
            found = true;
        }
        if (!found && !dp.empty())
            throw std::logic_error("right polygon of the derivative without positive-abscissa vertices");
    }

    std::vector<DerivSegmentClass> out;
    for (const auto& t : dp.segments) {
        const Segment lifted = t.translated(da, db);
        if (hp.contains(lifted)) {
            out.push_back({t, SegmentClass::Standard, lifted});
            continue;
        }
        if (var == Var::Y || t.upper().beta <= nu1) {
            out.push_back({t, SegmentClass::LowerNonStandard, std::nullopt});
        } else if (t.lower().beta >= nu2) {
            out.push_back({t, SegmentClass::UpperNonStandard, std::nullopt});
        } else {
            throw std::logic_error("non-standard segment " + t.to_string() + " between the strips");
        }
    }
    return out;
}

}  // namespace newtonloj
