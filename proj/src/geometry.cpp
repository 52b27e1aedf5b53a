#include "newtonloj/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "newtonloj/errors.hpp"

namespace newtonloj {

const char* to_string(Side s)
{
    return s == Side::Right ? "right" : "top";
}

namespace {

bool lower_first(const ExponentPair& a, const ExponentPair& b)
{
    return a.beta != b.beta ? a.beta < b.beta : a.alpha < b.alpha;
}

std::int64_t cross(const ExponentPair& o, const ExponentPair& a, const ExponentPair& b)
{
    const std::int64_t ax = a.alpha - o.alpha, ay = a.beta - o.beta;
    const std::int64_t bx = b.alpha - o.alpha, by = b.beta - o.beta;
    return ax * by - ay * bx;
}

}  // namespace

Segment::Segment(ExponentPair a, ExponentPair b)
{
    if (a == b)
        throw DomainError("segment endpoints coincide");
    if (lower_first(b, a))
        std::swap(a, b);
    lower_ = a;
    upper_ = b;
}

int Segment::s1() const
{
    return std::abs(upper_.alpha - lower_.alpha);
}

int Segment::s2() const
{
    return upper_.beta - lower_.beta;
}

int Segment::sigma() const
{
    const int da = upper_.alpha - lower_.alpha;
    const int db = upper_.beta - lower_.beta;
    if (da == 0 || db == 0)
        return 0;
    return (da > 0) == (db > 0) ? -1 : 1;
}

int Segment::lattice_length() const
{
    return std::gcd(s1(), s2());
}

ExponentPair Segment::step() const
{
    const int d = lattice_length();
    return {(upper_.alpha - lower_.alpha) / d, (upper_.beta - lower_.beta) / d};
}

std::vector<ExponentPair> Segment::lattice_points() const
{
    const ExponentPair st = step();
    std::vector<ExponentPair> out;
    const int d = lattice_length();
    for (int k = 0; k <= d; ++k)
        out.push_back({lower_.alpha + k * st.alpha, lower_.beta + k * st.beta});
    return out;
}

bool Segment::parallel_to(const Segment& o) const
{
    return step() == o.step();
}

bool Segment::contains(const ExponentPair& p) const
{
    if (cross(lower_, upper_, p) != 0)
        return false;
    const int lo_a = std::min(lower_.alpha, upper_.alpha), hi_a = std::max(lower_.alpha, upper_.alpha);
    return p.alpha >= lo_a && p.alpha <= hi_a && p.beta >= lower_.beta && p.beta <= upper_.beta;
}

Segment Segment::translated(int dalpha, int dbeta) const
{
    return Segment({lower_.alpha + dalpha, lower_.beta + dbeta}, {upper_.alpha + dalpha, upper_.beta + dbeta});
}

std::string Segment::to_string() const
{
    auto pt = [](const ExponentPair& p) { return "(" + std::to_string(p.alpha) + "," + std::to_string(p.beta) + ")"; };
    return pt(lower_) + "-" + pt(upper_);
}

std::vector<Segment> Diagram::edges() const
{
    std::vector<Segment> out;
    if (vertices.size() == 2) {
        out.emplace_back(vertices[0], vertices[1]);
    } else if (vertices.size() > 2) {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
    }
    return out;
}

std::string Diagram::edge_label(std::size_t index)
{
    std::string out;
    ++index;
    while (index > 0) {
        --index;
        out.insert(out.begin(), static_cast<char>('A' + index % 26));
        index /= 26;
    }
    return out;
}

Diagram newton_diagram(std::vector<ExponentPair> pts)
{
    if (pts.empty())
        throw DomainError("Newton diagram of the zero polynomial");
    std::sort(pts.begin(), pts.end(), LexLess{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Diagram d;
    d.support = pts;
    if (pts.size() == 1) {
        d.vertices = pts;
        return d;
    }
    // Andrew's monotone chain; non-left turns are popped so collinear points vanish.
    std::vector<ExponentPair> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0)
            --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    // A collinear support leaves the two extremes, possibly duplicated.
    if (hull.size() == 2 || (hull.size() > 2 && cross(hull[0], hull[1], hull[2]) == 0)) {
        hull = {pts.front(), pts.back()};
    }
    auto start = std::min_element(hull.begin(), hull.end(), lower_first);
    std::rotate(hull.begin(), start, hull.end());
    d.vertices = std::move(hull);
    return d;
}

Diagram newton_diagram(const SparsePoly& p)
{
    if (p.is_zero())
        throw DomainError("Newton diagram of the zero polynomial");
    return newton_diagram(p.support());
}

bool SidePolygon::contains(const Segment& s) const
{
    return std::find(segments.begin(), segments.end(), s) != segments.end();
}

std::vector<Segment> SidePolygon::non_exceptional() const
{
    std::vector<Segment> out;
    for (std::size_t i = 0; i < segments.size(); ++i)
        if (!exceptional[i])
            out.push_back(segments[i]);
    return out;
}

SidePolygon side_polygon(const Diagram& d, Side side)
{
    SidePolygon poly;
    poly.side = side;
    if (d.vertices.size() == 2) {
        Segment s(d.vertices[0], d.vertices[1]);
        if ((side == Side::Right && s.s2() != 0) || (side == Side::Top && s.s1() != 0))
            poly.segments.push_back(s);
    } else if (d.vertices.size() > 2) {
        const std::size_t n = d.vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            const ExponentPair& a = d.vertices[i];
            const ExponentPair& b = d.vertices[(i + 1) % n];
            // Counterclockwise traversal: the right chain climbs, the top chain moves left.
            const bool on_side = side == Side::Right ? b.beta > a.beta : b.alpha < a.alpha;
            if (on_side)
                poly.segments.emplace_back(a, b);
        }
    }
    if (side == Side::Right) {
        std::sort(poly.segments.begin(), poly.segments.end(),
                  [](const Segment& x, const Segment& y) { return x.lower().beta < y.lower().beta; });
    } else {
        auto min_alpha = [](const Segment& s) { return std::min(s.lower().alpha, s.upper().alpha); };
        std::sort(poly.segments.begin(), poly.segments.end(),
                  [&](const Segment& x, const Segment& y) { return min_alpha(x) < min_alpha(y); });
    }
    for (const auto& s : poly.segments)
        poly.exceptional.push_back(is_exceptional(s, side));
    return poly;
}

SidePolygon side_polygon(const SparsePoly& p, Side side)
{
    if (p.is_zero()) {
        SidePolygon empty;
        empty.side = side;
        return empty;
    }
    return side_polygon(newton_diagram(p), side);
}

bool is_exceptional(const Segment& s, Side side)
{
    const ExponentPair& a = s.lower();
    const ExponentPair& b = s.upper();
    if (side == Side::Right)
        return (a.beta == 0 && b.beta == 1) || (b.beta == 0 && a.beta == 1);
    return (a.alpha == 0 && b.alpha == 1) || (b.alpha == 0 && a.alpha == 1);
}

Rational declivity(const Segment& s, Side side)
{
    if (side == Side::Right) {
        if (s.s2() == 0)
            throw DomainError("right declivity of a horizontal segment " + s.to_string());
        return make_rational(s.s1() * s.sigma(), s.s2());
    }
    if (s.s1() == 0)
        throw DomainError("top declivity of a vertical segment " + s.to_string());
    return make_rational(s.s2() * s.sigma(), s.s1());
}

Rational axis_intercept(const Segment& s, Axis axis)
{
    const ExponentPair& p = s.lower();
    if (axis == Axis::Horizontal)
        return Rational(p.alpha) + Rational(p.beta) * declivity(s, Side::Right);
    return Rational(p.alpha) * declivity(s, Side::Top) + Rational(p.beta);
}

Rational weighted_intercept(const Segment& s, const std::vector<ExponentPair>& support, Side side)
{
    if (support.empty())
        throw DomainError("weighted intercept over an empty support");
    const Rational decl = declivity(s, side);
    Rational best;
    bool first = true;
    for (const auto& p : support) {
        Rational v = side == Side::Right ? Rational(Rational(p.alpha) + Rational(p.beta) * decl)
                                         : Rational(Rational(p.alpha) * decl + Rational(p.beta));
        if (first || v > best) {
            best = v;
            first = false;
        }
    }
    best.canonicalize();
    return best;
}

Rational weighted_intercept(const Segment& s, const Diagram& d, Side side)
{
    return weighted_intercept(s, d.support, side);
}

Rational weighted_intercept(const Segment& s, const SparsePoly& p, Side side)
{
    return weighted_intercept(s, p.support(), side);
}

}  // namespace newtonloj
