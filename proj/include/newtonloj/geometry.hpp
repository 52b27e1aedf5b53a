#pragma once

#include <string>
#include <vector>

#include "newtonloj/poly.hpp"
#include "newtonloj/rational.hpp"

namespace newtonloj {

enum class Side { Right, Top };
enum class Axis { Horizontal, Vertical };

const char* to_string(Side s);

// Boundary segment with lattice endpoints. The lower endpoint has the smaller
// ordinate (ties: smaller abscissa). Projections and orientation are derived.
class Segment {
public:
    Segment(ExponentPair a, ExponentPair b);

    const ExponentPair& lower() const { return lower_; }
    const ExponentPair& upper() const { return upper_; }

    // |S1|, |S2|: lengths of the projections on the two axes.
    int s1() const;
    int s2() const;
    // 0 when axis-parallel, otherwise minus the sign of the slope.
    int sigma() const;
    // Number of lattice steps, gcd(s1, s2).
    int lattice_length() const;
    // Primitive step from lower to upper.
    ExponentPair step() const;
    std::vector<ExponentPair> lattice_points() const;

    bool parallel_to(const Segment& o) const;
    bool contains(const ExponentPair& p) const;
    Segment translated(int dalpha, int dbeta) const;
    Segment swapped() const { return Segment(lower_.swapped(), upper_.swapped()); }

    friend bool operator==(const Segment& a, const Segment& b)
    {
        return a.lower_ == b.lower_ && a.upper_ == b.upper_;
    }

    // "(4,0)-(7,1)"
    std::string to_string() const;

private:
    ExponentPair lower_;
    ExponentPair upper_;
};

// Convex hull of a support. Vertices run counterclockwise starting from the
// vertex with the smallest (beta, alpha); collinear boundary points are dropped.
struct Diagram {
    std::vector<ExponentPair> vertices;
    std::vector<ExponentPair> support;  // lexicographically sorted, no duplicates

    std::size_t source_support_size() const { return support.size(); }
    // Hull edges in vertex order (one edge for a segment hull, none for a point).
    std::vector<Segment> edges() const;
    // Labels A, B, ..., Z, AA, AB, ... matching edges().
    static std::string edge_label(std::size_t index);
};

Diagram newton_diagram(const SparsePoly& p);
Diagram newton_diagram(std::vector<ExponentPair> points);

// Side polygon at infinity: right ordered by ordinate, top ordered by abscissa.
struct SidePolygon {
    Side side = Side::Right;
    std::vector<Segment> segments;
    std::vector<bool> exceptional;

    bool empty() const { return segments.empty(); }
    std::size_t size() const { return segments.size(); }
    bool contains(const Segment& s) const;
    // Segments without the exceptional one.
    std::vector<Segment> non_exceptional() const;
};

SidePolygon side_polygon(const Diagram& d, Side side);
SidePolygon side_polygon(const SparsePoly& p, Side side);

bool is_exceptional(const Segment& s, Side side);

// Right: (|S1|/|S2|) sigma; top: (|S2|/|S1|) sigma. Throws DomainError when undefined.
Rational declivity(const Segment& s, Side side);

// alpha(S) for the horizontal axis, beta(S) for the vertical one.
Rational axis_intercept(const Segment& s, Axis axis);

// Right: max of alpha + beta * decl over the support; top: max of alpha * decl + beta.
Rational weighted_intercept(const Segment& s, const std::vector<ExponentPair>& support, Side side);
Rational weighted_intercept(const Segment& s, const Diagram& d, Side side);
Rational weighted_intercept(const Segment& s, const SparsePoly& p, Side side);

}  // namespace newtonloj
