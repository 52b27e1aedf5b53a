#include "newtonloj/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "newtonloj/errors.hpp"

namespace newtonloj {

namespace {

Json integer_json(const mpz_class& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();  // beyond 64 bits: decimal string
}

Json pair_json(const ExponentPair& e)
{
    return Json::array({e.alpha, e.beta});
}

Json witness_json(const PairWitness& w)
{
    return {{"s", segment_json(w.s)},
            {"s_side", to_string(w.s_side)},
            {"t", segment_json(w.t)},
            {"t_side", to_string(w.t_side)},
            {"reason", w.reason}};
}

Json polygon_json(const std::vector<PolygonEntry>& poly)
{
    Json out = Json::array();
    for (const auto& p : poly)
        out.push_back({{"label", p.label},
                       {"segment", segment_json(p.segment)},
                       {"declivity", exponent_json(p.declivity)},
                       {"exceptional", p.exceptional}});
    return out;
}

std::vector<PolygonEntry> polygon_entries(const Diagram& d, Side side)
{
    const SidePolygon poly = side_polygon(d, side);
    const std::vector<Segment> edges = d.edges();
    std::vector<PolygonEntry> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto it = std::find(edges.begin(), edges.end(), poly.segments[i]);
        const std::string label =
            it == edges.end() ? "?" : Diagram::edge_label(static_cast<std::size_t>(it - edges.begin()));
        out.push_back({label, poly.segments[i], declivity(poly.segments[i], side), poly.exceptional[i] != 0});
    }
    return out;
}

std::string labels_of(const std::vector<PolygonEntry>& poly)
{
    std::string out;
    for (const auto& p : poly)
        out += (out.empty() ? "" : ", ") + p.label;
    return "{" + out + "}";
}

std::string fixed(double v, int digits = 6)
{
    if (std::isinf(v))
        return v > 0 ? "+inf" : "-inf";
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

}  // namespace

Json exponent_json(const ExtRational& v)
{
    if (!v.is_finite())
        return v.to_string();
    return {{"num", integer_json(v.value().get_num())}, {"den", integer_json(v.value().get_den())}};
}

Json exponent_float_json(const ExtRational& v)
{
    if (!v.is_finite())
        return v.to_string();
    return v.to_double();
}

Json segment_json(const Segment& s)
{
    return Json::array({pair_json(s.lower()), pair_json(s.upper())});
}

DiagramReport diagram_report(const SparsePoly& h)
{
    if (h.is_zero())
        throw DomainError("diagram of the zero polynomial");
    const Diagram d = newton_diagram(h);
    DiagramReport r;
    r.polynomial = h.to_string();
    r.vertices = d.vertices;
    r.support_size = d.source_support_size();
    r.right = polygon_entries(d, Side::Right);
    r.top = polygon_entries(d, Side::Top);
    return r;
}

Json to_json(const DiagramReport& d)
{
    Json vertices = Json::array();
    for (const auto& v : d.vertices)
        vertices.push_back(pair_json(v));
    return {{"polynomial", d.polynomial},
            {"support_size", d.support_size},
            {"vertices", vertices},
            {"right_polygon", polygon_json(d.right)},
            {"top_polygon", polygon_json(d.top)}};
}

Json to_json(const SixQuantities& s)
{
    Json out = Json::array();
    for (const auto& v : s.values())
        out.push_back(exponent_json(v));
    return out;
}

Json to_json(const NondegeneracyReport& r)
{
    Json segs = Json::array();
    for (const auto& v : r.segments)
        segs.push_back({{"side", to_string(v.side)},
                        {"segment", segment_json(v.segment)},
                        {"nondegenerate", v.nondegenerate},
                        {"reason", v.reason}});
    return {{"nondegenerate", r.nondegenerate}, {"segments", segs}};
}

Json to_json(const PairReport& r)
{
    Json cross = Json::array();
    for (const auto& w : r.cross_side_parallel)
        cross.push_back(witness_json(w));
    return {{"nondegenerate", r.nondegenerate},
            {"witness", r.witness ? witness_json(*r.witness) : Json(nullptr)},
            {"cross_side_parallel", cross}};
}

Json to_json(const ExponentResult& r)
{
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses)
        witnesses.push_back({{"quantity", w.quantity},
                             {"side", to_string(w.side)},
                             {"segment", segment_json(w.segment)},
                             {"value", exponent_json(w.value)},
                             {"attains", w.attains}});
    Json out = {{"exponent", exponent_json(r.value)},
                {"exponent_float", exponent_float_json(r.value)},
                {"status", to_string(r.status)},
                {"nondegenerate", r.nondegenerate},
                {"six_quantities", r.six ? to_json(*r.six) : Json(nullptr)},
                {"witnesses", witnesses},
                {"notes", r.notes}};
    if (r.pair)
        out["pair_nondegeneracy"] = to_json(*r.pair);
    if (r.segments)
        out["segment_nondegeneracy"] = to_json(*r.segments);
    return out;
}

Json to_json(const ReductionReport& r)
{
    Json clauses = Json::array();
    for (const auto& c : r.clauses)
        clauses.push_back({{"name", c.name}, {"detail", c.detail}, {"pass", c.pass}});
    return {{"routing", r.routing},
            {"clauses", clauses},
            {"notes", r.notes},
            {"all_pass", r.all_pass()},
            {"m_right", exponent_json(r.m_right)},
            {"m_top", exponent_json(r.m_top)},
            {"gradient_exponent", exponent_json(r.gradient_value)}};
}

Json to_json(const std::vector<DerivSegmentClass>& cls)
{
    Json out = Json::array();
    for (const auto& c : cls)
        out.push_back({{"segment", segment_json(c.segment)},
                       {"class", to_string(c.cls)},
                       {"parent", c.parent ? segment_json(*c.parent) : Json(nullptr)}});
    return out;
}

Json to_json(const OracleEstimate& e)
{
    Json terms = Json::array();
    for (const auto& t : e.terms) {
        Json branch = nullptr;
        if (!t.branch.empty()) {
            const Branch& b = t.branch.front();
            Json coeffs = Json::array();
            for (const auto& m : t.branch)
                coeffs.push_back(Json::array({m.leading_coeff.real(), m.leading_coeff.imag()}));
            branch = {{"theta", exponent_json(b.theta)},
                      {"segment", segment_json(b.segment)},
                      {"solve_in", to_string(b.solve_in)},
                      {"multiplicity", b.multiplicity},
                      {"leading_coeffs", coeffs}};
        }
        terms.push_back({{"quantity", t.quantity},
                         {"symbolic", t.symbolic},
                         {"value", std::isinf(t.value) ? Json(fixed(t.value)) : Json(t.value)},
                         {"residual", t.residual},
                         {"branch", branch}});
    }
    return {{"estimate", std::isinf(e.value) ? Json(fixed(e.value)) : Json(e.value)},
            {"max_residual", e.max_residual},
            {"terms", terms}};
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

std::string format_text(const DiagramReport& d)
{
    std::ostringstream os;
    os << "polynomial: " << d.polynomial << "\n";
    os << "support: " << d.support_size << " points\n";
    os << "vertices:";
    for (const auto& v : d.vertices)
        os << " (" << v.alpha << "," << v.beta << ")";
    os << "\n";
    for (const auto* poly : {&d.right, &d.top}) {
        os << (poly == &d.right ? "right polygon: " : "top polygon: ") << labels_of(*poly) << "\n";
        for (const auto& p : *poly)
            os << "  " << p.label << " " << p.segment.to_string() << " declivity " << to_string(p.declivity)
               << (p.exceptional ? " exceptional" : "") << "\n";
    }
    return os.str();
}

std::string format_text(const ExponentResult& r)
{
    std::ostringstream os;
    os << "exponent: " << r.value.to_string();
    if (r.value.is_finite())
        os << " (" << fixed(r.value.to_double()) << ")";
    os << "\nstatus: " << to_string(r.status) << "\n";
    os << "nondegenerate: " << (r.nondegenerate ? "yes" : "no") << "\n";
    if (r.six) {
        os << "six quantities:";
        for (const auto& v : r.six->values())
            os << " " << v.to_string();
        os << "\n";
    }
    for (const auto& w : r.witnesses)
        os << "  " << w.quantity << " " << to_string(w.side) << " " << w.segment.to_string() << " = "
           << to_string(w.value) << (w.attains ? " (attains)" : "") << "\n";
    for (const auto& n : r.notes)
        os << "note: " << n << "\n";
    return os.str();
}

std::string format_text(const OracleEstimate& e)
{
    std::ostringstream os;
    os << "estimate: " << fixed(e.value) << "\n";
    os << "max residual: " << fixed(e.max_residual, 3) << "\n";
    for (const auto& t : e.terms) {
        os << "  " << t.quantity << " = " << fixed(t.value);
        if (!t.branch.empty())
            os << "  theta " << to_string(t.branch.front().theta) << " on " << t.branch.front().segment.to_string()
               << ", " << t.branch.size() << " conjugate(s), residual " << fixed(t.residual, 3);
        os << "\n";
    }
    return os.str();
}

std::string format_text(const ReductionReport& r)
{
    std::ostringstream os;
    os << "routing: " << r.routing << "\n";
    for (const auto& c : r.clauses)
        os << (c.pass ? "  pass " : "  FAIL ") << c.name << ": " << c.detail << "\n";
    os << "m_right " << r.m_right.to_string() << ", m_top " << r.m_top.to_string() << ", gradient exponent "
       << r.gradient_value.to_string() << "\n";
    for (const auto& n : r.notes)
        os << "note: " << n << "\n";
    return os.str();
}

std::string diagram_svg(const SparsePoly& h)
{
    const DiagramReport rep = diagram_report(h);
    const Diagram d = newton_diagram(h);
    constexpr int unit = 40, margin = 40;
    int amax = 1, bmax = 1;
    for (const auto& v : d.vertices) {
        amax = std::max(amax, v.alpha);
        bmax = std::max(bmax, v.beta);
    }
    const int width = amax * unit + 2 * margin, height = bmax * unit + 2 * margin;
    const auto px = [&](int a) { return margin + a * unit; };
    const auto py = [&](int b) { return height - margin - b * unit; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    for (int a = 0; a <= amax; ++a)
        os << "<line x1=\"" << px(a) << "\" y1=\"" << py(0) << "\" x2=\"" << px(a) << "\" y2=\"" << py(bmax)
           << "\" stroke=\"#eeeeee\"/>\n";
    for (int b = 0; b <= bmax; ++b)
        os << "<line x1=\"" << px(0) << "\" y1=\"" << py(b) << "\" x2=\"" << px(amax) << "\" y2=\"" << py(b)
           << "\" stroke=\"#eeeeee\"/>\n";
    os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(amax) << "\" y2=\"" << py(0)
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\"" << py(bmax)
       << "\" stroke=\"black\"/>\n";

    os << "<polygon points=\"";
    for (std::size_t k = 0; k < d.vertices.size(); ++k)
        os << (k ? " " : "") << px(d.vertices[k].alpha) << "," << py(d.vertices[k].beta);
    os << "\" fill=\"#dde8f5\" stroke=\"#7a8ca0\"/>\n";

    const auto draw = [&](const std::vector<PolygonEntry>& poly, const char* colour) {
        for (const auto& p : poly) {
            os << "<line x1=\"" << px(p.segment.lower().alpha) << "\" y1=\"" << py(p.segment.lower().beta)
               << "\" x2=\"" << px(p.segment.upper().alpha) << "\" y2=\"" << py(p.segment.upper().beta)
               << "\" stroke=\"" << colour << "\" stroke-width=\"3\"" << (p.exceptional ? " stroke-dasharray=\"6,4\"" : "")
               << "/>\n";
            const int mx = (px(p.segment.lower().alpha) + px(p.segment.upper().alpha)) / 2;
            const int my = (py(p.segment.lower().beta) + py(p.segment.upper().beta)) / 2;
            os << "<text x=\"" << mx + 4 << "\" y=\"" << my - 4 << "\" font-size=\"12\" fill=\"" << colour << "\">"
               << p.label << "</text>\n";
        }
    };
    draw(rep.right, "#c0392b");
    draw(rep.top, "#1e7d32");

    for (const auto& e : d.support)
        os << "<circle cx=\"" << px(e.alpha) << "\" cy=\"" << py(e.beta) << "\" r=\"4\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace newtonloj
