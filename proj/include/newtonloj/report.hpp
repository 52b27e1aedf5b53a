#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "newtonloj/exponent.hpp"
#include "newtonloj/geometry.hpp"
#include "newtonloj/initial_forms.hpp"
#include "newtonloj/oracle.hpp"
#include "newtonloj/poly.hpp"

namespace newtonloj {

using Json = nlohmann::json;  // keys kept sorted

// {"num": n, "den": d} for finite values, "+inf" / "-inf" otherwise.
Json exponent_json(const ExtRational& v);
// Float convenience value: a number when finite, the infinity string otherwise.
Json exponent_float_json(const ExtRational& v);
// [[alpha, beta], [alpha, beta]], lower endpoint first.
Json segment_json(const Segment& s);

struct PolygonEntry {
    std::string label;  // hull edge label; "A" starts at the lowest vertex
    Segment segment;
    Rational declivity;
    bool exceptional = false;
};

struct DiagramReport {
    std::string polynomial;
    std::vector<ExponentPair> vertices;
    std::size_t support_size = 0;
    std::vector<PolygonEntry> right;
    std::vector<PolygonEntry> top;
};

// Throws DomainError for the zero polynomial.
DiagramReport diagram_report(const SparsePoly& h);

Json to_json(const DiagramReport& d);
Json to_json(const ExponentResult& r);
Json to_json(const SixQuantities& s);
Json to_json(const NondegeneracyReport& r);
Json to_json(const PairReport& r);
Json to_json(const ReductionReport& r);
Json to_json(const std::vector<DerivSegmentClass>& cls);
Json to_json(const OracleEstimate& e);

// Indented, sorted keys, trailing newline. Parsing and dumping again gives the same bytes.
std::string dump(const Json& j);

std::string format_text(const DiagramReport& d);
std::string format_text(const ExponentResult& r);
std::string format_text(const OracleEstimate& e);
std::string format_text(const ReductionReport& r);

// Lattice picture of the support, hull and side polygons. The viewport is a
// fixed function of the hull bounding box, so equal input gives equal bytes.
std::string diagram_svg(const SparsePoly& h);

}  // namespace newtonloj
