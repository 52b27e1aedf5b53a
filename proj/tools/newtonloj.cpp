#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "newtonloj/errors.hpp"
#include "newtonloj/exponent.hpp"
#include "newtonloj/initial_forms.hpp"
#include "newtonloj/oracle.hpp"
#include "newtonloj/report.hpp"

using namespace newtonloj;

namespace {

enum Exit { kOk = 0, kOther = 1, kParse = 2, kNotExact = 3, kOracle = 4 };

struct Options {
    bool json = false;
    std::string svg;
    bool oracle = false;
    bool require_exact = false;
    std::string batch;
    std::string var = "X";
    OracleConfig cfg;
};

struct Outcome {
    int code = kOk;
    Json json = Json::object();
    std::string text;
};

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Inline text, @file, or a JSON list of [alpha, beta, "re", "im"] records.
SparsePoly read_poly(const std::string& arg)
{
    std::string text = arg.size() > 1 && arg[0] == '@' ? read_file(arg.substr(1)) : arg;
    text = trim(text);
    if (!text.empty() && text[0] == '[')
        return parse_polynomial_json(text);
    return parse_polynomial(text);
}

Var parse_var(const std::string& v)
{
    if (v == "X" || v == "x")
        return Var::X;
    if (v == "Y" || v == "y")
        return Var::Y;
    throw DomainError("variable must be X or Y");
}

int exactness_code(const ExponentResult& r, const Options& o)
{
    return o.require_exact && r.status == Status::UpperBound ? kNotExact : kOk;
}

// Oracle section shared by gradient and pair; never changes the exact result.
void corroborate(const SparsePoly& f, const SparsePoly& g, const ExponentResult& r, const Options& o, Outcome& out)
{
    try {
        const OracleEstimate est = estimate_loj(f, g, o.cfg);
        const double exact = r.value.to_double();
        const bool agrees = std::isinf(exact) ? est.value == exact : std::abs(est.value - exact) <= o.cfg.tolerance;
        out.json["oracle"] = to_json(est);
        out.json["oracle"]["agrees"] = agrees;
        out.text += "oracle " + format_text(est);
        std::ostringstream os;
        os << "oracle agrees within " << o.cfg.tolerance << ": " << (agrees ? "yes" : "no") << "\n";
        out.text += os.str();
        if (!agrees && r.status == Status::Exact)
            out.code = std::max(out.code, static_cast<int>(kOracle));
    } catch (const OracleError& e) {
        out.json["oracle"] = {{"error", e.what()}};
        out.text += std::string("oracle failed: ") + e.what() + "\n";
        out.code = std::max(out.code, static_cast<int>(kOracle));
    } catch (const DomainError& e) {
        out.json["oracle"] = {{"skipped", e.what()}};
        out.text += std::string("oracle skipped: ") + e.what() + "\n";
    }
}

Outcome cmd_diagram(const std::vector<std::string>& in, const Options& o)
{
    const SparsePoly h = read_poly(in.at(0));
    const DiagramReport d = diagram_report(h);
    Outcome out{kOk, to_json(d), format_text(d)};
    if (!o.svg.empty()) {
        std::ofstream svg(o.svg);
        if (!(svg << diagram_svg(h)))
            throw std::runtime_error("cannot write " + o.svg);
    }
    return out;
}

Outcome cmd_gradient(const std::vector<std::string>& in, const Options& o)
{
    const SparsePoly h = read_poly(in.at(0));
    const ExponentResult r = loj_gradient(h);
    Outcome out{exactness_code(r, o), to_json(r), format_text(r)};
    if (o.oracle) {
        const SparsePoly h0 = h - SparsePoly::constant(h.coeff({0, 0}));
        corroborate(partial_derivative(h0, Var::X), partial_derivative(h0, Var::Y), r, o, out);
    }
    return out;
}

Outcome cmd_pair(const std::vector<std::string>& in, const Options& o)
{
    const SparsePoly f = read_poly(in.at(0)), g = read_poly(in.at(1));
    const ExponentResult r = loj_pair(f, g);
    Outcome out{exactness_code(r, o), to_json(r), format_text(r)};
    if (o.oracle)
        corroborate(f, g, r, o, out);
    return out;
}

Outcome cmd_relative(const std::vector<std::string>& in, const Options& o)
{
    const SparsePoly f = read_poly(in.at(0)), g = read_poly(in.at(1));
    const Var v = parse_var(o.var);
    const ExponentResult r = relative_bound(f, g, v);
    Outcome out{exactness_code(r, o), to_json(r), format_text(r)};
    out.json["var"] = o.var;
    if (o.oracle) {
        try {
            const OracleEstimate est = estimate_relative(f, g, v, o.cfg);
            out.json["oracle"] = to_json(est);
            out.text += "oracle " + format_text(est);
        } catch (const OracleError& e) {
            out.json["oracle"] = {{"error", e.what()}};
            out.text += std::string("oracle failed: ") + e.what() + "\n";
            out.code = std::max(out.code, static_cast<int>(kOracle));
        }
    }
    return out;
}

Outcome cmd_oracle(const std::vector<std::string>& in, const Options& o)
{
    const SparsePoly f = read_poly(in.at(0)), g = read_poly(in.at(1));
    try {
        const OracleEstimate est =
            o.var.empty() ? estimate_loj(f, g, o.cfg) : estimate_relative(f, g, parse_var(o.var), o.cfg);
        Outcome out{kOk, to_json(est), format_text(est)};
        out.json["var"] = o.var.empty() ? Json(nullptr) : Json(o.var);
        return out;
    } catch (const OracleError& e) {
        return {kOracle, {{"error", e.what()}}, std::string("oracle failed: ") + e.what() + "\n"};
    }
}

Outcome cmd_check(const std::vector<std::string>& in, const Options&)
{
    const SparsePoly h = read_poly(in.at(0));
    const ReductionReport rep = reduction_identities(h);
    Outcome out{rep.all_pass() ? kOk : kOther, Json::object(), format_text(rep)};
    out.json["identities"] = to_json(rep);
    Json classes = Json::object();
    for (Var v : {Var::X, Var::Y}) {
        const std::string name = v == Var::X ? "dX" : "dY";
        for (Side side : {Side::Right, Side::Top}) {
            const std::string key = name + "_" + to_string(side);
            try {
                const auto cls = classify_derivative_polygon(h, v, side);
                classes[key] = to_json(cls);
                out.text += "d/d" + std::string(v == Var::X ? "X" : "Y") + " " + to_string(side) + " polygon:\n";
                for (const auto& c : cls)
                    out.text += "  " + c.segment.to_string() + " " + to_string(c.cls) +
                                (c.parent ? " from " + c.parent->to_string() : "") + "\n";
            } catch (const DomainError& e) {
                classes[key] = nullptr;
                out.text += "d/d" + std::string(v == Var::X ? "X" : "Y") + ": " + e.what() + "\n";
            }
        }
    }
    out.json["derivative_classes"] = classes;
    return out;
}

using Command = Outcome (*)(const std::vector<std::string>&, const Options&);

Outcome run_guarded(Command cmd, const std::vector<std::string>& in, const Options& o)
{
    try {
        return cmd(in, o);
    } catch (const ParseError& e) {
        return {kParse, {{"error", e.what()}, {"kind", "parse"}}, std::string("parse error: ") + e.what() + "\n"};
    } catch (const OracleError& e) {
        return {kOracle, {{"error", e.what()}, {"kind", "oracle"}}, std::string("oracle error: ") + e.what() + "\n"};
    } catch (const DomainError& e) {
        return {kOther, {{"error", e.what()}, {"kind", "domain"}}, std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {kOther, {{"error", e.what()}, {"kind", "other"}}, std::string("error: ") + e.what() + "\n"};
    }
}

int emit(const Outcome& out, const Options& o)
{
    if (o.json)
        std::cout << dump(out.json);
    else
        std::cout << out.text;
    return out.code;
}

// Lines "f ; g" (or a single polynomial), blank lines and '#' comments skipped.
int run_batch(Command cmd, std::size_t arity, const Options& o)
{
    std::ifstream in(o.batch);
    if (!in) {
        std::cerr << "cannot read " << o.batch << "\n";
        return kOther;
    }
    int worst = kOk;
    Json all = Json::array();
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        std::vector<std::string> fields;
        std::stringstream ss(t);
        for (std::string f; std::getline(ss, f, ';');)
            fields.push_back(trim(f));
        Outcome out;
        if (fields.size() != arity)
            out = {kParse, {{"error", "expected " + std::to_string(arity) + " field(s)"}, {"kind", "parse"}},
                   "parse error: expected " + std::to_string(arity) + " field(s)\n"};
        else
            out = run_guarded(cmd, fields, o);
        worst = std::max(worst, out.code);
        if (o.json) {
            all.push_back({{"line", lineno}, {"input", t}, {"exit", out.code}, {"result", out.json}});
        } else {
            std::cout << "== line " << lineno << ": " << t << " [exit " << out.code << "]\n" << out.text;
        }
    }
    if (o.json)
        std::cout << dump(all);
    return worst;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lojasiewicz exponents at infinity from Newton polygons"};
    app.set_config("--config", "", "read options from a TOML or INI file");
    app.require_subcommand(1);
    Options o;
    std::vector<std::string> inputs;

    const auto common = [&](CLI::App* sub, std::size_t arity, bool exact_flags) {
        sub->add_option("inputs", inputs, arity == 1 ? "polynomial (text, @file or JSON)" : "f and g (text, @file or JSON)")
            ->expected(static_cast<int>(arity))
            ->allow_extra_args(false);  // keep JSON term lists whole
        sub->add_flag("--json", o.json, "emit JSON");
        sub->add_option("--batch", o.batch, "process lines of a file: 'f ; g' or 'h'");
        if (exact_flags)
            sub->add_flag("--require-exact", o.require_exact, "exit 3 unless the exponent is certified exact");
    };
    const auto sampling = [&](CLI::App* sub) {
        sub->add_option("--radii", o.cfg.radii, "sampling radii, increasing, spanning >= 3 decades")
            ->capture_default_str();
        sub->add_option("--angles", o.cfg.angles, "angular samples per radius")->capture_default_str();
        sub->add_option("--tolerance", o.cfg.tolerance, "agreement tolerance")->capture_default_str();
        sub->add_option("--root-tolerance", o.cfg.root_tolerance, "residual accepted for reduction roots")
            ->capture_default_str();
        sub->add_option("--max-residual", o.cfg.max_residual, "largest rms misfit of the log-log fit")
            ->capture_default_str();
    };

    auto* diagram = app.add_subcommand("diagram", "Newton diagram and side polygons");
    common(diagram, 1, false);
    diagram->add_option("--svg", o.svg, "write an SVG picture of the diagram");

    auto* gradient = app.add_subcommand("gradient", "exponent of the gradient of h");
    common(gradient, 1, true);
    gradient->add_flag("--oracle", o.oracle, "corroborate with the numeric branch oracle");
    sampling(gradient);

    auto* pair = app.add_subcommand("pair", "exponent of the pair (f, g)");
    common(pair, 2, true);
    pair->add_flag("--oracle", o.oracle, "corroborate with the numeric branch oracle");
    sampling(pair);

    auto* relative = app.add_subcommand("relative", "bound on the exponent relative to X or Y");
    common(relative, 2, true);
    relative->add_option("--var", o.var, "X or Y")->capture_default_str();
    relative->add_flag("--oracle", o.oracle, "add the numeric estimate");
    sampling(relative);

    std::string oracle_var;
    auto* oracle = app.add_subcommand("oracle", "numeric estimate from Puiseux branches");
    common(oracle, 2, false);
    oracle->add_option("--var", oracle_var, "estimate the relative exponent in X or Y instead");
    sampling(oracle);

    auto* check = app.add_subcommand("check", "polygon identities and derivative classification");
    common(check, 1, false);

    try {
        app.parse(argc, argv);
        if (oracle->parsed())
            o.var = oracle_var;
        o.cfg.validate();
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kParse;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    }

    Command cmd = nullptr;
    std::size_t arity = 1;
    if (diagram->parsed())
        cmd = cmd_diagram;
    else if (gradient->parsed())
        cmd = cmd_gradient;
    else if (pair->parsed())
        cmd = cmd_pair, arity = 2;
    else if (relative->parsed())
        cmd = cmd_relative, arity = 2;
    else if (oracle->parsed())
        cmd = cmd_oracle, arity = 2;
    else
        cmd = cmd_check;

    if (!o.batch.empty()) {
        if (!inputs.empty()) {
            std::cerr << "error: --batch takes no inline inputs\n";
            return kParse;
        }
        return run_batch(cmd, arity, o);
    }
    if (inputs.size() != arity) {
        std::cerr << "error: expected " << arity << " polynomial(s)\n";
        return kParse;
    }
    return emit(run_guarded(cmd, inputs, o), o);
}
