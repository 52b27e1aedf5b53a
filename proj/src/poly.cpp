#include "newtonloj/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "newtonloj/errors.hpp"

namespace newtonloj {

Var other(Var v)
{
    return v == Var::X ? Var::Y : Var::X;
}

char to_char(Var v)
{
    return v == Var::X ? 'X' : 'Y';
}

ExponentPair checked_add(const ExponentPair& a, const ExponentPair& b)
{
    int alpha = 0;
    int beta = 0;
    if (__builtin_add_overflow(a.alpha, b.alpha, &alpha) || __builtin_add_overflow(a.beta, b.beta, &beta))
        throw DomainError("exponent overflow");
    if (alpha < 0 || beta < 0)
        throw DomainError("negative exponent");
    if (alpha > kMaxExponent || beta > kMaxExponent)
        throw DomainError("exponent exceeds " + std::to_string(kMaxExponent));
    return {alpha, beta};
}

SparsePoly::SparsePoly(TermMap terms)
{
    for (auto& [e, c] : terms) {
        if (e.alpha < 0 || e.beta < 0)
            throw DomainError("negative exponent");
        if (e.alpha > kMaxExponent || e.beta > kMaxExponent)
            throw DomainError("exponent exceeds " + std::to_string(kMaxExponent));
        if (!c.is_zero())
            terms_.emplace(e, std::move(c));
    }
}

SparsePoly SparsePoly::monomial(ExponentPair e, GaussianRational c)
{
    SparsePoly p;
    p.add_term(e, c);
    return p;
}

SparsePoly SparsePoly::constant(GaussianRational c)
{
    return monomial({0, 0}, std::move(c));
}

bool SparsePoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ExponentPair{0, 0});
}

GaussianRational SparsePoly::coeff(ExponentPair e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational() : it->second;
}

void SparsePoly::add_term(ExponentPair e, const GaussianRational& c)
{
    if (e.alpha < 0 || e.beta < 0)
        throw DomainError("negative exponent");
    if (e.alpha > kMaxExponent || e.beta > kMaxExponent)
        throw DomainError("exponent exceeds " + std::to_string(kMaxExponent));
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

std::vector<ExponentPair> SparsePoly::support() const
{
    std::vector<ExponentPair> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_)
        out.push_back(e);
    return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b)
{
    SparsePoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(checked_add(ea, eb), ca * cb);
    return out;
}

SparsePoly operator*(const GaussianRational& c, const SparsePoly& p)
{
    SparsePoly out;
    if (c.is_zero())
        return out;
    for (const auto& [e, coeff] : p.terms_)
        out.terms_.emplace(e, c * coeff);
    return out;
}

SparsePoly SparsePoly::operator-() const
{
    return GaussianRational(-1) * *this;
}

SparsePoly SparsePoly::pow(unsigned n) const
{
    SparsePoly result = constant(GaussianRational(1));
    SparsePoly base = *this;
    while (n > 0) {
        if (n & 1u)
            result = result * base;
        n >>= 1u;
        if (n > 0)
            base = base * base;
    }
    return result;
}

SparsePoly SparsePoly::swapped() const
{
    SparsePoly out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e.swapped(), c);
    return out;
}

SparsePoly SparsePoly::restrict_to_axis(Var zeroed) const
{
    SparsePoly out;
    for (const auto& [e, c] : terms_) {
        const int z = zeroed == Var::X ? e.alpha : e.beta;
        if (z == 0)
            out.terms_.emplace(e, c);
    }
    return out;
}

namespace {

std::string monomial_text(const ExponentPair& e)
{
    std::string out;
    auto factor = [&out](char var, int exp) {
        if (exp == 0)
            return;
        if (!out.empty())
            out += "*";
        out += var;
        if (exp > 1)
            out += "^" + std::to_string(exp);
    };
    factor('X', e.alpha);
    factor('Y', e.beta);
    return out;
}

}  // namespace

std::string SparsePoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        const std::string mono = monomial_text(e);
        GaussianRational coeff = c;
        bool negative = false;
        if (c.is_real() && sgn(c.re()) < 0) {
            negative = true;
            coeff = -c;
        }
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit = coeff == GaussianRational(1);
        if (mono.empty())
            out += coeff.to_string();
        else if (unit)
            out += mono;
        else
            out += coeff.to_string() + "*" + mono;
    }
    return out;
}

SparsePoly partial_derivative(const SparsePoly& p, Var v)
{
    SparsePoly::TermMap out;
    for (const auto& [e, c] : p.terms()) {
        const int k = v == Var::X ? e.alpha : e.beta;
        if (k == 0)
            continue;
        ExponentPair d = e;
        (v == Var::X ? d.alpha : d.beta) -= 1;
        out.emplace(d, GaussianRational(static_cast<std::int64_t>(k)) * c);
    }
    return SparsePoly(std::move(out));
}

DegreeStats degree_stats(const SparsePoly& p)
{
    DegreeStats s;
    if (p.is_zero()) {
        s.deg = s.deg_x = s.deg_y = ExtRational::minus_infinity();
        s.ord = s.ord_x = s.ord_y = ExtRational::plus_infinity();
        return s;
    }
    long deg = std::numeric_limits<long>::min(), ord = std::numeric_limits<long>::max();
    int dx = -1, dy = -1, ox = std::numeric_limits<int>::max(), oy = std::numeric_limits<int>::max();
    for (const auto& [e, c] : p.terms()) {
        const long t = static_cast<long>(e.alpha) + e.beta;
        deg = std::max(deg, t);
        ord = std::min(ord, t);
        dx = std::max(dx, e.alpha);
        dy = std::max(dy, e.beta);
        ox = std::min(ox, e.alpha);
        oy = std::min(oy, e.beta);
    }
    s.deg = ExtRational(deg);
    s.ord = ExtRational(ord);
    s.deg_x = ExtRational(dx);
    s.deg_y = ExtRational(dy);
    s.ord_x = ExtRational(ox);
    s.ord_y = ExtRational(oy);
    return s;
}

ComplexValue eval_complex(const SparsePoly& p, std::complex<double> x, std::complex<double> y)
{
    using C = std::complex<double>;
    // rows[beta] = [(alpha, coeff)], both descending
    std::map<int, std::vector<std::pair<int, C>>, std::greater<>> rows;
    for (const auto& [e, c] : p.terms())
        rows[e.beta].emplace_back(e.alpha, c.to_complex());

    auto horner = [](const auto& items, C z, auto exponent_of, auto value_of, int top) {
        C acc = 0.0;
        int prev = top;
        for (const auto& it : items) {
            const int k = exponent_of(it);
            acc = acc * std::pow(z, prev - k) + value_of(it);
            prev = k;
        }
        return acc * std::pow(z, prev);
    };

    std::vector<std::pair<int, C>> row_values;
    for (auto& [beta, row] : rows) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
        const C v = horner(
            row, x, [](const auto& it) { return it.first; }, [](const auto& it) { return it.second; },
            row.front().first);
        row_values.emplace_back(beta, v);
    }
    ComplexValue out;
    if (row_values.empty())
        return out;
    out.value = horner(
        row_values, y, [](const auto& it) { return it.first; }, [](const auto& it) { return it.second; },
        row_values.front().first);
    out.finite = std::isfinite(out.value.real()) && std::isfinite(out.value.imag());
    return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    SparsePoly parse()
    {
        skip_space();
        if (at_end())
            throw ParseError("empty expression", pos_);
        SparsePoly p = expr();
        skip_space();
        if (!at_end()) {
            if (starts_primary())
                throw ParseError("implicit multiplication is not accepted", pos_);
            throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
        }
        return p;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool starts_primary() const
    {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'x' || c == 'X' || c == 'y' ||
               c == 'Y' || c == 'i' || c == 'I';
    }

    SparsePoly expr()
    {
        SparsePoly acc = term();
        for (;;) {
            skip_space();
            const char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    SparsePoly term()
    {
        SparsePoly acc = unary();
        for (;;) {
            skip_space();
            if (peek() == '*') {
                ++pos_;
                acc = acc * unary();
            } else if (starts_primary()) {
                throw ParseError("implicit multiplication is not accepted", pos_);
            } else {
                return acc;
            }
        }
    }

    SparsePoly unary()
    {
        skip_space();
        if (peek() == '-') {
            ++pos_;
            return -unary();
        }
        if (peek() == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    SparsePoly power()
    {
        SparsePoly base = primary();
        skip_space();
        if (peek() != '^')
            return base;
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        if (peek() == '-')
            throw ParseError("negative exponent", at);
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected non-negative integer exponent", at);
        const mpz_class e = integer();
        if (e > kMaxExponent)
            throw ParseError("exponent too large", at);
        return base.pow(static_cast<unsigned>(e.get_ui()));
    }

    mpz_class integer()
    {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            throw ParseError("expected integer", pos_);
        if (peek() == '.' || peek() == 'e' || peek() == 'E')
            throw ParseError("non-Gaussian-rational coefficient (decimal literal)", start);
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    SparsePoly primary()
    {
        skip_space();
        const std::size_t at = pos_;
        const char c = peek();
        if (at_end())
            throw ParseError("unexpected end of input", at);
        if (c == '(') {
            ++pos_;
            SparsePoly inner = expr();
            skip_space();
            if (peek() != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (c == 'x' || c == 'X') {
            ++pos_;
            return SparsePoly::monomial({1, 0});
        }
        if (c == 'y' || c == 'Y') {
            ++pos_;
            return SparsePoly::monomial({0, 1});
        }
        if (c == 'i' || c == 'I') {
            ++pos_;
            return SparsePoly::constant(GaussianRational(0, 1));
        }
        if (c == '.')
            throw ParseError("non-Gaussian-rational coefficient (decimal literal)", at);
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational value(integer());
            skip_space();
            if (peek() == '/') {
                ++pos_;
                skip_space();
                const std::size_t den_at = pos_;
                const mpz_class den = integer();
                if (den == 0)
                    throw ParseError("zero denominator", den_at);
                value /= Rational(den);
            }
            if (peek() == 'i' || peek() == 'I') {
                ++pos_;
                return SparsePoly::constant(GaussianRational(0, value));
            }
            return SparsePoly::constant(GaussianRational(value));
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            throw ParseError(std::string("unknown symbol '") + c + "' (non-Gaussian-rational coefficient?)", at);
        throw ParseError(std::string("unexpected character '") + c + "'", at);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

Rational parse_rational_literal(const nlohmann::json& j)
{
    if (j.is_number_integer())
        return Rational(mpz_class(std::to_string(j.get<std::int64_t>())));
    if (!j.is_string())
        throw DomainError("coefficient must be an integer or a rational string");
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    auto digits_ok = [](std::string_view v) {
        if (!v.empty() && (v.front() == '-' || v.front() == '+'))
            v.remove_prefix(1);
        return !v.empty() && std::all_of(v.begin(), v.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    };
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den))
        throw DomainError("non-Gaussian-rational coefficient '" + s + "'");
    const mpz_class d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0)
        throw DomainError("zero denominator in '" + s + "'");
    Rational q(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
    q.canonicalize();
    return q;
}

}  // namespace

SparsePoly parse_polynomial(std::string_view text)
{
    return Parser(text).parse();
}

SparsePoly parse_polynomial_json(std::string_view json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    if (!j.is_array())
        throw ParseError("expected a JSON list of [alpha, beta, re, im] records", 0);
    SparsePoly p;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const auto& rec = j[k];
        if (!rec.is_array() || rec.size() < 3 || rec.size() > 4 || !rec[0].is_number_integer() ||
            !rec[1].is_number_integer())
            throw ParseError("record " + std::to_string(k) + " is not [alpha, beta, re, im]", 0);
        const auto alpha = rec[0].get<std::int64_t>();
        const auto beta = rec[1].get<std::int64_t>();
        if (alpha < 0 || beta < 0)
            throw ParseError("negative exponent in record " + std::to_string(k), 0);
        if (alpha > kMaxExponent || beta > kMaxExponent)
            throw ParseError("exponent too large in record " + std::to_string(k), 0);
        try {
            GaussianRational c(parse_rational_literal(rec[2]), rec.size() == 4 ? parse_rational_literal(rec[3]) : Rational(0));
            p.add_term({static_cast<int>(alpha), static_cast<int>(beta)}, c);
        } catch (const DomainError& e) {
            throw ParseError(std::string(e.what()) + " in record " + std::to_string(k), 0);
        }
    }
    return p;
}

}  // namespace newtonloj
