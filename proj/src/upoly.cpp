#include "newtonloj/upoly.hpp"

#include <algorithm>

#include "newtonloj/errors.hpp"

namespace newtonloj {

UPoly::UPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

UPoly UPoly::monomial(int degree, GaussianRational c)
{
    std::vector<GaussianRational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = std::move(c);
    return UPoly(std::move(v));
}

void UPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

GaussianRational UPoly::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(c_.size()))
        return {};
    return c_[static_cast<std::size_t>(k)];
}

UPoly UPoly::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<GaussianRational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = GaussianRational(static_cast<std::int64_t>(k)) * c_[k];
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const
{
    if (is_zero())
        return {};
    const GaussianRational lc = leading();
    std::vector<GaussianRational> v(c_);
    for (auto& x : v)
        x /= lc;
    return UPoly(std::move(v));
}

int UPoly::strip_t_power()
{
    int k = 0;
    while (k < static_cast<int>(c_.size()) && c_[static_cast<std::size_t>(k)].is_zero())
        ++k;
    if (k == static_cast<int>(c_.size()))
        return 0;
    c_.erase(c_.begin(), c_.begin() + k);
    return k;
}

UPoly operator+(const UPoly& a, const UPoly& b)
{
    std::vector<GaussianRational> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k < a.c_.size())
            v[k] += a.c_[k];
        if (k < b.c_.size())
            v[k] += b.c_[k];
    }
    return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b)
{
    std::vector<GaussianRational> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k < a.c_.size())
            v[k] += a.c_[k];
        if (k < b.c_.size())
            v[k] -= b.c_[k];
    }
    return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<GaussianRational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
}

std::complex<double> UPoly::eval(std::complex<double> t) const
{
    std::complex<double> acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * t + it->to_complex();
    return acc;
}

std::string UPoly::to_string(char var) const
{
    if (c_.empty())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        out += c_[k].to_string();
        if (k >= 1)
            out += std::string("*") + var;
        if (k >= 2)
            out += "^" + std::to_string(k);
    }
    return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
{
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    std::vector<GaussianRational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db)
        return {UPoly(), a};
    std::vector<GaussianRational> quo(static_cast<std::size_t>(a.degree() - db) + 1);
    const GaussianRational& lb = b.leading();
    for (int k = a.degree(); k >= db; --k) {
        const GaussianRational& top = rem[static_cast<std::size_t>(k)];
        if (top.is_zero())
            continue;
        const GaussianRational factor = top / lb;
        quo[static_cast<std::size_t>(k - db)] = factor;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b)
{
    UPoly x = a;
    UPoly y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p)
{
    std::vector<std::pair<UPoly, int>> out;
    if (p.degree() < 1)
        return out;
    const UPoly dp = p.derivative();
    UPoly a = gcd(p, dp);
    UPoly b = divmod(p, a).first;
    UPoly c = divmod(dp, a).first;
    UPoly d = c - b.derivative();
    int k = 1;
    while (b.degree() >= 1) {
        UPoly f = gcd(b, d);
        b = divmod(b, f).first;
        c = divmod(d, f).first;
        d = c - b.derivative();
        if (f.degree() >= 1)
            out.emplace_back(f.monic(), k);
        ++k;
    }
    return out;
}

bool is_squarefree(const UPoly& p)
{
    if (p.degree() < 1)
        return true;
    return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace newtonloj
