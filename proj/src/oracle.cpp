#include "newtonloj/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "bigcomplex.hpp"
#include "newtonloj/errors.hpp"
#include "newtonloj/initial_forms.hpp"
#include "newtonloj/upoly.hpp"

namespace newtonloj {

using detail::BigComplex;
using detail::PrecisionScope;
using detail::Real;
using cd = std::complex<double>;

const char* to_string(Orientation o)
{
    return o == Orientation::OverX ? "over-X" : "over-Y";
}

void OracleConfig::validate() const
{
    if (radii.size() < 2)
        throw DomainError("oracle needs at least two radii");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0) || !std::isfinite(radii[i]))
            throw DomainError("oracle radii must be positive and finite");
        if (i > 0 && !(radii[i] > radii[i - 1]))
            throw DomainError("oracle radii must increase strictly");
    }
    if (std::log10(radii.back() / radii.front()) < 3 - 1e-9)
        throw DomainError("oracle radii must span at least three decades");
    if (angles < 1)
        throw DomainError("oracle needs at least one angle per radius");
    if (initial_bits < 64 || max_bits < initial_bits)
        throw DomainError("oracle precision range is invalid");
    if (!(tolerance > 0) || !(max_residual > 0) || !(root_tolerance > 0))
        throw DomainError("oracle tolerances must be positive");
    if (!(match_ratio > 0 && match_ratio < 1) || !(track_decades > 0))
        throw DomainError("oracle matching parameters are out of range");
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------- double roots

// Parlett-Reinsch diagonal similarity with powers of two; keeps eigenvalues exact
// and stops the solver from deflating small roots of widely scaled polynomials.
void balance(Eigen::MatrixXcd& m)
{
    const Eigen::Index n = m.rows();
    for (bool done = false; !done;) {
        done = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double c = 0, r = 0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i)
                    continue;
                c += std::abs(m(j, i));
                r += std::abs(m(i, j));
            }
            if (c == 0 || r == 0)
                continue;
            const double s = c + r;
            double f = 1;
            while (c < r / 2) {
                f *= 2;
                c *= 4;
            }
            while (c > r * 2) {
                f /= 2;
                c /= 4;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                m.row(i) /= f;
                m.col(i) *= f;
            }
        }
    }
}

std::vector<cd> companion_roots(const std::vector<cd>& c)
{
    // c[0] + c[1] t + ... + c[n] t^n, c[n] != 0
    const int n = static_cast<int>(c.size()) - 1;
    if (n <= 0)
        return {};
    if (n == 1)
        return {-c[0] / c[1]};
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i)
        m(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i)
        m(i, n - 1) = -c[i] / c[n];
    balance(m);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    if (es.info() != Eigen::Success)
        throw OracleError(OracleError::Kind::RootSolverFailed, "companion eigenvalues did not converge");
    std::vector<cd> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
    return out;
}

void horner(const std::vector<cd>& c, cd z, cd& p, cd& dp)
{
    p = 0;
    dp = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
}

// Aberth-Ehrlich refinement in double precision.
void aberth_polish(const std::vector<cd>& c, std::vector<cd>& z, int max_iter = 60)
{
    const std::size_t n = z.size();
    for (int it = 0; it < max_iter; ++it) {
        bool done = true;
        for (std::size_t i = 0; i < n; ++i) {
            cd p, dp;
            horner(c, z[i], p, dp);
            if (p == cd(0))
                continue;
            const cd ratio = p / dp;
            cd s = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i && z[i] != z[j])
                    s += 1.0 / (z[i] - z[j]);
            const cd w = ratio / (1.0 - ratio * s);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
                continue;
            z[i] -= w;
            if (std::abs(w) > 1e-15 * std::abs(z[i]))
                done = false;
        }
        if (done)
            break;
    }
}

double backward_error(const std::vector<cd>& c, cd z)
{
    cd p, dp;
    horner(c, z, p, dp);
    double scale = 0, zk = 1;
    for (const auto& ck : c) {
        scale += std::abs(ck) * zk;
        zk *= std::abs(z);
    }
    return scale == 0 ? 0 : std::abs(p) / scale;
}

// Roots of a squarefree univariate polynomial, Newton-polished in double.
std::vector<cd> squarefree_roots(const UPoly& p)
{
    std::vector<cd> c;
    for (const auto& a : p.coeffs())
        c.push_back(a.to_complex());
    std::vector<cd> z = companion_roots(c);
    const UPoly dpoly = p.derivative();
    for (auto& t : z) {
        for (int it = 0; it < 8; ++it) {
            const cd d = dpoly.eval(t);
            if (d == cd(0))
                break;
            const cd step = p.eval(t) / d;
            t -= step;
            if (std::abs(step) <= 1e-16 * std::abs(t))
                break;
        }
    }
    return z;
}

// ----------------------------------------------------------- leading terms

// The solutions attached to one segment and one root t of its reduction: eta
// conjugate leading terms c with c^eta = t, each of multiplicity mult.
// Conjugate solutions give the same substitution degrees.
struct BranchClass {
    Segment segment;
    Rational theta;
    int eta = 1;
    int mult = 1;
    cd t;
    std::vector<Branch> members;

    int size() const { return eta * mult; }  // roots of h(x, .) in the class
};

// Classes attached to the right polygon of h (over X); segments as in h.
std::vector<BranchClass> right_classes(const SparsePoly& h, double root_tolerance = 1e-10)
{
    if (h.is_zero())
        throw DomainError("branches of the zero polynomial");
    std::vector<BranchClass> out;
    for (const auto& s : side_polygon(h, Side::Right).segments) {
        const UnivariateReduction red = univariate_reduce(initial_form(h, s), Side::Right);
        const Rational theta = declivity(s, Side::Right);
        const int eta = red.step.beta;  // primitive, so the denominator of theta
        for (const auto& [factor, mult] : squarefree_decomposition(red.q)) {
            std::vector<cd> ts;
            try {
                ts = squarefree_roots(factor);
            } catch (const OracleError& e) {
                throw OracleError(OracleError::Kind::RootSolverFailed,
                                  "segment " + s.to_string() + ": " + e.what());
            }
            for (const cd& t : ts) {
                if (!std::isfinite(t.real()) || !std::isfinite(t.imag()) || t == cd(0) ||
                    std::abs(factor.eval(t)) > root_tolerance * std::max(1.0, std::pow(std::abs(t), factor.degree())))
                    throw OracleError(OracleError::Kind::RootSolverFailed,
                                      "segment " + s.to_string() + ": inaccurate root of the reduction");
                BranchClass cls{s, theta, eta, mult, t, {}};
                const cd c0 = std::pow(t, 1.0 / eta);
                for (int j = 0; j < eta; ++j)
                    cls.members.push_back(Branch{theta, c0 * std::polar(1.0, 2 * std::numbers::pi * j / eta), mult,
                                                 s, Orientation::OverX, eta});
                out.push_back(std::move(cls));
            }
        }
    }
    return out;
}

std::vector<Branch> flatten(const std::vector<BranchClass>& classes)
{
    std::vector<Branch> out;
    for (const auto& c : classes)
        out.insert(out.end(), c.members.begin(), c.members.end());
    return out;
}

// ------------------------------------------------------ multiprecision roots

// Coefficients of y -> p(x, y) from y^0 up to y^deg_Y.
std::vector<BigComplex> y_coefficients(const SparsePoly& p, const BigComplex& x)
{
    int dx = 0, dy = 0;
    for (const auto& [e, c] : p.terms()) {
        dx = std::max(dx, e.alpha);
        dy = std::max(dy, e.beta);
    }
    std::vector<BigComplex> xp(static_cast<std::size_t>(dx) + 1);
    xp[0] = BigComplex(Real(1), Real(0));
    for (int k = 1; k <= dx; ++k)
        xp[k] = xp[k - 1] * x;
    std::vector<BigComplex> out(static_cast<std::size_t>(dy) + 1);
    for (const auto& [e, c] : p.terms())
        out[e.beta] += BigComplex(c) * xp[e.alpha];
    return out;
}

struct Evaluated {
    BigComplex value;
    Real scale;  // sum of the moduli of the terms
};

Evaluated mp_horner(const std::vector<BigComplex>& c, const BigComplex& z)
{
    BigComplex p;
    Real s(0);
    const Real az = z.abs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        p = p * z + *it;
        s = s * az + it->abs();
    }
    return {p, s};
}

BigComplex ipow(const BigComplex& z, int k)
{
    BigComplex out(Real(1), Real(0));
    for (int i = 0; i < std::abs(k); ++i)
        out = out * z;
    return k >= 0 ? out : BigComplex(Real(1), Real(0)) / out;
}

// Simultaneous refinement of all roots of c[0] + ... + c[n] y^n.
void mp_aberth(const std::vector<BigComplex>& c, std::vector<BigComplex>& z, int bits)
{
    const std::size_t n = z.size();
    const Real tol = ldexp(Real(1), -(bits - 24));
    std::vector<BigComplex> dc;
    for (std::size_t k = 1; k < c.size(); ++k)
        dc.push_back(c[k] * BigComplex(Real(static_cast<long>(k)), Real(0)));
    const int max_iter = 200 + bits / 4;
    for (int it = 0; it < max_iter; ++it) {
        bool done = true;
        for (std::size_t i = 0; i < n; ++i) {
            const BigComplex p = mp_horner(c, z[i]).value;
            if (p.is_zero())
                continue;
            const BigComplex dp = mp_horner(dc, z[i]).value;
            BigComplex s;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i)
                    continue;
                const BigComplex diff = z[i] - z[j];
                if (!diff.is_zero())
                    s += BigComplex(Real(1), Real(0)) / diff;
            }
            BigComplex denom = dp - p * s;
            if (denom.is_zero())
                denom = BigComplex(tol, Real(0));
            const BigComplex w = p / denom;
            z[i] -= w;
            if (w.abs() > tol * z[i].abs())
                done = false;
        }
        if (done)
            return;
    }
}

std::vector<double> angle_list(int angles)
{
    std::vector<double> out;
    for (int j = 0; j < angles; ++j)
        out.push_back(2 * std::numbers::pi * j / angles + 0.1);
    return out;
}

// log10 |g| at one sample; nullopt marks an identically vanishing substitution.
using SampleValue = std::optional<double>;

// Nonzero roots of h(x, .) at the given precision, refined from `seeds`.
std::vector<BigComplex> nonzero_roots(const SparsePoly& h, const BigComplex& x, const std::vector<cd>& seeds,
                                      int bits)
{
    std::vector<BigComplex> c = y_coefficients(h, x);
    std::size_t ord = 0;
    while (ord < c.size() && c[ord].is_zero())
        ++ord;
    c.erase(c.begin(), c.begin() + static_cast<long>(ord));
    if (c.size() <= 1)
        return {};
    if (c.back().is_zero() || c.front().is_zero())
        throw OracleError(OracleError::Kind::LeadingCoefficientVanishes,
                          "extreme coefficient vanishes at the sample point");
    if (seeds.size() != c.size() - 1)
        throw OracleError(OracleError::Kind::RootSolverFailed, "seed count does not match the degree");
    std::vector<BigComplex> z;
    for (const cd& s : seeds)
        z.emplace_back(s);
    mp_aberth(c, z, bits);
    return z;
}

std::vector<cd> to_doubles(const std::vector<BigComplex>& roots)
{
    std::vector<cd> out;
    for (const auto& r : roots) {
        const cd z = r.to_complex();
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || z == cd(0))
            throw OracleError(OracleError::Kind::RootSolverFailed, "root modulus outside the double range");
        out.push_back(z);
    }
    return out;
}

std::string describe(const BranchClass& c, double radius)
{
    std::ostringstream os;
    os << "branches c^" << c.eta << " = " << c.t << " of degree " << to_string(c.theta) << " at |x| = " << radius;
    return os.str();
}

// Leading-term seeds c x^theta, one per root.
std::vector<cd> leading_seeds(const std::vector<BranchClass>& classes, cd x)
{
    std::vector<cd> out;
    for (const auto& cls : classes) {
        const cd xt = std::exp(to_double(cls.theta) * std::log(x));
        for (const auto& b : cls.members)
            for (int k = 0; k < cls.mult; ++k)
                out.push_back(b.leading_coeff * xt * (1.0 + 1e-3 * k * std::polar(1.0, 1.0 + k)));
    }
    return out;
}

// Labels the roots at the outermost radius: a root of the class of t satisfies
// r^eta x^(-theta eta) -> t. Greedy by score, then every class must be clearly
// closer to its own roots than to any other root.
std::vector<int> classify_roots(const std::vector<BigComplex>& roots, const BigComplex& x,
                                const std::vector<BranchClass>& classes, double ratio)
{
    const std::size_t n = roots.size();
    std::vector<std::vector<double>> score(classes.size(), std::vector<double>(n, kInf));
    std::vector<std::tuple<double, std::size_t, std::size_t>> order;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const Rational p = classes[c].theta * classes[c].eta;
        const BigComplex xp = ipow(x, -static_cast<int>(p.get_num().get_si()));
        for (std::size_t j = 0; j < n; ++j) {
            const double s = std::abs((ipow(roots[j], classes[c].eta) * xp).to_complex() - classes[c].t) /
                             std::abs(classes[c].t);
            score[c][j] = std::isfinite(s) ? s : kInf;
            order.emplace_back(score[c][j], c, j);
        }
    }
    std::sort(order.begin(), order.end());
    std::vector<int> label(n, -1);
    std::vector<int> room(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c)
        room[c] = classes[c].size();
    for (const auto& [s, c, j] : order) {
        if (label[j] >= 0 || room[c] == 0)
            continue;
        label[j] = static_cast<int>(c);
        --room[c];
    }
    const double radius = static_cast<double>(x.abs());
    for (std::size_t c = 0; c < classes.size(); ++c) {
        double worst = 0, other = kInf;
        for (std::size_t j = 0; j < n; ++j) {
            if (label[j] == static_cast<int>(c))
                worst = std::max(worst, score[c][j]);
            else
                other = std::min(other, score[c][j]);
        }
        if (room[c] != 0 || !(worst < ratio * other)) {
            std::ostringstream os;
            os << describe(classes[c], radius) << ": roots not separated from other branches (" << worst << " vs "
               << other << ")";
            throw OracleError(OracleError::Kind::AmbiguousBranch, os.str());
        }
    }
    return label;
}

// Labels of new roots from predicted positions of the previous ones. A root must
// be clearly nearer to a prediction of its class than to any other class.
std::vector<int> relabel(const std::vector<BigComplex>& roots, const std::vector<cd>& preds,
                         const std::vector<int>& pred_label, const std::vector<BranchClass>& classes, double ratio,
                         double radius)
{
    const std::vector<cd> r = to_doubles(roots);
    std::vector<int> label(r.size(), -1);
    std::vector<int> count(classes.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::vector<double> best(classes.size(), kInf);
        for (std::size_t j = 0; j < preds.size(); ++j) {
            const auto c = static_cast<std::size_t>(pred_label[j]);
            best[c] = std::min(best[c], std::abs(r[i] - preds[j]) / std::abs(preds[j]));
        }
        const auto c1 = static_cast<std::size_t>(std::min_element(best.begin(), best.end()) - best.begin());
        double second = kInf;
        for (std::size_t c = 0; c < best.size(); ++c)
            if (c != c1)
                second = std::min(second, best[c]);
        if (!(best[c1] < ratio * second)) {
            std::ostringstream os;
            os << describe(classes[c1], radius) << ": lost track of a root (" << best[c1] << " vs " << second
               << ")";
            throw OracleError(OracleError::Kind::AmbiguousBranch, os.str());
        }
        label[i] = static_cast<int>(c1);
        ++count[c1];
    }
    for (std::size_t c = 0; c < classes.size(); ++c)
        if (count[c] != classes[c].size())
            throw OracleError(OracleError::Kind::AmbiguousBranch,
                              describe(classes[c], radius) + ": roots changed branch while tracking");
    return label;
}

// Class value: mean of the eta smallest log10|g| over the roots of the class,
// i.e. over the conjugates, keeping the smallest member of a multiple cluster.
SampleValue class_value(std::vector<SampleValue> vals, int eta)
{
    std::sort(vals.begin(), vals.end(), [](const SampleValue& a, const SampleValue& b) {
        return a.value_or(-kInf) < b.value_or(-kInf);
    });
    double sum = 0;
    for (int i = 0; i < eta; ++i) {
        if (!vals[static_cast<std::size_t>(i)])
            return std::nullopt;
        sum += *vals[static_cast<std::size_t>(i)];
    }
    return sum / eta;
}

// Radii from the outermost inwards with at most `step` decades between points;
// index into cfg.radii or -1 for tracking-only points.
std::vector<std::pair<double, int>> radius_path(const std::vector<double>& radii, double step)
{
    std::vector<std::pair<double, int>> out;
    for (int i = static_cast<int>(radii.size()) - 1; i >= 0; --i) {
        out.emplace_back(radii[static_cast<std::size_t>(i)], i);
        if (i == 0)
            break;
        const double hi = radii[static_cast<std::size_t>(i)], lo = radii[static_cast<std::size_t>(i) - 1];
        const int n = std::max(1, static_cast<int>(std::ceil(std::log10(hi / lo) / step - 1e-9)));
        for (int s = 1; s < n; ++s)
            out.emplace_back(hi * std::pow(lo / hi, static_cast<double>(s) / n), -1);
    }
    return out;
}

// Smallest radius step, in decades, tried before a crossing counts as ambiguous.
constexpr double kMinTrackDecades = 1e-3;

// Labelled roots of h(x, .) followed along one ray x = R e^{i phi}.
class RayTracker {
public:
    RayTracker(const SparsePoly& h, const std::vector<BranchClass>& classes, double phi, const OracleConfig& cfg)
        : h_(h), classes_(classes), phi_(phi), cfg_(cfg)
    {
    }

    const std::vector<cd>& roots() const { return tracked_; }
    const std::vector<int>& labels() const { return label_; }

    // Labels the roots at the outermost radius from their leading terms.
    void start(double radius)
    {
        const cd xd = std::polar(radius, phi_);
        PrecisionScope scope(cfg_.initial_bits);
        const BigComplex x(xd);
        const auto roots = nonzero_roots(h_, x, leading_seeds(classes_, xd), cfg_.initial_bits);
        label_ = classify_roots(roots, x, classes_, cfg_.match_ratio);
        tracked_ = to_doubles(roots);
        radius_ = radius;
    }

    // Moves to `target`, halving the step (in log scale) while the labels are ambiguous.
    void move_to(double target)
    {
        while (radius_ != target) {
            double next = target;
            for (;;) {
                try {
                    step_to(next);
                    break;
                } catch (const OracleError& e) {
                    if (e.kind() != OracleError::Kind::AmbiguousBranch ||
                        std::abs(std::log10(next / radius_)) < 2 * kMinTrackDecades)
                        throw;
                    next = std::sqrt(next * radius_);
                }
            }
        }
    }

    // Re-solves at the current radius with `bits` and relabels against the tracked roots.
    std::vector<BigComplex> refine(const BigComplex& x, int bits) const
    {
        auto roots = nonzero_roots(h_, x, tracked_, bits);
        if (relabel(roots, tracked_, label_, classes_, cfg_.match_ratio, radius_) != label_)
            throw OracleError(OracleError::Kind::AmbiguousBranch, "roots changed branch under refinement");
        return roots;
    }

private:
    // Secant in log-log coordinates once two points are known, leading growth before.
    std::vector<cd> predict(double radius) const
    {
        const double step = std::log(radius / radius_);
        std::vector<cd> out;
        for (std::size_t j = 0; j < tracked_.size(); ++j)
            out.push_back(before_.empty()
                              ? tracked_[j] * std::exp(step * to_double(classes_[label_[j]].theta))
                              : tracked_[j] * std::exp(step / step_ * std::log(tracked_[j] / before_[j])));
        return out;
    }

    void step_to(double radius)
    {
        const std::vector<cd> preds = predict(radius);
        PrecisionScope scope(cfg_.initial_bits);
        const auto roots = nonzero_roots(h_, BigComplex(std::polar(radius, phi_)), preds, cfg_.initial_bits);
        std::vector<int> label = relabel(roots, preds, label_, classes_, cfg_.match_ratio, radius);
        std::vector<cd> now = to_doubles(roots);
        before_ = std::move(tracked_);
        tracked_ = std::move(now);
        label_ = std::move(label);
        step_ = std::log(radius / radius_);
        radius_ = radius;
    }

    const SparsePoly& h_;
    const std::vector<BranchClass>& classes_;
    double phi_;
    const OracleConfig& cfg_;
    std::vector<cd> tracked_, before_;  // roots at the last two radii
    std::vector<int> label_;
    double radius_ = 0, step_ = 0;
};

// Values of the selected classes along one ray, one per cfg radius.
std::vector<std::vector<SampleValue>> sample_ray(const SparsePoly& h, const SparsePoly& g,
                                                 const std::vector<BranchClass>& classes,
                                                 const std::vector<std::size_t>& selected, double phi,
                                                 const OracleConfig& cfg)
{
    std::vector<std::vector<SampleValue>> out(selected.size(), std::vector<SampleValue>(cfg.radii.size()));
    RayTracker ray(h, classes, phi, cfg);
    bool started = false;
    for (const auto& [radius, index] : radius_path(cfg.radii, cfg.track_decades)) {
        if (!started)
            ray.start(radius);
        else
            ray.move_to(radius);
        started = true;
        if (index < 0)
            continue;
        std::vector<SampleValue> prev;
        for (int bits = cfg.initial_bits;; bits *= 2) {
            if (bits > cfg.max_bits)
                throw OracleError(OracleError::Kind::PrecisionExhausted,
                                  "substitution values did not stabilise up to " + std::to_string(cfg.max_bits) +
                                      " bits");
            PrecisionScope scope(bits);
            const BigComplex x(std::polar(radius, phi));
            const std::vector<BigComplex> roots = ray.refine(x, bits);
            const std::vector<BigComplex> gc = y_coefficients(g, x);
            const Real vanish = ldexp(Real(1), -bits / 2);
            std::vector<SampleValue> cur;
            for (std::size_t s : selected) {
                std::vector<SampleValue> vals;
                for (std::size_t j = 0; j < roots.size(); ++j) {
                    if (ray.labels()[j] != static_cast<int>(s))
                        continue;
                    const Evaluated ev = mp_horner(gc, roots[j]);
                    if (ev.value.abs() <= vanish * ev.scale)
                        vals.emplace_back(std::nullopt);
                    else
                        vals.emplace_back(ev.value.log10_abs());
                }
                cur.push_back(class_value(vals, classes[s].eta));
            }
            bool agree = !prev.empty();
            for (std::size_t i = 0; agree && i < cur.size(); ++i)
                if (cur[i].has_value() != prev[i].has_value() || (cur[i] && std::abs(*cur[i] - *prev[i]) > 1e-6))
                    agree = false;
            if (agree) {
                for (std::size_t i = 0; i < cur.size(); ++i)
                    out[i][static_cast<std::size_t>(index)] = cur[i];
                break;
            }
            prev = std::move(cur);
        }
    }
    return out;
}

SlopeEstimate fit(const std::vector<double>& radii, int angles, const std::vector<std::vector<SampleValue>>& vals,
                  const OracleConfig& cfg)
{
    SlopeEstimate est;
    est.radii = radii;
    est.samples_per_radius = angles;
    std::size_t vanished = 0, total = 0;
    for (const auto& row : vals)
        for (const auto& v : row) {
            ++total;
            if (!v)
                ++vanished;
        }
    if (vanished == total) {
        est.vanishes = true;
        est.slope = -kInf;
        est.mean_log10.assign(radii.size(), -kInf);
        return est;
    }
    if (vanished > 0)
        throw OracleError(OracleError::Kind::ResidualTooLarge, "substitution vanishes at some samples only");
    for (const auto& row : vals) {
        double s = 0;
        for (const auto& v : row)
            s += *v;
        est.mean_log10.push_back(s / static_cast<double>(row.size()));
    }
    const std::size_t n = radii.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += std::log10(radii[i]);
        my += est.mean_log10[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = std::log10(radii[i]) - mx;
        sxx += dx * dx;
        sxy += dx * (est.mean_log10[i] - my);
    }
    est.slope = sxy / sxx;
    double ss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = est.mean_log10[i] - (my + est.slope * (std::log10(radii[i]) - mx));
        ss += r * r;
    }
    est.residual = std::sqrt(ss / static_cast<double>(n));
    if (est.residual > cfg.max_residual)
        throw OracleError(OracleError::Kind::ResidualTooLarge,
                          "log-log fit residual " + std::to_string(est.residual) + " above threshold");
    return est;
}

// Substitution slopes of g along the selected classes of over-X solutions of h.
std::vector<SlopeEstimate> class_slopes(const SparsePoly& h, const SparsePoly& g,
                                        const std::vector<BranchClass>& classes,
                                        const std::vector<std::size_t>& selected, const OracleConfig& cfg)
{
    cfg.validate();
    if (selected.empty())
        return {};
    // vals[class][radius][angle]
    std::vector<std::vector<std::vector<SampleValue>>> vals(
        selected.size(), std::vector<std::vector<SampleValue>>(cfg.radii.size()));
    for (double phi : angle_list(cfg.angles)) {
        const auto ray = sample_ray(h, g, classes, selected, phi, cfg);
        for (std::size_t s = 0; s < selected.size(); ++s)
            for (std::size_t r = 0; r < cfg.radii.size(); ++r)
                vals[s][r].push_back(ray[s][r]);
    }
    std::vector<SlopeEstimate> out;
    for (std::size_t s = 0; s < selected.size(); ++s) {
        try {
            out.push_back(fit(cfg.radii, cfg.angles, vals[s], cfg));
        } catch (const OracleError& e) {
            throw OracleError(e.kind(), describe(classes[selected[s]], cfg.radii.front()) + ": " + e.what());
        }
    }
    return out;
}

SparsePoly orient(const SparsePoly& p, Orientation o)
{
    return o == Orientation::OverX ? p : p.swapped();
}

double symbolic_degree(const SparsePoly& f, const SparsePoly& g, Var zeroed)
{
    return max(degree_stats(f.restrict_to_axis(zeroed)).deg, degree_stats(g.restrict_to_axis(zeroed)).deg)
        .to_double();
}

// Branch terms of one orientation: solutions of f substituted into g and back.
void branch_terms(const SparsePoly& f, const SparsePoly& g, Orientation o, bool degree_filter,
                  const OracleConfig& cfg, OracleEstimate& est)
{
    const SparsePoly fo = orient(f, o), go = orient(g, o);
    const char* names[2][2] = {{"deg g(X,a(X))", "deg f(X,b(X))"}, {"deg g(a(Y),Y)", "deg f(b(Y),Y)"}};
    const int oi = o == Orientation::OverX ? 0 : 1;
    for (int which = 0; which < 2; ++which) {
        const SparsePoly& h = which == 0 ? fo : go;
        const SparsePoly& other = which == 0 ? go : fo;
        const std::vector<BranchClass> classes = right_classes(h, cfg.root_tolerance);
        std::vector<std::size_t> selected;
        for (std::size_t c = 0; c < classes.size(); ++c)
            if (!degree_filter || classes[c].theta <= 1)
                selected.push_back(c);
        const std::vector<SlopeEstimate> slopes = class_slopes(h, other, classes, selected, cfg);
        for (std::size_t i = 0; i < selected.size(); ++i) {
            OracleTerm term;
            term.quantity = names[oi][which];
            term.value = slopes[i].slope;
            term.residual = slopes[i].residual;
            term.branch = classes[selected[i]].members;
            if (o == Orientation::OverY)
                for (auto& b : term.branch) {
                    b.segment = b.segment.swapped();
                    b.solve_in = Orientation::OverY;
                }
            est.terms.push_back(term);
        }
    }
}

void finish(OracleEstimate& est)
{
    est.value = kInf;
    for (const auto& t : est.terms) {
        est.value = std::min(est.value, t.value);
        est.max_residual = std::max(est.max_residual, t.residual);
    }
}

OracleTerm degree_term(const char* name, double value)
{
    OracleTerm t;
    t.quantity = name;
    t.symbolic = true;
    t.value = value;
    return t;
}

void require_nonzero(const SparsePoly& f, const SparsePoly& g)
{
    if (f.is_zero() || g.is_zero())
        throw DomainError("oracle needs nonzero polynomials");
}

}  // namespace

std::vector<Branch> branch_leading_terms(const SparsePoly& h, Side side)
{
    if (side == Side::Right)
        return flatten(right_classes(h));
    std::vector<Branch> out = flatten(right_classes(h.swapped()));
    for (auto& b : out) {
        b.segment = b.segment.swapped();
        b.solve_in = Orientation::OverY;
    }
    return out;
}

RootsAtPoint roots_at_radius(const SparsePoly& h, cd x)
{
    const DegreeStats ds = degree_stats(h);
    if (h.is_zero() || ds.deg_y <= ExtRational(0))
        throw DomainError("roots_at_radius needs deg_Y h >= 1");
    const int dy = static_cast<int>(ds.deg_y.value().get_num().get_si());
    std::vector<cd> c(static_cast<std::size_t>(dy) + 1, 0.0);
    std::vector<double> mag(c.size(), 0.0);
    for (const auto& [e, coef] : h.terms()) {
        const cd term = coef.to_complex() * std::pow(x, e.alpha);
        c[e.beta] += term;
        mag[e.beta] += std::abs(term);
    }
    for (std::size_t k = 0; k < c.size(); ++k)
        if (!std::isfinite(mag[k]))
            throw OracleError(OracleError::Kind::RootSolverFailed, "coefficients overflow double precision");
    if (std::abs(c.back()) <= 1e-13 * mag.back())
        throw OracleError(OracleError::Kind::LeadingCoefficientVanishes,
                          "leading Y-coefficient vanishes at the sample point; resample");
    std::size_t ord = 0;
    while (ord < c.size() && std::abs(c[ord]) <= 1e-13 * mag[ord])
        ++ord;
    const std::vector<cd> reduced(c.begin() + static_cast<long>(ord), c.end());
    std::vector<cd> z = companion_roots(reduced);
    aberth_polish(reduced, z);
    RootsAtPoint out;
    out.roots.assign(ord, 0.0);
    out.roots.insert(out.roots.end(), z.begin(), z.end());
    for (const auto& r : z)
        out.backward_error = std::max(out.backward_error, backward_error(reduced, r));
    out.ill_conditioned = out.backward_error > 1e-8;
    return out;
}

SlopeEstimate substitution_degree(const SparsePoly& g, const SparsePoly& h, const Branch& branch,
                                  const OracleConfig& cfg)
{
    require_nonzero(g, h);
    const SparsePoly ho = orient(h, branch.solve_in), go = orient(g, branch.solve_in);
    const Segment seg = branch.solve_in == Orientation::OverX ? branch.segment : branch.segment.swapped();
    const std::vector<BranchClass> classes = right_classes(ho, cfg.root_tolerance);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (!(classes[c].segment == seg) || classes[c].theta != branch.theta || classes[c].mult != branch.multiplicity)
            continue;
        for (const auto& b : classes[c].members)
            if (std::abs(b.leading_coeff - branch.leading_coeff) <= 1e-8 * std::abs(b.leading_coeff))
                return class_slopes(ho, go, classes, {c}, cfg).front();
    }
    throw DomainError("branch is not a leading term of h");
}

SlopeEstimate curve_slope(const SparsePoly& h, cd c, const Rational& theta, const OracleConfig& cfg)
{
    cfg.validate();
    if (h.is_zero())
        throw DomainError("curve_slope of the zero polynomial");
    const std::vector<double> phis = angle_list(cfg.angles);
    std::vector<std::vector<SampleValue>> vals(cfg.radii.size());
    for (std::size_t r = 0; r < cfg.radii.size(); ++r) {
        for (double phi : phis) {
            const cd xd = std::polar(cfg.radii[r], phi);
            std::optional<SampleValue> prev;
            for (int bits = cfg.initial_bits;; bits *= 2) {
                if (bits > cfg.max_bits)
                    throw OracleError(OracleError::Kind::PrecisionExhausted, "curve value did not stabilise");
                PrecisionScope scope(bits);
                const BigComplex x(xd);
                const BigComplex y = BigComplex(c) * x.pow(theta);
                const Evaluated ev = mp_horner(y_coefficients(h, x), y);
                SampleValue cur;
                if (ev.value.abs() > ldexp(Real(1), -bits / 2) * ev.scale)
                    cur = ev.value.log10_abs();
                if (prev && prev->has_value() == cur.has_value() &&
                    (!cur || std::abs(**prev - *cur) <= 1e-6)) {
                    vals[r].push_back(cur);
                    break;
                }
                prev = cur;
            }
        }
    }
    return fit(cfg.radii, cfg.angles, vals, cfg);
}

OracleEstimate estimate_loj(const SparsePoly& f, const SparsePoly& g, const OracleConfig& cfg)
{
    require_nonzero(f, g);
    cfg.validate();
    OracleEstimate est;
    est.terms.push_back(degree_term("deg H(X,0)", symbolic_degree(f, g, Var::Y)));
    branch_terms(f, g, Orientation::OverX, true, cfg, est);
    est.terms.push_back(degree_term("deg H(0,Y)", symbolic_degree(f, g, Var::X)));
    branch_terms(f, g, Orientation::OverY, true, cfg, est);
    finish(est);
    return est;
}

OracleEstimate estimate_relative(const SparsePoly& f, const SparsePoly& g, Var var, const OracleConfig& cfg)
{
    require_nonzero(f, g);
    cfg.validate();
    OracleEstimate est;
    if (var == Var::X) {
        est.terms.push_back(degree_term("deg H(X,0)", symbolic_degree(f, g, Var::Y)));
        branch_terms(f, g, Orientation::OverX, false, cfg, est);
    } else {
        est.terms.push_back(degree_term("deg H(0,Y)", symbolic_degree(f, g, Var::X)));
        branch_terms(f, g, Orientation::OverY, false, cfg, est);
    }
    finish(est);
    return est;
}

}  // namespace newtonloj
