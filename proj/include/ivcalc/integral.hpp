#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "ivcalc/derivative.hpp"
#include "ivcalc/hull.hpp"
#include "ivcalc/interval.hpp"
#include "ivcalc/interval_fn.hpp"

namespace ivcalc {

enum class TagRule { left, right, midpoint };

inline const char* to_string(TagRule r) {
    switch (r) {
        case TagRule::left: return "left";
        case TagRule::right: return "right";
        case TagRule::midpoint: return "midpoint";
    }
    return "midpoint";
}

/// A tagged partition: strictly increasing nodes spanning [a, b] with one
/// intermediate point per cell.
struct Partition {
    std::vector<double> nodes;
    std::vector<double> tags;

    Partition(std::vector<double> n, std::vector<double> t)
        : nodes(std::move(n)), tags(std::move(t)) {
        if (nodes.size() < 2)
            throw std::invalid_argument("partition: needs at least two nodes");
        if (tags.size() + 1 != nodes.size())
            throw std::invalid_argument("partition: one tag per cell required");
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
            if (!(nodes[i] < nodes[i + 1]))
                throw std::invalid_argument("partition: nodes not strictly increasing");
            if (tags[i] < nodes[i] || tags[i] > nodes[i + 1])
                throw std::invalid_argument("partition: tag outside its cell");
        }
    }

    static Partition uniform(double a, double b, int cells, TagRule rule = TagRule::midpoint) {
        if (!(a < b))
            throw std::invalid_argument("partition: empty range");
        if (cells < 1)
            throw std::invalid_argument("partition: needs at least one cell");
        std::vector<double> nodes(static_cast<std::size_t>(cells) + 1);
        std::vector<double> tags(static_cast<std::size_t>(cells));
        for (int i = 0; i <= cells; ++i)
            nodes[static_cast<std::size_t>(i)] = a + (b - a) * i / cells;
        nodes.back() = b;
        for (int i = 0; i < cells; ++i) {
            const double l = nodes[static_cast<std::size_t>(i)];
            const double r = nodes[static_cast<std::size_t>(i) + 1];
            switch (rule) {
                case TagRule::left: tags[static_cast<std::size_t>(i)] = l; break;
                case TagRule::right: tags[static_cast<std::size_t>(i)] = r; break;
                case TagRule::midpoint: tags[static_cast<std::size_t>(i)] = 0.5 * (l + r); break;
            }
        }
        return Partition(std::move(nodes), std::move(tags));
    }

    double mesh() const {
        double m = 0.0;
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
            m = std::max(m, nodes[i + 1] - nodes[i]);
        return m;
    }
};

/// Refinement control for the Riemann integral: uniform partitions whose
/// cell count doubles until the Hausdorff distance between successive sums
/// drops to tol.
struct QuadConfig {
    int initial_cells = 16;
    int max_doublings = 16;
    double tol = 1e-8;
    TagRule tag_rule = TagRule::midpoint;

    void validate() const {
        if (initial_cells < 1 || max_doublings < 0)
            throw std::invalid_argument("quadrature: cell limits must be positive");
        if (!(tol > 0.0))
            throw std::invalid_argument("quadrature: tol must be positive");
    }
};

/// Riemann sum sum_i (t_i - t_{i-1}) F(xi_i) as a Minkowski sum of scaled
/// evaluations; equals [sum dt*lo(xi), sum dt*hi(xi)].
inline Interval riemann_sum(const IntervalFn& f, const Partition& p) {
    Interval acc = Interval::zero();
    for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
        const double dt = p.nodes[i + 1] - p.nodes[i];
        acc = add(acc, scale(dt, f(p.tags[i])));
    }
    return acc;
}

struct QuadResult {
    Interval value;
    double err = 0.0;   // last successive-refinement distance
    long cells = 0;
};

/// Riemann integral of F over [a, b] by doubling refinement. The degenerate
/// range a == b integrates to {0}; a > b is rejected (integrals here are not
/// oriented).
///
/// Convergence needs the doubled sum to agree with its predecessor within
/// tol AND with the same-level trapezoid sum within 8*tol. Successive sums
/// alone are not enough: a slope kink at distance d from a partition node
/// keeps a constant d^2-sized tag-rule error through every nesting level
/// (partition nodes nest under doubling, and the range endpoints sit in
/// every partition), so successive sums can match bit-for-bit while both
/// are wrong. The trapezoid gap is 3x the midpoint error cell-by-cell on
/// smooth integrands and of order d*h at a kink, so it rejects exactly the
/// deceptive stops.
inline QuadResult integrate(const IntervalFn& f, double a, double b, const QuadConfig& cfg = {}) {
    cfg.validate();
    if (!f.contains(a) || !f.contains(b))
        throw std::domain_error("integrate: range outside domain");
    if (a > b)
        throw std::invalid_argument("integrate: a > b");
    if (a == b)
        return QuadResult{Interval::zero(), 0.0, 0};
    auto sum_at = [&](long cells) {
        return riemann_sum(f, Partition::uniform(a, b, static_cast<int>(cells), cfg.tag_rule));
    };
    auto trapezoid_at = [&](long cells) {
        const double h = (b - a) / cells;
        const Interval fa = f(a), fb = f(b);
        double lo = 0.5 * (fa.lo() + fb.lo());
        double hi = 0.5 * (fa.hi() + fb.hi());
        for (long i = 1; i < cells; ++i) {
            const Interval v = f(a + h * i);
            lo += v.lo();
            hi += v.hi();
        }
        return Interval(h * lo, h * hi);
    };
    long n = cfg.initial_cells;
    Interval prev = sum_at(n);
    for (int d = 0; d < cfg.max_doublings; ++d) {
        n *= 2;
        const Interval cur = sum_at(n);
        const double e = hausdorff(prev, cur);
        if (e <= cfg.tol && hausdorff(cur, trapezoid_at(n)) <= 8.0 * cfg.tol)
            return QuadResult{cur, e, n};
        prev = cur;
    }
    throw std::runtime_error("integrate: did not converge");
}

/// Same refinement policy for a scalar integrand.
struct ScalarQuadResult {
    double value = 0.0;
    double err = 0.0;
    long cells = 0;
};

inline ScalarQuadResult scalar_integrate(const RealFn& f, double a, double b,
                                         const QuadConfig& cfg = {}) {
    cfg.validate();
    if (a > b)
        throw std::invalid_argument("integrate: a > b");
    if (a == b)
        return ScalarQuadResult{};
    auto sum = [&](long n) {
        const Partition p = Partition::uniform(a, b, static_cast<int>(n), cfg.tag_rule);
        double s = 0.0;
        for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i)
            s += (p.nodes[i + 1] - p.nodes[i]) * f(p.tags[i]);
        return s;
    };
    auto trapezoid = [&](long n) {
        const double h = (b - a) / n;
        double s = 0.5 * (f(a) + f(b));
        for (long i = 1; i < n; ++i)
            s += f(a + h * i);
        return h * s;
    };
    long n = cfg.initial_cells;
    double prev = sum(n);
    for (int d = 0; d < cfg.max_doublings; ++d) {
        n *= 2;
        const double cur = sum(n);
        const double e = std::abs(cur - prev);
        if (e <= cfg.tol && std::abs(cur - trapezoid(n)) <= 8.0 * cfg.tol)
            return ScalarQuadResult{cur, e, n};
        prev = cur;
    }
    throw std::runtime_error("integrate: did not converge");
}

/// The primitive G(t) = integral of F from a to t, as an interval function on
/// [a, dom_hi]. Evaluations refine on demand and are memoized per t behind a
/// mutex so shared instances stay safe under concurrent reads. G carries
/// F's endpoints as its analytic derivatives.
inline IntervalFn primitive(const IntervalFn& f, double a, const QuadConfig& cfg = {}) {
    if (!f.contains(a))
        throw std::domain_error("primitive: anchor outside domain");
    struct Memo {
        std::mutex m;
        std::map<double, Interval> cache;
    };
    auto memo = std::make_shared<Memo>();
    auto value = [f, a, cfg, memo](double t) -> Interval {
        {
            std::lock_guard<std::mutex> lock(memo->m);
            auto it = memo->cache.find(t);
            if (it != memo->cache.end())
                return it->second;
        }
        const Interval v = integrate(f, a, std::max(t, a), cfg).value;
        std::lock_guard<std::mutex> lock(memo->m);
        memo->cache.emplace(t, v);
        return v;
    };
    IntervalFn g;
    g.lo = [value](double t) { return value(t).lo(); };
    g.hi = [value](double t) { return value(t).hi(); };
    g.dom_lo = a;
    g.dom_hi = f.dom_hi;
    g.d_lo = f.lo;
    g.d_hi = f.hi;
    g.name = "primitive(" + f.name + ")";
    return g;
}

struct ReconstructConfig {
    QuadConfig quad{};
    ClassifyConfig classify{};
    int probe_points = 5;   // interior classification probes over [a, t]
    int grid_points = 257;  // fallback derivative grid when no analytic form
};

namespace detail {

// Derivative of F as an interval function over [a, b]: the analytic endpoint
// derivatives when present, otherwise classify_point on a uniform grid with
// piecewise-linear endpoint interpolation.
inline IntervalFn derivative_fn(const IntervalFn& f, double a, double b,
                                const ReconstructConfig& cfg, const char* err) {
    IntervalFn d;
    d.dom_lo = a;
    d.dom_hi = b;
    d.name = "derivative(" + f.name + ")";
    if (f.has_derivatives()) {
        d.lo = [dl = f.d_lo, dh = f.d_hi](double t) { return std::min(dl(t), dh(t)); };
        d.hi = [dl = f.d_lo, dh = f.d_hi](double t) { return std::max(dl(t), dh(t)); };
        return d;
    }
    const int n = std::max(cfg.grid_points, 3);
    auto grid = std::make_shared<std::vector<double>>();
    auto glo = std::make_shared<std::vector<double>>();
    auto ghi = std::make_shared<std::vector<double>>();
    for (int i = 0; i < n; ++i) {
        // pull the sample points slightly inside so both schedule sides fit
        const double u = (i + 0.5) / n;
        const double t = a + (b - a) * u;
        const DerivativeReport rep = classify_point(f, t, cfg.classify);
        std::optional<Interval> dv = rep.derivative;
        if (!dv)
            dv = rep.left ? rep.left : rep.right;
        if (!dv)
            throw std::runtime_error(err);
        grid->push_back(t);
        glo->push_back(dv->lo());
        ghi->push_back(dv->hi());
    }
    auto interp = [grid](const std::shared_ptr<std::vector<double>>& ys, double t) {
        const auto& xs = *grid;
        if (t <= xs.front())
            return ys->front();
        if (t >= xs.back())
            return ys->back();
        const auto it = std::upper_bound(xs.begin(), xs.end(), t);
        const std::size_t j = static_cast<std::size_t>(it - xs.begin());
        const double u = (t - xs[j - 1]) / (xs[j] - xs[j - 1]);
        return (1.0 - u) * (*ys)[j - 1] + u * (*ys)[j];
    };
    d.lo = [interp, glo, ghi](double t) { return std::min(interp(glo, t), interp(ghi, t)); };
    d.hi = [interp, glo, ghi](double t) { return std::max(interp(glo, t), interp(ghi, t)); };
    return d;
}

inline void probe_class(const IntervalFn& f, double a, double t, const ReconstructConfig& cfg,
                        Classification wanted, const char* err) {
    for (int k = 1; k <= cfg.probe_points; ++k) {
        const double s = a + (t - a) * k / (cfg.probe_points + 1);
        const DerivativeReport rep = classify_point(f, s, cfg.classify);
        const bool ok = rep.classification == wanted ||
                        rep.classification == Classification::singleton_multi;
        if (!ok)
            throw std::runtime_error(err);
    }
}

} // namespace detail

/// Newton-Leibniz reconstruction for H1 functions: F(a) + integral of F'
/// over [a, t]. The range must classify as H1 (singleton points allowed).
inline Interval reconstruct_h1(const IntervalFn& f, double a, double t,
                               const ReconstructConfig& cfg = {}) {
    if (!f.contains(a) || !f.contains(t))
        throw std::domain_error("reconstruct: range outside domain");
    if (a > t)
        throw std::invalid_argument("reconstruct: a > t");
    if (a == t)
        return f(a);
    detail::probe_class(f, a, t, cfg, Classification::h1, "not H1 on range");
    const IntervalFn df = detail::derivative_fn(f, a, t, cfg, "not H1 on range");
    const Interval integral = integrate(df, a, t, cfg.quad).value;
    return add(f(a), integral);
}

/// Newton-Leibniz reconstruction for H2 functions:
/// F(a) gh- ( - integral of F' over [a, t] ).
inline Interval reconstruct_h2(const IntervalFn& f, double a, double t,
                               const ReconstructConfig& cfg = {}) {
    if (!f.contains(a) || !f.contains(t))
        throw std::domain_error("reconstruct: range outside domain");
    if (a > t)
        throw std::invalid_argument("reconstruct: a > t");
    if (a == t)
        return f(a);
    detail::probe_class(f, a, t, cfg, Classification::h2, "not H2 on range");
    const IntervalFn df = detail::derivative_fn(f, a, t, cfg, "not H2 on range");
    const Interval integral = integrate(df, a, t, cfg.quad).value;
    return gh_sub(f(a), opposite(integral)).value;
}

/// Mean-value hull test: the average (1/(b-a)) * integral of F must lie in
/// the closed convex hull of the sampled endpoint curve {(lo(t), hi(t))}.
struct HullMembership {
    Interval mean;
    bool inside = false;
    double margin = 0.0;
};

inline HullMembership hull_membership(const IntervalFn& f, double a, double b,
                                      const QuadConfig& cfg = {}, int samples = 1000,
                                      double tol = 1e-6) {
    if (!(a < b))
        throw std::invalid_argument("hull_membership: needs a < b");
    const Interval mean = scale(1.0 / (b - a), integrate(f, a, b, cfg).value);
    std::vector<Point2> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double t = a + (b - a) * i / (samples - 1);
        const Interval v = f(t);
        pts.push_back(Point2{v.lo(), v.hi()});
    }
    const auto hull = convex_hull(std::move(pts));
    const double margin = hull_margin(hull, Point2{mean.lo(), mean.hi()});
    return HullMembership{mean, margin >= -tol, margin};
}

} // namespace ivcalc
