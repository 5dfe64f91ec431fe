#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "ivcalc/interval.hpp"
#include "ivcalc/limits.hpp"

namespace ivcalc {

using RealFn = std::function<double(double)>;

/**
 * An interval-valued function F(t) = [lo(t), hi(t)] on a closed real domain.
 *
 * Endpoint callables must be deterministic and satisfy lo(t) <= hi(t) on the
 * whole domain; the order is checked at every evaluation and an inversion is
 * a hard error, never a silent swap. `d_lo`/`d_hi` optionally carry analytic
 * endpoint derivatives for entries with closed forms.
 */
struct IntervalFn {
    RealFn lo;
    RealFn hi;
    double dom_lo = 0.0;
    double dom_hi = 1.0;
    RealFn d_lo;
    RealFn d_hi;
    std::string name;

    bool has_derivatives() const { return static_cast<bool>(d_lo) && static_cast<bool>(d_hi); }

    double domain_slack() const {
        return 64.0 * std::numeric_limits<double>::epsilon() *
               std::max({1.0, std::abs(dom_lo), std::abs(dom_hi)});
    }

    bool contains(double t) const {
        const double s = domain_slack();
        return t >= dom_lo - s && t <= dom_hi + s;
    }

    Interval operator()(double t) const {
        if (!contains(t)) {
            std::ostringstream os;
            os << "outside domain: t=" << t << " not in [" << dom_lo << ", " << dom_hi << "]";
            throw std::domain_error(os.str());
        }
        const double l = lo(t);
        const double h = hi(t);
        if (!std::isfinite(l) || !std::isfinite(h))
            throw std::invalid_argument("interval function: non-finite endpoint value");
        if (l > h) {
            std::ostringstream os;
            os << "endpoint inversion at t=" << t << ": lo=" << l << " > hi=" << h;
            throw std::runtime_error(os.str());
        }
        return Interval(l, h);
    }
};

inline Interval eval(const IntervalFn& f, double t) { return f(t); }

namespace detail {
inline std::pair<double, double> intersect_domain(const IntervalFn& f, const IntervalFn& g) {
    const double a = std::max(f.dom_lo, g.dom_lo);
    const double b = std::min(f.dom_hi, g.dom_hi);
    if (!(a <= b))
        throw std::invalid_argument("empty domain intersection");
    return {a, b};
}
} // namespace detail

/// Pointwise Minkowski sum on the domain intersection. Analytic endpoint
/// derivatives propagate when both operands carry them.
inline IntervalFn fn_add(const IntervalFn& f, const IntervalFn& g) {
    auto [a, b] = detail::intersect_domain(f, g);
    IntervalFn out;
    out.lo = [fl = f.lo, gl = g.lo](double t) { return fl(t) + gl(t); };
    out.hi = [fh = f.hi, gh = g.hi](double t) { return fh(t) + gh(t); };
    out.dom_lo = a;
    out.dom_hi = b;
    if (f.has_derivatives() && g.has_derivatives()) {
        out.d_lo = [fl = f.d_lo, gl = g.d_lo](double t) { return fl(t) + gl(t); };
        out.d_hi = [fh = f.d_hi, gh = g.d_hi](double t) { return fh(t) + gh(t); };
    }
    out.name = "(" + f.name + " + " + g.name + ")";
    return out;
}

/// Pointwise scalar multiple; endpoints swap for negative factors.
inline IntervalFn fn_scale(double lambda, const IntervalFn& f) {
    if (!std::isfinite(lambda))
        throw std::invalid_argument("interval function: non-finite scalar");
    IntervalFn out;
    if (lambda >= 0.0) {
        out.lo = [lambda, fl = f.lo](double t) { return lambda * fl(t); };
        out.hi = [lambda, fh = f.hi](double t) { return lambda * fh(t); };
        if (f.has_derivatives()) {
            out.d_lo = [lambda, fl = f.d_lo](double t) { return lambda * fl(t); };
            out.d_hi = [lambda, fh = f.d_hi](double t) { return lambda * fh(t); };
        }
    } else {
        out.lo = [lambda, fh = f.hi](double t) { return lambda * fh(t); };
        out.hi = [lambda, fl = f.lo](double t) { return lambda * fl(t); };
        if (f.has_derivatives()) {
            out.d_lo = [lambda, fh = f.d_hi](double t) { return lambda * fh(t); };
            out.d_hi = [lambda, fl = f.d_lo](double t) { return lambda * fl(t); };
        }
    }
    out.dom_lo = f.dom_lo;
    out.dom_hi = f.dom_hi;
    std::ostringstream os;
    os << lambda << "*" << f.name;
    out.name = os.str();
    return out;
}

/// Pointwise gH-difference (F gh- G)(t) = F(t) gh- G(t) on the domain
/// intersection. The endpoint callables realize the min/max form directly,
/// so the result is a valid interval function even where the width order of
/// F and G flips.
inline IntervalFn pointwise_gh_sub(const IntervalFn& f, const IntervalFn& g) {
    auto [a, b] = detail::intersect_domain(f, g);
    IntervalFn out;
    out.lo = [fl = f.lo, fh = f.hi, gl = g.lo, gh = g.hi](double t) {
        return std::min(fl(t) - gl(t), fh(t) - gh(t));
    };
    out.hi = [fl = f.lo, fh = f.hi, gl = g.lo, gh = g.hi](double t) {
        return std::max(fl(t) - gl(t), fh(t) - gh(t));
    };
    out.dom_lo = a;
    out.dom_hi = b;
    out.name = "(" + f.name + " ghsub " + g.name + ")";
    return out;
}

enum class Side { left, right, both };

namespace detail {

struct EndpointSequences {
    std::vector<double> lo, hi;
    std::vector<std::pair<double, double>> diffs; // (h_k, successive H distance)
};

inline EndpointSequences sample_approach(const IntervalFn& f, double t0, int dir,
                                         const std::vector<double>& steps) {
    EndpointSequences seq;
    seq.lo.reserve(steps.size());
    seq.hi.reserve(steps.size());
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const double t = t0 + dir * steps[k];
        const Interval v = f(t);
        seq.lo.push_back(v.lo());
        seq.hi.push_back(v.hi());
        if (k > 0) {
            const double d = std::max(std::abs(seq.lo[k] - seq.lo[k - 1]),
                                      std::abs(seq.hi[k] - seq.hi[k - 1]));
            seq.diffs.emplace_back(steps[k], d);
        }
    }
    return seq;
}

inline Interval package_endpoints(double lo, double hi) {
    if (lo > hi) {
        // rounding-level inversion from extrapolation collapses to the midpoint
        if (lo - hi <= 1e-9 * std::max(1.0, std::abs(lo))) {
            const double m = 0.5 * (lo + hi);
            return Interval(m, m);
        }
        throw std::runtime_error("no limit: extrapolated endpoints inverted");
    }
    return Interval(lo, hi);
}

inline Interval one_sided_limit(const IntervalFn& f, double t0, int dir,
                                const HSchedule& sched, double atol) {
    const auto steps = sched.steps();
    for (double h : steps) {
        if (!f.contains(t0 + dir * h)) {
            std::ostringstream os;
            os << "outside domain: approach point t=" << t0 + dir * h;
            throw std::domain_error(os.str());
        }
    }
    const auto seq = sample_approach(f, t0, dir, steps);
    const LimitEstimate verdict = judge_trace(seq.diffs, atol);
    if (verdict.verdict != Verdict::converges_to_zero)
        throw std::runtime_error("no limit: endpoint sequences do not contract");
    return package_endpoints(geometric_extrapolate(seq.lo, sched.ratio),
                             geometric_extrapolate(seq.hi, sched.ratio));
}

} // namespace detail

/// Numerical limit of F at t0 along the schedule. The limit exists exactly
/// when both endpoint sequences converge; a two-sided request additionally
/// demands that the one-sided limits agree within atol.
inline Interval limit_at(const IntervalFn& f, double t0, Side side, const HSchedule& sched,
                         double atol = 1e-4) {
    switch (side) {
        case Side::left:
            return detail::one_sided_limit(f, t0, -1, sched, atol);
        case Side::right:
            return detail::one_sided_limit(f, t0, +1, sched, atol);
        case Side::both: {
            const Interval l = detail::one_sided_limit(f, t0, -1, sched, atol);
            const Interval r = detail::one_sided_limit(f, t0, +1, sched, atol);
            if (hausdorff(l, r) > atol)
                throw std::runtime_error("no limit: one-sided limits disagree");
            return detail::package_endpoints(0.5 * (l.lo() + r.lo()), 0.5 * (l.hi() + r.hi()));
        }
    }
    throw std::logic_error("unreachable");
}

/// Residual trace r(h) = H(F(t0 +- h), F(t0)) over the schedule; the verdict
/// is converges-to-zero exactly when F is (numerically) continuous at t0.
/// Sides that leave the domain are skipped; at a domain endpoint the probe is
/// one-sided.
inline LimitEstimate continuity_probe(const IntervalFn& f, double t0, const HSchedule& sched,
                                      double atol = 1e-4) {
    const Interval at = f(t0);
    const auto steps = sched.steps();
    std::vector<std::pair<double, double>> trace;
    trace.reserve(steps.size());
    for (double h : steps) {
        double r = -1.0;
        if (f.contains(t0 - h))
            r = std::max(r, hausdorff(f(t0 - h), at));
        if (f.contains(t0 + h))
            r = std::max(r, hausdorff(f(t0 + h), at));
        if (r >= 0.0)
            trace.emplace_back(h, r);
    }
    return judge_trace(std::move(trace), atol);
}

/// Grid under-approximation of sup ||F(t)|| over the domain (the C([a,b],K)
/// norm), evaluated on a uniform grid including both endpoints.
inline double sup_norm(const IntervalFn& f, int grid_size) {
    if (grid_size < 2)
        throw std::invalid_argument("sup_norm: grid size must be at least 2");
    double best = 0.0;
    for (int i = 0; i < grid_size; ++i) {
        const double t = f.dom_lo + (f.dom_hi - f.dom_lo) * i / (grid_size - 1);
        best = std::max(best, f(t).norm());
    }
    return best;
}

} // namespace ivcalc
