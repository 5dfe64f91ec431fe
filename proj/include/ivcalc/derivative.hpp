#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ivcalc/interval.hpp"
#include "ivcalc/interval_fn.hpp"
#include "ivcalc/limits.hpp"

namespace ivcalc {

/// The four metric difference-quotient conditions. L1/L2 are the two left
/// forms, R1/R2 the two right forms; a side is differentiable when either of
/// its variants converges, and the variants are genuinely inequivalent.
enum class LimitVariant { L1, L2, R1, R2 };

inline const char* to_string(LimitVariant v) {
    switch (v) {
        case LimitVariant::L1: return "L1";
        case LimitVariant::L2: return "L2";
        case LimitVariant::R1: return "R1";
        case LimitVariant::R2: return "R2";
    }
    return "?";
}

/// Residual of one variant at step h:
///   L1: H(F(t0), F(t0-h) + hA) / h
///   L2: H(F(t0-h), F(t0) - hA) / h
///   R1: H(F(t0+h), F(t0) + hA) / h
///   R2: H(F(t0), F(t0+h) - hA) / h
inline double metric_residual(const IntervalFn& f, double t0, const Interval& a,
                              LimitVariant variant, double h) {
    if (!(h > 0.0))
        throw std::invalid_argument("metric_residual: step must be positive");
    switch (variant) {
        case LimitVariant::L1:
            return hausdorff(f(t0), add(f(t0 - h), scale(h, a))) / h;
        case LimitVariant::L2:
            return hausdorff(f(t0 - h), add(f(t0), scale(-h, a))) / h;
        case LimitVariant::R1:
            return hausdorff(f(t0 + h), add(f(t0), scale(h, a))) / h;
        case LimitVariant::R2:
            return hausdorff(f(t0), add(f(t0 + h), scale(-h, a))) / h;
    }
    throw std::logic_error("unreachable");
}

/// Residual trace of a variant over a step schedule, judged against atol.
inline LimitEstimate limit_estimate(const IntervalFn& f, double t0, const Interval& a,
                                    LimitVariant variant, const HSchedule& sched,
                                    double atol = 1e-4) {
    std::vector<std::pair<double, double>> trace;
    const auto steps = sched.steps();
    trace.reserve(steps.size());
    for (double h : steps)
        trace.emplace_back(h, metric_residual(f, t0, a, variant, h));
    return judge_trace(std::move(trace), atol);
}

struct ClassifyConfig {
    HSchedule schedule{};
    double atol = 1e-4;          // residual tolerance for the limit verdicts
    double match_tol = 1e-4;     // left/right derivative agreement
    double singleton_tol = 1e-6; // width bound when several combos hold
    double fd_step = 1e-3;       // base step for endpoint finite differences
    double stab_tol = 1e-4;      // stabilization tolerance of slope estimates
};

namespace detail {

// One-sided slope of a scalar callable at t0 (dir = +1 forward, -1 backward):
// two-level Richardson on the first-order quotient, cross-checked at a
// shifted base step. Returns nullopt when the two estimates disagree.
inline std::optional<double> endpoint_slope(const RealFn& fn, double t0, int dir, double h0,
                                            double stab_tol) {
    const double f0 = fn(t0);
    auto quot = [&](double h) { return dir * (fn(t0 + dir * h) - f0) / h; };
    auto richardson2 = [](double d1, double d2, double d4) {
        const double a1 = 2.0 * d2 - d1;
        const double a2 = 2.0 * d4 - d2;
        return (4.0 * a2 - a1) / 3.0;
    };
    const double d1 = quot(h0);
    const double d2 = quot(h0 / 2);
    const double d4 = quot(h0 / 4);
    const double d8 = quot(h0 / 8);
    const double est_a = richardson2(d1, d2, d4);
    const double est_b = richardson2(d2, d4, d8);
    if (!std::isfinite(est_a) || !std::isfinite(est_b))
        return std::nullopt;
    if (std::abs(est_a - est_b) > stab_tol * (1.0 + std::abs(est_b)))
        return std::nullopt;
    return est_b;
}

inline Interval slopes_to_interval(double dlo, double dhi) {
    return Interval(std::min(dlo, dhi), std::max(dlo, dhi));
}

inline bool side_reachable(const IntervalFn& f, double t0, int dir, double h) {
    return f.contains(t0 + dir * h);
}

} // namespace detail

struct CandidatePair {
    std::optional<Interval> left;
    std::optional<Interval> right;
};

/// One-sided derivative candidates [min(d_lo, d_hi), max(d_lo, d_hi)] built
/// from the endpoint slopes of each side. Analytic endpoint derivatives are
/// used when the function carries them; otherwise the slopes come from
/// one-sided finite differences with Richardson extrapolation. A side that
/// does not fit in the domain, or whose estimate does not stabilize, is
/// absent; if neither side yields a candidate this throws.
inline CandidatePair candidate_derivatives(const IntervalFn& f, double t0,
                                           const ClassifyConfig& cfg = {}) {
    if (!f.contains(t0))
        throw std::domain_error("candidate_derivatives: t0 outside domain");
    CandidatePair out;
    const double reach = std::max(cfg.schedule.h0, cfg.fd_step);
    for (int dir : {-1, +1}) {
        if (!detail::side_reachable(f, t0, dir, reach))
            continue;
        std::optional<double> dlo, dhi;
        if (f.has_derivatives()) {
            const double a = f.d_lo(t0);
            const double b = f.d_hi(t0);
            if (std::isfinite(a) && std::isfinite(b)) {
                dlo = a;
                dhi = b;
            }
        }
        if (!dlo || !dhi) {
            dlo = detail::endpoint_slope(f.lo, t0, dir, cfg.fd_step, cfg.stab_tol);
            dhi = detail::endpoint_slope(f.hi, t0, dir, cfg.fd_step, cfg.stab_tol);
        }
        if (dlo && dhi) {
            Interval cand = detail::slopes_to_interval(*dlo, *dhi);
            (dir < 0 ? out.left : out.right) = cand;
        }
    }
    if (!out.left && !out.right)
        throw std::runtime_error("derivative estimate diverged");
    return out;
}

enum class Classification { h1, h2, singleton_multi, left_only, right_only, none };

inline const char* to_string(Classification c) {
    switch (c) {
        case Classification::h1: return "H1";
        case Classification::h2: return "H2";
        case Classification::singleton_multi: return "singleton-multi";
        case Classification::left_only: return "left-only";
        case Classification::right_only: return "right-only";
        case Classification::none: return "none";
    }
    return "none";
}

/// Full differentiability verdict at a point: one-sided derivatives, the four
/// variant traces, which combined conditions (D1..D4) hold, the H1/H2/
/// singleton classification, and the endpoint-formula cross-check.
struct DerivativeReport {
    double t0 = 0.0;
    std::optional<Interval> left;
    std::optional<Interval> right;
    std::optional<Interval> derivative;
    std::optional<Interval> gh_value;
    double consistency = std::numeric_limits<double>::quiet_NaN();
    std::array<LimitEstimate, 4> variants{}; // indexed by LimitVariant
    std::array<bool, 4> combos{};            // D1 = R1&L1, D2 = R2&L2, D3 = R2&L1, D4 = R1&L2
    Classification classification = Classification::none;

    const LimitEstimate& variant(LimitVariant v) const {
        return variants[static_cast<std::size_t>(v)];
    }
    bool combo(int k) const { return combos[static_cast<std::size_t>(k - 1)]; }
};

namespace detail {

// gH-derivative by the endpoint formula [min(d_lo', d_hi'), max(...)], using
// analytic derivatives when present and two-sided (or boundary one-sided)
// finite differences otherwise. nullopt when the slopes do not stabilize or
// the two sides disagree.
inline std::optional<Interval> gh_formula_value(const IntervalFn& f, double t0,
                                                const ClassifyConfig& cfg) {
    if (f.has_derivatives()) {
        const double a = f.d_lo(t0);
        const double b = f.d_hi(t0);
        if (std::isfinite(a) && std::isfinite(b))
            return slopes_to_interval(a, b);
        return std::nullopt;
    }
    const bool can_left = side_reachable(f, t0, -1, cfg.fd_step);
    const bool can_right = side_reachable(f, t0, +1, cfg.fd_step);
    std::optional<double> dlo, dhi;
    if (can_left && can_right) {
        const auto ll = endpoint_slope(f.lo, t0, -1, cfg.fd_step, cfg.stab_tol);
        const auto lr = endpoint_slope(f.lo, t0, +1, cfg.fd_step, cfg.stab_tol);
        const auto hl = endpoint_slope(f.hi, t0, -1, cfg.fd_step, cfg.stab_tol);
        const auto hr = endpoint_slope(f.hi, t0, +1, cfg.fd_step, cfg.stab_tol);
        if (ll && lr && std::abs(*ll - *lr) <= cfg.stab_tol * (1.0 + std::abs(*lr)))
            dlo = 0.5 * (*ll + *lr);
        if (hl && hr && std::abs(*hl - *hr) <= cfg.stab_tol * (1.0 + std::abs(*hr)))
            dhi = 0.5 * (*hl + *hr);
    } else if (can_left || can_right) {
        const int dir = can_left ? -1 : +1;
        dlo = endpoint_slope(f.lo, t0, dir, cfg.fd_step, cfg.stab_tol);
        dhi = endpoint_slope(f.hi, t0, dir, cfg.fd_step, cfg.stab_tol);
    }
    if (dlo && dhi)
        return slopes_to_interval(*dlo, *dhi);
    return std::nullopt;
}

} // namespace detail

/// Classifies differentiability of F at t0.
///
/// Candidates come from the one-sided endpoint slopes and are then verified
/// through the metric limits, so differentiability is never asserted from the
/// candidates alone. A side counts as differentiable when either of its
/// variants converges. The derivative is set when both sides exist and agree
/// within match_tol. Combined conditions D1..D4 are conjunctions of the
/// variant verdicts and are only meaningful (and only set) when the
/// derivative exists. Classification: two or more combos force a singleton
/// (recorded as singleton-multi); otherwise D1 alone is H1 and D2 alone is
/// H2. At a domain endpoint only the inward side is classified.
inline DerivativeReport classify_point(const IntervalFn& f, double t0,
                                       const ClassifyConfig& cfg = {}) {
    DerivativeReport rep;
    rep.t0 = t0;
    if (!f.contains(t0))
        throw std::domain_error("classify_point: t0 outside domain");

    const double reach = std::max(cfg.schedule.h0, cfg.fd_step);
    const bool left_ok = detail::side_reachable(f, t0, -1, reach);
    const bool right_ok = detail::side_reachable(f, t0, +1, reach);

    CandidatePair cand;
    try {
        cand = candidate_derivatives(f, t0, cfg);
    } catch (const std::runtime_error&) {
        // no side stabilized; fall through with empty candidates
    }

    auto run = [&](LimitVariant v, const std::optional<Interval>& a) {
        if (a)
            rep.variants[static_cast<std::size_t>(v)] = limit_estimate(f, t0, *a, v, cfg.schedule, cfg.atol);
    };
    if (left_ok && cand.left) {
        run(LimitVariant::L1, cand.left);
        run(LimitVariant::L2, cand.left);
    }
    if (right_ok && cand.right) {
        run(LimitVariant::R1, cand.right);
        run(LimitVariant::R2, cand.right);
    }

    auto ok = [&](LimitVariant v) { return rep.variant(v).converged(); };
    if (cand.left && (ok(LimitVariant::L1) || ok(LimitVariant::L2)))
        rep.left = cand.left;
    if (cand.right && (ok(LimitVariant::R1) || ok(LimitVariant::R2)))
        rep.right = cand.right;

    if (rep.left && rep.right && hausdorff(*rep.left, *rep.right) <= cfg.match_tol) {
        rep.derivative = Interval(0.5 * (rep.left->lo() + rep.right->lo()),
                                  0.5 * (rep.left->hi() + rep.right->hi()));
        rep.combos[0] = ok(LimitVariant::R1) && ok(LimitVariant::L1);
        rep.combos[1] = ok(LimitVariant::R2) && ok(LimitVariant::L2);
        rep.combos[2] = ok(LimitVariant::R2) && ok(LimitVariant::L1);
        rep.combos[3] = ok(LimitVariant::R1) && ok(LimitVariant::L2);
    }

    if (rep.derivative) {
        const int n = rep.combos[0] + rep.combos[1] + rep.combos[2] + rep.combos[3];
        if (n >= 2)
            rep.classification = Classification::singleton_multi;
        else if (rep.combos[0])
            rep.classification = Classification::h1;
        else if (rep.combos[1])
            rep.classification = Classification::h2;
        else if ((rep.combos[2] || rep.combos[3]) &&
                 rep.derivative->width() <= cfg.singleton_tol)
            rep.classification = Classification::singleton_multi;
        else
            rep.classification = Classification::none;
    } else if (rep.left && !rep.right) {
        rep.classification = Classification::left_only;
    } else if (rep.right && !rep.left) {
        rep.classification = Classification::right_only;
    } else {
        rep.classification = Classification::none;
    }

    rep.gh_value = detail::gh_formula_value(f, t0, cfg);
    if (rep.derivative && rep.gh_value)
        rep.consistency = hausdorff(*rep.derivative, *rep.gh_value);
    return rep;
}

/// gH-derivative via two independent routes: the endpoint-derivative formula
/// and the extrapolated limit of the scaled gH difference quotient
/// (1/h) * (F(t0+h) gh- F(t0)) along the schedule (backward at the right
/// domain endpoint). Each route carries its own stabilization verdict.
struct GhDerivative {
    std::optional<Interval> formula;
    std::optional<Interval> quotient;
    Verdict formula_verdict = Verdict::inconclusive;
    Verdict quotient_verdict = Verdict::inconclusive;
};

inline GhDerivative gh_derivative(const IntervalFn& f, double t0, const ClassifyConfig& cfg = {}) {
    if (!f.contains(t0))
        throw std::domain_error("gh_derivative: t0 outside domain");
    GhDerivative out;
    out.formula = detail::gh_formula_value(f, t0, cfg);
    out.formula_verdict = out.formula ? Verdict::converges_to_zero : Verdict::diverges;

    const auto steps = cfg.schedule.steps();
    const bool forward = detail::side_reachable(f, t0, +1, cfg.schedule.h0);
    const bool backward = detail::side_reachable(f, t0, -1, cfg.schedule.h0);
    if (forward || backward) {
        const Interval at = f(t0);
        std::vector<double> qlo, qhi;
        std::vector<std::pair<double, double>> diffs;
        qlo.reserve(steps.size());
        qhi.reserve(steps.size());
        for (std::size_t k = 0; k < steps.size(); ++k) {
            const double h = steps[k];
            const Interval q = forward ? scale(1.0 / h, gh_sub(f(t0 + h), at).value)
                                       : scale(1.0 / h, gh_sub(at, f(t0 - h)).value);
            qlo.push_back(q.lo());
            qhi.push_back(q.hi());
            if (k > 0)
                diffs.emplace_back(h, std::max(std::abs(qlo[k] - qlo[k - 1]),
                                               std::abs(qhi[k] - qhi[k - 1])));
        }
        const LimitEstimate j = judge_trace(std::move(diffs), cfg.atol);
        out.quotient_verdict = j.verdict;
        if (j.converged()) {
            const double lo = geometric_extrapolate(qlo, cfg.schedule.ratio);
            const double hi = geometric_extrapolate(qhi, cfg.schedule.ratio);
            out.quotient = detail::package_endpoints(std::min(lo, hi), std::max(lo, hi));
        }
    }
    if (!out.formula && !out.quotient)
        throw std::runtime_error("derivative estimate diverged");
    return out;
}

/// The three symmetric residual traces at an interior point:
///   s1: H(F(t0+h), F(t0-h) + 2hA) / h
///   s2: H(F(t0-h), F(t0+h) - 2hA) / h
///   s3: H(F(t0+h) - hA, F(t0-h) + hA) / h
/// s1 converges wherever D1 holds, s2 wherever D2 holds, and s3 wherever D3
/// or D4 holds.
struct SymmetricResiduals {
    LimitEstimate s1, s2, s3;
};

inline SymmetricResiduals symmetric_residuals(const IntervalFn& f, double t0, const Interval& a,
                                              const ClassifyConfig& cfg = {}) {
    const auto steps = cfg.schedule.steps();
    if (!detail::side_reachable(f, t0, -1, cfg.schedule.h0) ||
        !detail::side_reachable(f, t0, +1, cfg.schedule.h0))
        throw std::domain_error("symmetric_residuals: t0 must be interior to the domain");
    std::vector<std::pair<double, double>> t1, t2, t3;
    for (double h : steps) {
        const Interval fm = f(t0 - h);
        const Interval fp = f(t0 + h);
        t1.emplace_back(h, hausdorff(fp, add(fm, scale(2.0 * h, a))) / h);
        t2.emplace_back(h, hausdorff(fm, add(fp, scale(-2.0 * h, a))) / h);
        t3.emplace_back(h, hausdorff(add(fp, scale(-h, a)), add(fm, scale(h, a))) / h);
    }
    SymmetricResiduals out;
    out.s1 = judge_trace(std::move(t1), cfg.atol);
    out.s2 = judge_trace(std::move(t2), cfg.atol);
    out.s3 = judge_trace(std::move(t3), cfg.atol);
    return out;
}

/// One checked calculus identity: the measured derivative of the combined
/// function against the algebraic right-hand side. Identities whose
/// Hukuhara-existence hypotheses fail are reported as skipped with a reason.
struct IdentityCheck {
    std::string name;
    bool checked = false;
    std::string skip_reason;
    Interval measured;
    Interval expected;
    double residual = std::numeric_limits<double>::quiet_NaN();
};

struct CalculusReport {
    DerivativeReport f_report;
    DerivativeReport g_report;
    std::vector<IdentityCheck> identities;
};

/// Verifies the derivative calculus rules at t0 for differentiable F, G:
/// the scalar rule (lambda F)' = lambda F', and the sum/difference rules,
/// which take the matched-class form (F+G)' = F' + G', (F gh- G)' = F' gh- G'
/// when F and G are in the same class, and the mixed form
/// (F+G)' = F' gh- (-G'), (F gh- G)' = F' + (-G') when the classes differ.
/// A singleton-multi verdict is compatible with either class.
inline CalculusReport calculus_check(const IntervalFn& f, const IntervalFn& g, double t0,
                                     double lambda, const ClassifyConfig& cfg = {}) {
    CalculusReport out;
    out.f_report = classify_point(f, t0, cfg);
    out.g_report = classify_point(g, t0, cfg);
    if (!out.f_report.derivative || !out.g_report.derivative)
        throw std::runtime_error("prerequisite not differentiable");
    const Interval fp = *out.f_report.derivative;
    const Interval gp = *out.g_report.derivative;

    auto acts_h1 = [](const DerivativeReport& r) {
        return r.classification == Classification::h1 ||
               r.classification == Classification::singleton_multi;
    };
    auto acts_h2 = [](const DerivativeReport& r) {
        return r.classification == Classification::h2 ||
               r.classification == Classification::singleton_multi;
    };
    const bool same_class = (acts_h1(out.f_report) && acts_h1(out.g_report)) ||
                            (acts_h2(out.f_report) && acts_h2(out.g_report));
    const bool mixed_class = !same_class &&
                             ((acts_h1(out.f_report) && acts_h2(out.g_report)) ||
                              (acts_h2(out.f_report) && acts_h1(out.g_report)));

    auto measure = [&](const IntervalFn& fn, IdentityCheck& chk, const Interval& expected) {
        const DerivativeReport r = classify_point(fn, t0, cfg);
        if (!r.derivative) {
            chk.skip_reason = "combined function did not classify as differentiable";
            return;
        }
        chk.checked = true;
        chk.measured = *r.derivative;
        chk.expected = expected;
        chk.residual = hausdorff(chk.measured, chk.expected);
    };

    {
        IdentityCheck chk;
        chk.name = "scale";
        measure(fn_scale(lambda, f), chk, scale(lambda, fp));
        out.identities.push_back(chk);
    }
    {
        IdentityCheck chk;
        chk.name = "sum";
        if (same_class) {
            measure(fn_add(f, g), chk, add(fp, gp));
        } else if (mixed_class) {
            const GhDifference rhs = gh_sub(fp, opposite(gp));
            if (!rhs.hukuhara)
                chk.skip_reason = "F' gh- (-G') is not a Hukuhara difference";
            else
                measure(fn_add(f, g), chk, rhs.value);
        } else {
            chk.skip_reason = "classes of F and G not established";
        }
        out.identities.push_back(chk);
    }
    {
        IdentityCheck chk;
        chk.name = "difference";
        const bool fg_exists = gh_sub(f(t0), g(t0)).hukuhara;
        if (!fg_exists) {
            chk.skip_reason = "F gh- G is not a Hukuhara difference at t0";
        } else if (same_class) {
            const GhDifference rhs = gh_sub(fp, gp);
            if (!rhs.hukuhara)
                chk.skip_reason = "F' gh- G' is not a Hukuhara difference";
            else
                measure(pointwise_gh_sub(f, g), chk, rhs.value);
        } else if (mixed_class) {
            measure(pointwise_gh_sub(f, g), chk, add(fp, opposite(gp)));
        } else {
            chk.skip_reason = "classes of F and G not established";
        }
        out.identities.push_back(chk);
    }
    return out;
}

} // namespace ivcalc
