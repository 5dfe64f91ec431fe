#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "ivcalc/corpus.hpp"
#include "ivcalc/derivative.hpp"
#include "ivcalc/integral.hpp"
#include "ivcalc/interval.hpp"

namespace ivcalc {

/// SplitMix64: tiny deterministic generator. Every verification case derives
/// its own seed from (suite seed, law index, case index), so results are
/// reproducible and independent of evaluation order.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [lo, hi] inclusive.
    int range(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t law, std::uint64_t index) {
    SplitMix64 s(seed ^ (law * 0xA24BAED4963EE407ULL) ^ (index * 0x9FB21C651E98DF25ULL));
    return s.next();
}

namespace dyadic {

// Endpoints on the grid k/64 with |k| <= 512: all the law arithmetic
// (sums, differences, min/max, small products) is then exact in binary64,
// so the algebraic identities can be asserted with zero tolerance.
inline double scalar(SplitMix64& rng, int lo = -256, int hi = 256) {
    return rng.range(lo, hi) / 64.0;
}

inline Interval draw(SplitMix64& rng) {
    const double lo = scalar(rng);
    return Interval(lo, lo + rng.range(0, 256) / 64.0);
}

inline Interval draw_width_at_least(SplitMix64& rng, double wmin) {
    const double lo = scalar(rng);
    return Interval(lo, lo + wmin + rng.range(0, 128) / 64.0);
}

} // namespace dyadic

struct LawResult {
    std::string name;
    long passed = 0;
    long failed = 0;
    std::string counterexample; // first failing case, empty when clean
};

struct SuiteReport {
    std::string suite;
    long cases = 0;
    std::uint64_t seed = 0;
    std::vector<LawResult> laws;
    bool all_pass = true;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt(const Interval& a) {
    return "[" + fmt(a.lo()) + "," + fmt(a.hi()) + "]";
}

// Runs one law over `cases` derived-seed cases. The check returns an empty
// string on success and a counterexample description on failure.
template <typename Check>
void run_law(SuiteReport& report, std::uint64_t law_index, const std::string& name, long cases,
             Check&& check) {
    LawResult result;
    result.name = name;
    for (long i = 0; i < cases; ++i) {
        SplitMix64 rng(derive_seed(report.seed, law_index, static_cast<std::uint64_t>(i)));
        std::string cex;
        try {
            cex = check(rng);
        } catch (const std::exception& e) {
            cex = std::string("exception: ") + e.what();
        }
        if (cex.empty()) {
            ++result.passed;
        } else {
            ++result.failed;
            if (result.counterexample.empty()) {
                char head[32];
                std::snprintf(head, sizeof head, "case %ld: ", i);
                result.counterexample = head + cex;
            }
        }
    }
    report.all_pass = report.all_pass && result.failed == 0;
    report.laws.push_back(std::move(result));
}

inline std::string expect_eq(const Interval& got, const Interval& want, const std::string& what) {
    if (got == want)
        return {};
    return what + ": got " + fmt(got) + ", want " + fmt(want);
}

inline std::string expect_eq(double got, double want, const std::string& what) {
    if (got == want)
        return {};
    return what + ": got " + fmt(got) + ", want " + fmt(want);
}

inline std::string expect_le(double lhs, double rhs, const std::string& what) {
    if (lhs <= rhs)
        return {};
    return what + ": " + fmt(lhs) + " > " + fmt(rhs);
}

} // namespace detail

/// Algebraic law suite over exact dyadic intervals: the gH-difference and
/// Hausdorff-distance identities, each checked with zero tolerance under its
/// width precondition (enforced by construction in the generators).
inline SuiteReport run_laws_suite(long cases, std::uint64_t seed) {
    using namespace detail;
    SuiteReport rep;
    rep.suite = "laws";
    rep.cases = cases;
    rep.seed = seed;
    std::uint64_t lid = 0;

    run_law(rep, lid++, "prop3_a_zero_and_self", cases, [](SplitMix64& rng) {
        const Interval a = dyadic::draw(rng);
        std::string e = expect_eq(gh_sub(a, Interval::zero()).value, a, "A ghsub 0 = A");
        if (!e.empty()) return "A=" + fmt(a) + " " + e;
        e = expect_eq(gh_sub(a, a).value, Interval::zero(), "A ghsub A = 0");
        if (!e.empty()) return "A=" + fmt(a) + " " + e;
        return std::string{};
    });
    run_law(rep, lid++, "prop3_b_opposites", cases, [](SplitMix64& rng) {
        const Interval a = dyadic::draw(rng), b = dyadic::draw(rng);
        const std::string e = expect_eq(gh_sub(opposite(a), opposite(b)).value,
                                        opposite(gh_sub(a, b).value), "(-A) ghsub (-B) = -(A ghsub B)");
        return e.empty() ? e : "A=" + fmt(a) + " B=" + fmt(b) + " " + e;
    });
    run_law(rep, lid++, "prop3_c_cancel_add", cases, [](SplitMix64& rng) {
        const Interval a = dyadic::draw(rng), b = dyadic::draw(rng);
        const std::string e = expect_eq(gh_sub(add(a, b), b).value, a, "(A+B) ghsub B = A");
        return e.empty() ? e : "A=" + fmt(a) + " B=" + fmt(b) + " " + e;
    });
    run_law(rep, lid++, "prop3_d_recover", cases, [](SplitMix64& rng) {
        const Interval a = dyadic::draw(rng);
        const Interval b = dyadic::draw_width_at_least(rng, a.width());
        const std::string e = expect_eq(add(a, gh_sub(b, a).value), b, "A + (B ghsub A) = B");
        return e.empty() ? e : "A=" + fmt(a) + " B=" + fmt(b) + " " + e;
    });
    run_law(rep, lid++, "prop3_e_shift", cases, [](SplitMix64& rng) {
        const Interval a = dyadic::draw(rng);
        const Interval b = dyadic::draw_width_at_least(rng, a.width());
        const Interval c = dyadic::draw(rng);
        const std::string e = expect_eq(gh_sub(add(b, c), a).value, add(gh_sub(b, a).value, c),
                                        "(B+C) ghsub A = (B ghsub A) + C");
        return e.empty() ? e : "A=" + fmt(a) + " B=" + fmt(b) + " C=" + fmt(c) + " " + e;
    });
    run_law(rep, lid++, "prop3_f_pairs", cases, [](SplitMix64& rng) {
        const Interval b = dyadic::draw(rng);
        const Interval a = dyadic::draw_width_at_least(rng, b.width());
        const Interval d = dyadic::draw(rng);
        const Interval c = dyadic::draw_width_at_least(rng, d.width());
        const std::string e = expect_eq(add(gh_sub(a, b).value, gh_sub(c, d).value),
                                        gh_sub(add(a, c), add(b, d)).value,
                                        "(A ghsub B)+(C ghsub D) = (A+C) ghsub (B+D)");
        return e.empty() ? e
                         : "A=" + fmt(a) + " B=" + fmt(b) + " C=" + fmt(c) + " D=" + fmt(d) + " " + e;
    });
    run_law(rep, lid++, "prop3_g_chain", cases, [](SplitMix64& rng) {
        const Interval c = dyadic::draw(rng);
        const Interval b = dyadic::draw_width_at_least(rng, c.width());
        const Interval a = dyadic::draw_width_at_least(rng, b.width());
        const std::string e = expect_eq(add(gh_sub(a, b).value, gh_sub(b, c).value),
                                        gh_sub(a, c).value,
                                        "(A ghsub B)+(B ghsub C) = A ghsub C");
        return e.empty() ? e : "A=" + fmt(a) + " B=" + fmt(b) + " C=" + fmt(c) + " " + e;
    });

    run_law(rep, lid++, "p1_i_translation", cases, [](SplitMix64& rng) {
        const Interval a = dyadic::draw(rng), b = dyadic::draw(rng), c = dyadic::draw(rng);
        const std::string e =
            expect_eq(hausdorff(add(a, c), add(b, c)), hausdorff(a, b), "H(A+C,B+C) = H(A,B)");
        return e.empty() ? e : "A=" + fmt(a) + " B=" + fmt(b) + " C=" + fmt(c) + " " + e;
    });
    run_law(rep, lid++, "p1_ii_homogeneity", cases, [](SplitMix64& rng) {
        const Interval a = dyadic::draw(rng), b = dyadic::draw(rng);
        const double lam = dyadic::scalar(rng);
        const std::string e = expect_eq(hausdorff(scale(lam, a), scale(lam, b)),
                                        std::abs(lam) * hausdorff(a, b),
                                        "H(lA,lB) = |l| H(A,B)");
        return e.empty() ? e : "l=" + fmt(lam) + " A=" + fmt(a) + " B=" + fmt(b) + " " + e;
    });
    run_law(rep, lid++, "p1_iii_subadditive", cases, [](SplitMix64& rng) {
        const Interval a = dyadic::draw(rng), b = dyadic::draw(rng);
        const Interval c = dyadic::draw(rng), d = dyadic::draw(rng);
        const std::string e = expect_le(hausdorff(add(a, b), add(c, d)),
                                        hausdorff(a, c) + hausdorff(b, d),
                                        "H(A+B,C+D) <= H(A,C)+H(B,D)");
        return e.empty() ? e
                         : "A=" + fmt(a) + " B=" + fmt(b) + " C=" + fmt(c) + " D=" + fmt(d) + " " + e;
    });
    run_law(rep, lid++, "p1_iv_same_sign_scalars", cases, [](SplitMix64& rng) {
        const Interval a = dyadic::draw(rng);
        const int sign = rng.range(0, 1) ? 1 : -1;
        const double lam = sign * dyadic::scalar(rng, 0, 256);
        const double mu = sign * dyadic::scalar(rng, 0, 256);
        const std::string e = expect_eq(hausdorff(scale(lam, a), scale(mu, a)),
                                        std::abs(lam - mu) * hausdorff(a, Interval::zero()),
                                        "H(lA,mA) = |l-m| H(A,0)");
        return e.empty() ? e : "l=" + fmt(lam) + " m=" + fmt(mu) + " A=" + fmt(a) + " " + e;
    });
    run_law(rep, lid++, "p1_v_shifted_distance", cases, [](SplitMix64& rng) {
        const Interval b = dyadic::draw(rng);
        const Interval a = dyadic::draw_width_at_least(rng, b.width());
        const Interval c = dyadic::draw(rng);
        const std::string e = expect_eq(hausdorff(gh_sub(a, b).value, c), hausdorff(a, add(b, c)),
                                        "H(A ghsub B, C) = H(A, B+C)");
        return e.empty() ? e : "A=" + fmt(a) + " B=" + fmt(b) + " C=" + fmt(c) + " " + e;
    });
    run_law(rep, lid++, "p1_vi_common_subtrahend", cases, [](SplitMix64& rng) {
        const Interval c = dyadic::draw(rng);
        const Interval a = dyadic::draw_width_at_least(rng, c.width());
        const Interval b = dyadic::draw_width_at_least(rng, c.width());
        const std::string e = expect_eq(hausdorff(a, b),
                                        hausdorff(gh_sub(a, c).value, gh_sub(b, c).value),
                                        "H(A,B) = H(A ghsub C, B ghsub C)");
        return e.empty() ? e : "A=" + fmt(a) + " B=" + fmt(b) + " C=" + fmt(c) + " " + e;
    });
    run_law(rep, lid++, "p1_vii_difference_bound", cases, [](SplitMix64& rng) {
        const Interval b = dyadic::draw(rng);
        const Interval a = dyadic::draw_width_at_least(rng, b.width());
        const Interval d = dyadic::draw(rng);
        const Interval c = dyadic::draw_width_at_least(rng, d.width());
        const std::string e = expect_le(hausdorff(gh_sub(a, b).value, gh_sub(c, d).value),
                                        hausdorff(a, c) + hausdorff(b, d),
                                        "H(A ghsub B, C ghsub D) <= H(A,C)+H(B,D)");
        return e.empty() ? e
                         : "A=" + fmt(a) + " B=" + fmt(b) + " C=" + fmt(c) + " D=" + fmt(d) + " " + e;
    });
    run_law(rep, lid++, "p1_viii_mixed_sum", cases, [](SplitMix64& rng) {
        const Interval a = dyadic::draw(rng), b = dyadic::draw(rng);
        const Interval c = dyadic::draw(rng), d = dyadic::draw(rng);
        const Interval f = dyadic::draw(rng);
        const Interval e5 = dyadic::draw_width_at_least(rng, f.width());
        const std::string e = expect_le(
            hausdorff(add(a, b), add(add(c, d), gh_sub(e5, f).value)),
            hausdorff(a, add(c, e5)) + hausdorff(d, add(b, f)),
            "H(A+B, C+D+(E ghsub F)) <= H(A,C+E)+H(D,B+F)");
        return e.empty() ? e
                         : "A=" + fmt(a) + " B=" + fmt(b) + " C=" + fmt(c) + " D=" + fmt(d) +
                               " E=" + fmt(e5) + " F=" + fmt(f) + " " + e;
    });
    run_law(rep, lid++, "p1_ix_mixed_difference", cases, [](SplitMix64& rng) {
        const Interval b = dyadic::draw(rng);
        const Interval a = dyadic::draw_width_at_least(rng, b.width());
        const Interval d = dyadic::draw(rng);
        const Interval c = dyadic::draw_width_at_least(rng, d.width());
        const Interval e5 = dyadic::draw(rng), f = dyadic::draw(rng);
        const std::string e = expect_le(
            hausdorff(gh_sub(a, b).value, add(add(gh_sub(c, d).value, e5), f)),
            hausdorff(a, add(c, e5)) + hausdorff(d, add(b, f)),
            "H(A ghsub B, (C ghsub D)+E+F) <= H(A,C+E)+H(D,B+F)");
        return e.empty() ? e
                         : "A=" + fmt(a) + " B=" + fmt(b) + " C=" + fmt(c) + " D=" + fmt(d) +
                               " E=" + fmt(e5) + " F=" + fmt(f) + " " + e;
    });

    run_law(rep, lid++, "equiv_1_characterization", cases, [](SplitMix64& rng) {
        const Interval a = dyadic::draw(rng), b = dyadic::draw(rng);
        const Interval g = gh_sub(a, b).value;
        std::string e;
        if (a.width() >= b.width())
            e = expect_eq(add(b, g), a, "B + (A ghsub B) = A");
        else
            e = expect_eq(add(a, opposite(g)), b, "A + (-(A ghsub B)) = B");
        return e.empty() ? e : "A=" + fmt(a) + " B=" + fmt(b) + " " + e;
    });
    run_law(rep, lid++, "width_of_gh_difference", cases, [](SplitMix64& rng) {
        const Interval a = dyadic::draw(rng), b = dyadic::draw(rng);
        const std::string e = expect_eq(gh_sub(a, b).value.width(),
                                        std::abs(a.width() - b.width()),
                                        "w(A ghsub B) = |w(A)-w(B)|");
        return e.empty() ? e : "A=" + fmt(a) + " B=" + fmt(b) + " " + e;
    });
    run_law(rep, lid++, "distance_equals_norm_of_gh", cases, [](SplitMix64& rng) {
        const Interval a = dyadic::draw(rng), b = dyadic::draw(rng);
        const std::string e =
            expect_eq(hausdorff(a, b), gh_sub(a, b).value.norm(), "H(A,B) = ||A ghsub B||");
        return e.empty() ? e : "A=" + fmt(a) + " B=" + fmt(b) + " " + e;
    });
    run_law(rep, lid++, "metric_identity", cases, [](SplitMix64& rng) {
        const Interval a = dyadic::draw(rng);
        std::string e = expect_eq(hausdorff(a, a), 0.0, "H(A,A) = 0");
        if (!e.empty()) return "A=" + fmt(a) + " " + e;
        const double shift = (1.0 + rng.range(0, 64)) / 64.0;
        const Interval b = add(a, Interval::singleton(shift));
        if (hausdorff(a, b) <= 0.0)
            return "A=" + fmt(a) + " B=" + fmt(b) + " H(A,B) = 0 with A != B";
        return std::string{};
    });
    run_law(rep, lid++, "metric_symmetry", cases, [](SplitMix64& rng) {
        const Interval a = dyadic::draw(rng), b = dyadic::draw(rng);
        const std::string e = expect_eq(hausdorff(a, b), hausdorff(b, a), "H(A,B) = H(B,A)");
        return e.empty() ? e : "A=" + fmt(a) + " B=" + fmt(b) + " " + e;
    });
    run_law(rep, lid++, "metric_triangle", cases, [](SplitMix64& rng) {
        const Interval a = dyadic::draw(rng), b = dyadic::draw(rng), c = dyadic::draw(rng);
        const std::string e = expect_le(hausdorff(a, c), hausdorff(a, b) + hausdorff(b, c),
                                        "H(A,C) <= H(A,B)+H(B,C)");
        return e.empty() ? e : "A=" + fmt(a) + " B=" + fmt(b) + " C=" + fmt(c) + " " + e;
    });
    return rep;
}

namespace detail {

// Samples a point of the entry's domain that keeps a margin from the domain
// ends (so both schedule sides fit) and from the entry's avoid list (kinks
// and classification switches).
inline double sample_point(const CorpusEntry& entry, const IntervalFn& fn, SplitMix64& rng) {
    const double margin = 0.05;
    const double lo = fn.dom_lo + margin;
    const double hi = fn.dom_hi - margin;
    for (int tries = 0; tries < 128; ++tries) {
        const double t = lo + (hi - lo) * rng.uniform();
        bool ok = true;
        for (double av : entry.avoid)
            if (std::abs(t - av) < margin)
                ok = false;
        if (ok)
            return t;
    }
    return 0.5 * (lo + hi);
}

inline const CorpusEntry& pick_entry(SplitMix64& rng, bool analytic_only) {
    const auto& all = corpus_entries();
    std::vector<const CorpusEntry*> pool;
    for (const auto& e : all)
        if (!analytic_only || e.analytic)
            pool.push_back(&e);
    return *pool[static_cast<std::size_t>(rng.range(0, static_cast<int>(pool.size()) - 1))];
}

inline double adaptive_simpson(const RealFn& f, double a, double b, double fa, double fm,
                               double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double simpson_oracle(const RealFn& f, double a, double b, double tol = 1e-10) {
    if (a == b)
        return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 40);
}

inline std::pair<double, double> sample_range(double lo, double hi, SplitMix64& rng) {
    const double w = hi - lo;
    const double a = lo + 0.4 * w * rng.uniform();
    const double b = hi - 0.4 * w * rng.uniform();
    return {a, b};
}

} // namespace detail

/// Differentiability invariants sampled over the corpus: endpoint-formula
/// consistency, continuity at differentiable points, uniqueness under
/// perturbation, the symmetric-limit implications, and agreement of the two
/// gH-derivative routes.
inline SuiteReport run_derivative_suite(long cases, std::uint64_t seed) {
    using namespace detail;
    SuiteReport rep;
    rep.suite = "derivative";
    rep.cases = cases;
    rep.seed = seed;
    const ClassifyConfig cfg{};
    std::uint64_t lid = 100;

    run_law(rep, lid++, "endpoint_formula_consistency", cases, [&cfg](SplitMix64& rng) {
        const CorpusEntry& entry = pick_entry(rng, true);
        const IntervalFn fn = entry.build();
        const double t = sample_point(entry, fn, rng);
        const DerivativeReport r = classify_point(fn, t, cfg);
        if (!r.derivative)
            return entry.name + " t=" + fmt(t) + ": no derivative";
        if (!r.gh_value)
            return entry.name + " t=" + fmt(t) + ": endpoint formula unavailable";
        if (r.consistency > 1e-4)
            return entry.name + " t=" + fmt(t) + ": consistency " + fmt(r.consistency);
        return std::string{};
    });
    run_law(rep, lid++, "differentiable_implies_continuous", cases, [&cfg](SplitMix64& rng) {
        const CorpusEntry& entry = pick_entry(rng, false);
        const IntervalFn fn = entry.build();
        const double t = sample_point(entry, fn, rng);
        const DerivativeReport r = classify_point(fn, t, cfg);
        if (!r.left && !r.right)
            return entry.name + " t=" + fmt(t) + ": no one-sided derivative classified";
        const LimitEstimate probe = continuity_probe(fn, t, cfg.schedule, cfg.atol);
        if (!probe.converged())
            return entry.name + " t=" + fmt(t) + ": continuity probe verdict " +
                   std::string(to_string(probe.verdict));
        return std::string{};
    });
    run_law(rep, lid++, "derivative_unique_under_perturbation", cases, [&cfg](SplitMix64& rng) {
        const CorpusEntry& entry = pick_entry(rng, true);
        const IntervalFn fn = entry.build();
        const double t = sample_point(entry, fn, rng);
        const DerivativeReport r = classify_point(fn, t, cfg);
        if (!r.derivative)
            return entry.name + " t=" + fmt(t) + ": no derivative";
        const Interval shifted = add(*r.derivative, Interval::singleton(1e-2));
        for (LimitVariant v : {LimitVariant::R1, LimitVariant::R2, LimitVariant::L1, LimitVariant::L2}) {
            if (!r.variant(v).converged())
                continue;
            const LimitEstimate est = limit_estimate(fn, t, shifted, v, cfg.schedule, cfg.atol);
            if (est.verdict != Verdict::diverges)
                return entry.name + " t=" + fmt(t) + ": perturbed " +
                       std::string(to_string(v)) + " verdict " +
                       std::string(to_string(est.verdict));
        }
        return std::string{};
    });
    run_law(rep, lid++, "combo_implies_symmetric_limit", cases, [&cfg](SplitMix64& rng) {
        const CorpusEntry& entry = pick_entry(rng, true);
        const IntervalFn fn = entry.build();
        const double t = sample_point(entry, fn, rng);
        const DerivativeReport r = classify_point(fn, t, cfg);
        if (!r.derivative)
            return entry.name + " t=" + fmt(t) + ": no derivative";
        const SymmetricResiduals s = symmetric_residuals(fn, t, *r.derivative, cfg);
        if (r.combo(1) && !s.s1.converged())
            return entry.name + " t=" + fmt(t) + ": D1 holds but s1 " +
                   std::string(to_string(s.s1.verdict));
        if (r.combo(2) && !s.s2.converged())
            return entry.name + " t=" + fmt(t) + ": D2 holds but s2 " +
                   std::string(to_string(s.s2.verdict));
        if ((r.combo(3) || r.combo(4)) && !s.s3.converged())
            return entry.name + " t=" + fmt(t) + ": D3/D4 holds but s3 " +
                   std::string(to_string(s.s3.verdict));
        return std::string{};
    });
    run_law(rep, lid++, "multiple_combos_force_singleton", cases, [&cfg](SplitMix64& rng) {
        const CorpusEntry& entry = pick_entry(rng, false);
        const IntervalFn fn = entry.build();
        const double t = sample_point(entry, fn, rng);
        const DerivativeReport r = classify_point(fn, t, cfg);
        const int n = r.combos[0] + r.combos[1] + r.combos[2] + r.combos[3];
        if (n >= 2 && r.derivative && r.derivative->width() > cfg.singleton_tol)
            return entry.name + " t=" + fmt(t) + ": " + fmt(r.derivative->width()) +
                   " wide with " + std::to_string(n) + " combos";
        if ((r.combos[2] || r.combos[3]) && !r.combos[0] && !r.combos[1] && r.derivative &&
            r.derivative->width() > cfg.singleton_tol)
            return entry.name + " t=" + fmt(t) + ": D3/D4 alone with non-singleton derivative";
        return std::string{};
    });
    run_law(rep, lid++, "gh_formula_matches_quotient", cases, [&cfg](SplitMix64& rng) {
        const CorpusEntry& entry = pick_entry(rng, true);
        const IntervalFn fn = entry.build();
        const double t = sample_point(entry, fn, rng);
        const GhDerivative d = gh_derivative(fn, t, cfg);
        if (d.formula && d.quotient && hausdorff(*d.formula, *d.quotient) > 1e-6)
            return entry.name + " t=" + fmt(t) + ": formula " + fmt(*d.formula) +
                   " vs quotient " + fmt(*d.quotient);
        return std::string{};
    });
    return rep;
}

/// Integral properties over randomized corpus configurations: endpoint
/// decomposition against an independent Simpson oracle, linearity, range
/// additivity, the distance inequality, and mean-value hull membership.
inline SuiteReport run_integral_suite(long cases, std::uint64_t seed) {
    using namespace detail;
    SuiteReport rep;
    rep.suite = "integral";
    rep.cases = cases;
    rep.seed = seed;
    const QuadConfig quad{};
    std::uint64_t lid = 200;

    run_law(rep, lid++, "endpoint_decomposition_vs_oracle", cases, [&quad](SplitMix64& rng) {
        const CorpusEntry& entry = pick_entry(rng, false);
        const IntervalFn fn = entry.build();
        auto [a, b] = sample_range(fn.dom_lo, fn.dom_hi, rng);
        const Interval got = integrate(fn, a, b, quad).value;
        const Interval want(simpson_oracle(fn.lo, a, b), simpson_oracle(fn.hi, a, b));
        if (hausdorff(got, want) > 1e-6)
            return entry.name + " [" + fmt(a) + "," + fmt(b) + "]: got " + fmt(got) + ", oracle " +
                   fmt(want);
        return std::string{};
    });
    run_law(rep, lid++, "linearity", cases, [&quad](SplitMix64& rng) {
        const CorpusEntry& ef = pick_entry(rng, false);
        const CorpusEntry& eg = pick_entry(rng, false);
        const IntervalFn f = ef.build();
        const IntervalFn g = eg.build();
        const double alpha = dyadic::scalar(rng, -128, 128);
        const double beta = dyadic::scalar(rng, -128, 128);
        const IntervalFn combo = fn_add(fn_scale(alpha, f), fn_scale(beta, g));
        auto [a, b] = sample_range(combo.dom_lo, combo.dom_hi, rng);
        const Interval lhs = integrate(combo, a, b, quad).value;
        const Interval rhs = add(scale(alpha, integrate(f, a, b, quad).value),
                                 scale(beta, integrate(g, a, b, quad).value));
        if (hausdorff(lhs, rhs) > 1e-6)
            return ef.name + "/" + eg.name + " alpha=" + fmt(alpha) + " beta=" + fmt(beta) +
                   ": H=" + fmt(hausdorff(lhs, rhs));
        return std::string{};
    });
    run_law(rep, lid++, "range_additivity", cases, [&quad](SplitMix64& rng) {
        const CorpusEntry& entry = pick_entry(rng, false);
        const IntervalFn fn = entry.build();
        auto [a, b] = sample_range(fn.dom_lo, fn.dom_hi, rng);
        const double c = a + (b - a) * (0.1 + 0.8 * rng.uniform());
        const Interval whole = integrate(fn, a, b, quad).value;
        const Interval split = add(integrate(fn, a, c, quad).value,
                                   integrate(fn, c, b, quad).value);
        if (hausdorff(whole, split) > 1e-6)
            return entry.name + " c=" + fmt(c) + ": H=" + fmt(hausdorff(whole, split));
        return std::string{};
    });
    run_law(rep, lid++, "distance_inequality", cases, [&quad](SplitMix64& rng) {
        const CorpusEntry& ef = pick_entry(rng, false);
        const CorpusEntry& eg = pick_entry(rng, false);
        const IntervalFn f = ef.build();
        const IntervalFn g = eg.build();
        const double lo = std::max(f.dom_lo, g.dom_lo), hi = std::min(f.dom_hi, g.dom_hi);
        auto [a, b] = sample_range(lo, hi, rng);
        const double lhs = hausdorff(integrate(f, a, b, quad).value,
                                     integrate(g, a, b, quad).value);
        const double rhs =
            scalar_integrate([&](double t) { return hausdorff(f(t), g(t)); }, a, b, quad).value;
        if (lhs > rhs + 1e-6)
            return ef.name + "/" + eg.name + ": " + fmt(lhs) + " > " + fmt(rhs);
        return std::string{};
    });
    run_law(rep, lid++, "mean_in_hull", cases, [&quad](SplitMix64& rng) {
        const CorpusEntry& entry = pick_entry(rng, false);
        const IntervalFn fn = entry.build();
        auto [a, b] = sample_range(fn.dom_lo, fn.dom_hi, rng);
        const HullMembership m = hull_membership(fn, a, b, quad);
        if (!m.inside)
            return entry.name + " [" + fmt(a) + "," + fmt(b) + "]: mean " + fmt(m.mean) +
                   " outside hull (margin " + fmt(m.margin) + ")";
        return std::string{};
    });
    return rep;
}

inline SuiteReport run_suite(const std::string& suite, long cases, std::uint64_t seed) {
    if (suite == "laws")
        return run_laws_suite(cases, seed);
    if (suite == "derivative")
        return run_derivative_suite(cases, seed);
    if (suite == "integral")
        return run_integral_suite(cases, seed);
    throw std::invalid_argument("unknown suite: " + suite);
}

} // namespace ivcalc
