// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion pins its tolerances in code; timed criteria fail when they
// run over budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ivcalc/corpus.hpp"
#include "ivcalc/derivative.hpp"
#include "ivcalc/integral.hpp"
#include "ivcalc/serialize.hpp"
#include "ivcalc/verify.hpp"

using namespace ivcalc;

namespace {

int g_failures = 0;

void report(int id, const std::string& label, bool pass, const std::string& detail = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", id, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass)
        ++g_failures;
}

template <typename Body>
void criterion(int id, const std::string& label, Body&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(id, label, false, std::string("exception: ") + e.what());
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_interval(const Interval& a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "[%.10g, %.10g]", a.lo(), a.hi());
    return buf;
}

} // namespace

int main() {
    criterion(1, "kinked width function: one-sided derivatives at the kink", [] {
        const auto start = std::chrono::steady_clock::now();
        const DerivativeReport rep = classify_point(corpus_build("abs_width"), 0.0);
        const double elapsed = seconds_since(start);
        bool ok = rep.left && rep.right && !rep.derivative;
        ok = ok && hausdorff(*rep.left, Interval(-1, 0)) <= 1e-6;
        ok = ok && hausdorff(*rep.right, Interval(0, 1)) <= 1e-6;
        ok = ok && rep.variant(LimitVariant::L2).converged();
        ok = ok && rep.variant(LimitVariant::R1).converged();
        ok = ok && rep.classification == Classification::none;
        ok = ok && elapsed < 1.0;
        char detail[128];
        std::snprintf(detail, sizeof detail, "left %s right %s class %s in %.3fs",
                      rep.left ? fmt_interval(*rep.left).c_str() : "-",
                      rep.right ? fmt_interval(*rep.right).c_str() : "-",
                      to_string(rep.classification), elapsed);
        report(1, "kinked width function: one-sided derivatives at the kink", ok, detail);
    });

    criterion(2, "symmetric square: derivative grid and the singleton point", [] {
        const auto start = std::chrono::steady_clock::now();
        const IntervalFn fn = corpus_build("sym_square");
        bool ok = true;
        std::string detail;
        for (double t : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            const DerivativeReport rep = classify_point(fn, t);
            const Interval want(-2.0 * std::abs(t), 2.0 * std::abs(t));
            if (!rep.derivative || hausdorff(*rep.derivative, want) > 1e-4) {
                ok = false;
                detail += "t=" + std::to_string(t) + " off; ";
                continue;
            }
            if (t == 0.0) {
                const int combos = rep.combo(1) + rep.combo(2) + rep.combo(3) + rep.combo(4);
                if (combos < 2 || rep.derivative->width() > 1e-6) {
                    ok = false;
                    detail += "singleton check failed; ";
                }
            }
        }
        const double elapsed = seconds_since(start);
        ok = ok && elapsed < 1.0;
        char tail[48];
        std::snprintf(tail, sizeof tail, "in %.3fs", elapsed);
        report(2, "symmetric square: derivative grid and the singleton point", ok, detail + tail);
    });

    criterion(3, "exponential pair: H2 everywhere, first right condition fails", [] {
        const IntervalFn fn = corpus_build("exp_pair");
        bool ok = true;
        std::string detail;
        for (double t : {0.0, 0.5, 1.0}) {
            const DerivativeReport rep = classify_point(fn, t);
            const Interval want(-2.0 * std::exp(-t), -std::exp(-t));
            const bool point_ok = rep.classification == Classification::h2 && rep.derivative &&
                                  hausdorff(*rep.derivative, want) <= 1e-4 &&
                                  rep.variant(LimitVariant::R1).verdict == Verdict::diverges;
            if (!point_ok) {
                ok = false;
                detail += "t=" + std::to_string(t) + " failed; ";
            }
        }
        report(3, "exponential pair: H2 everywhere, first right condition fails", ok, detail);
    });

    criterion(4, "sine amplitude: derivative equals the cosine multiple", [] {
        const IntervalFn fn = corpus_build("sin_amplitude");
        bool ok = true;
        std::string audit;
        for (double t : {0.5, 1.0, 2.0, 4.0}) {
            const DerivativeReport rep = classify_point(fn, t);
            const Interval want = scale(std::cos(t), Interval(-1.0, 1.0));
            if (!rep.derivative || hausdorff(*rep.derivative, want) > 1e-4)
                ok = false;
            char line[160];
            std::snprintf(line, sizeof line, "t=%.1f combos D1=%d D2=%d D3=%d D4=%d consistency=%.2e; ",
                          t, rep.combo(1), rep.combo(2), rep.combo(3), rep.combo(4),
                          rep.consistency);
            audit += line;
        }
        report(4, "sine amplitude: derivative equals the cosine multiple", ok, audit);
    });

    criterion(5, "algebraic law suite, 10000 exact dyadic cases per law", [] {
        const auto start = std::chrono::steady_clock::now();
        const SuiteReport rep = run_laws_suite(10000, 7ULL);
        const double elapsed = seconds_since(start);
        bool ok = rep.all_pass && rep.laws.size() == 22;
        std::string detail;
        for (const auto& law : rep.laws)
            if (law.failed != 0)
                detail += law.name + ": " + law.counterexample + "; ";
        ok = ok && elapsed < 10.0;
        char tail[64];
        std::snprintf(tail, sizeof tail, "%zu laws in %.2fs", rep.laws.size(), elapsed);
        report(5, "algebraic law suite, 10000 exact dyadic cases per law", ok, detail + tail);
    });

    criterion(6, "endpoint-derivative formula matches the metric derivative", [] {
        bool ok = true;
        std::string detail;
        for (const auto& entry : corpus_entries()) {
            if (!entry.analytic)
                continue;
            const IntervalFn fn = entry.build();
            for (int i = 1; i <= 20; ++i) {
                const double t = fn.dom_lo + (fn.dom_hi - fn.dom_lo) * i / 21.0;
                const DerivativeReport rep = classify_point(fn, t);
                const Interval formula(std::min(fn.d_lo(t), fn.d_hi(t)),
                                       std::max(fn.d_lo(t), fn.d_hi(t)));
                if (!rep.derivative || hausdorff(*rep.derivative, formula) > 1e-4) {
                    ok = false;
                    detail += entry.name + " t=" + std::to_string(t) + "; ";
                }
            }
        }
        report(6, "endpoint-derivative formula matches the metric derivative", ok, detail);
    });

    criterion(7, "derivative calculus rules at t=1", [] {
        const IntervalFn f = corpus_build("sym_square");
        const IntervalFn g = corpus_build("exp_pair");
        bool ok = true;
        std::string detail;
        for (double lambda : {-2.0, 0.5, 3.0}) {
            const CalculusReport rep = calculus_check(f, f, 1.0, lambda);
            const IdentityCheck& sc = rep.identities[0];
            if (!sc.checked || sc.residual > 1e-6) {
                ok = false;
                detail += "scale lambda=" + std::to_string(lambda) + "; ";
            }
        }
        const CalculusReport same = calculus_check(f, f, 1.0, 3.0);
        for (std::size_t k = 1; k < same.identities.size(); ++k)
            if (!same.identities[k].checked || same.identities[k].residual > 1e-4) {
                ok = false;
                detail += "matched-class " + same.identities[k].name + "; ";
            }
        const CalculusReport mixed = calculus_check(f, g, 1.0, 3.0);
        for (std::size_t k = 1; k < mixed.identities.size(); ++k)
            if (!mixed.identities[k].checked || mixed.identities[k].residual > 1e-4) {
                ok = false;
                detail += "mixed-class " + mixed.identities[k].name + "; ";
            }
        report(7, "derivative calculus rules at t=1", ok, detail);
    });

    criterion(8, "symmetric limit traces converge at verified points", [] {
        const ClassifyConfig cfg{};
        bool ok = true;
        std::string detail;
        const SymmetricResiduals s1 =
            symmetric_residuals(corpus_build("sym_square"), 1.0, Interval(-2, 2), cfg);
        if (!s1.s1.converged() || s1.s1.floor > 1e-4) {
            ok = false;
            detail += "s1; ";
        }
        const SymmetricResiduals s2 =
            symmetric_residuals(corpus_build("exp_pair"), 0.0, Interval(-2, -1), cfg);
        if (!s2.s2.converged() || s2.s2.floor > 1e-4) {
            ok = false;
            detail += "s2; ";
        }
        const SymmetricResiduals s3 =
            symmetric_residuals(corpus_build("sym_square"), 0.0, Interval::zero(), cfg);
        if (!s3.s3.converged() || s3.s3.floor > 1e-4) {
            ok = false;
            detail += "s3; ";
        }
        report(8, "symmetric limit traces converge at verified points", ok, detail);
    });

    criterion(9, "integral values and properties over randomized configurations", [] {
        const auto start = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;

        const IntervalFn ramp = corpus_build("linear_cone", {{"c_lo", 0.0}, {"c_hi", 1.0}});
        if (hausdorff(integrate(ramp, 0.0, 1.0).value, Interval(0.0, 0.5)) > 1e-7) {
            ok = false;
            detail += "ramp integral; ";
        }
        const double e1 = std::exp(-1.0);
        if (hausdorff(integrate(corpus_build("exp_pair"), 0.0, 1.0).value,
                      Interval(1.0 - e1, 2.0 * (1.0 - e1))) > 1e-7) {
            ok = false;
            detail += "exp integral; ";
        }
        const SuiteReport rep = run_integral_suite(100, 7ULL);
        if (!rep.all_pass) {
            ok = false;
            for (const auto& law : rep.laws)
                if (law.failed != 0)
                    detail += law.name + ": " + law.counterexample + "; ";
        }
        const double elapsed = seconds_since(start);
        ok = ok && elapsed < 10.0;
        char tail[48];
        std::snprintf(tail, sizeof tail, "in %.2fs", elapsed);
        report(9, "integral values and properties over randomized configurations", ok,
               detail + tail);
    });

    criterion(10, "fundamental theorem in both directions", [] {
        bool ok = true;
        std::string detail;

        QuadConfig quad;
        quad.tol = 1e-9;
        ClassifyConfig cls;
        cls.schedule = HSchedule{5e-3, 0.7, 16};
        const IntervalFn f = corpus_build("sym_square");
        const IntervalFn g = primitive(f, 0.0, quad);
        for (int i = 1; i <= 20; ++i) {
            const double t = i / 21.0;
            const DerivativeReport rep = classify_point(g, t, cls);
            if (rep.classification != Classification::h1 || !rep.derivative ||
                hausdorff(*rep.derivative, eval(f, t)) > 1e-3) {
                ok = false;
                detail += "primitive at t=" + std::to_string(t) + "; ";
            }
        }
        if (hausdorff(reconstruct_h1(f, 0.0, 1.0), eval(f, 1.0)) > 1e-5) {
            ok = false;
            detail += "h1 reconstruction; ";
        }
        const IntervalFn ep = corpus_build("exp_pair");
        if (hausdorff(reconstruct_h2(ep, 0.0, 1.0), eval(ep, 1.0)) > 1e-5) {
            ok = false;
            detail += "h2 reconstruction; ";
        }
        report(10, "fundamental theorem in both directions", ok, detail);
    });

    criterion(11, "seeded verification reports are byte-identical", [] {
        auto render = [] {
            Json j;
            j["schema"] = kSchemaTag;
            j["command"] = "verify";
            j["report"] = to_json(run_laws_suite(10000, 7ULL));
            return j.dump(2);
        };
        const std::string a = render();
        const std::string b = render();
        report(11, "seeded verification reports are byte-identical", a == b,
               a == b ? "" : "reports differ");
    });

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
