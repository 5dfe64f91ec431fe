#include <catch2/catch.hpp>

#include <cmath>

#include "ivcalc/interval_fn.hpp"

using namespace ivcalc;

namespace {

IntervalFn abs_width_fn(double a = -2.0, double b = 2.0) {
    IntervalFn f;
    f.lo = [](double) { return 0.0; };
    f.hi = [](double t) { return std::abs(t); };
    f.dom_lo = a;
    f.dom_hi = b;
    f.name = "abs_width";
    return f;
}

IntervalFn sym_square_fn() {
    IntervalFn f;
    f.lo = [](double t) { return -t * t; };
    f.hi = [](double t) { return t * t; };
    f.dom_lo = -2.0;
    f.dom_hi = 2.0;
    f.name = "sym_square";
    return f;
}

IntervalFn exp_pair_fn(double a = 0.0, double b = 1.0) {
    IntervalFn f;
    f.lo = [](double t) { return std::exp(-t); };
    f.hi = [](double t) { return 2.0 * std::exp(-t); };
    f.dom_lo = a;
    f.dom_hi = b;
    f.name = "exp_pair";
    return f;
}

IntervalFn cone_fn(double clo, double chi, double a, double b) {
    IntervalFn f;
    f.lo = [clo, chi](double t) { return t >= 0 ? t * clo : t * chi; };
    f.hi = [clo, chi](double t) { return t >= 0 ? t * chi : t * clo; };
    f.dom_lo = a;
    f.dom_hi = b;
    f.name = "cone";
    return f;
}

IntervalFn constant_fn(double lo, double hi) {
    IntervalFn f;
    f.lo = [lo](double) { return lo; };
    f.hi = [hi](double) { return hi; };
    f.dom_lo = -2.0;
    f.dom_hi = 2.0;
    f.name = "constant";
    return f;
}

} // namespace

TEST_CASE("evaluation and its guard rails") {
    CHECK(eval(abs_width_fn(), -2.0) == Interval(0.0, 2.0));
    CHECK(eval(sym_square_fn(), 0.0) == Interval::zero());
    CHECK(eval(exp_pair_fn(), 0.0) == Interval(1.0, 2.0));

    CHECK_THROWS_WITH(eval(exp_pair_fn(), 1.5), Catch::Contains("outside domain"));

    IntervalFn bad;
    bad.lo = [](double t) { return t; };
    bad.hi = [](double) { return 0.0; };
    bad.dom_lo = -1.0;
    bad.dom_hi = 1.0;
    CHECK_THROWS_WITH(eval(bad, 0.5), Catch::Contains("endpoint inversion"));
}

TEST_CASE("pointwise gH-difference of functions") {
    const IntervalFn f = cone_fn(0.0, 2.0, 0.0, 2.0); // [0, 2t]
    const IntervalFn g = cone_fn(0.0, 1.0, 0.0, 2.0); // [0, t]

    const IntervalFn fg = pointwise_gh_sub(f, g);
    const IntervalFn gf = pointwise_gh_sub(g, f);
    for (double t : {0.25, 0.5, 1.0, 1.75}) {
        CHECK(eval(fg, t) == Interval(0.0, t));
        CHECK(eval(gf, t) == Interval(-t, 0.0));
        // definitional commutation with the interval-level operation
        CHECK(eval(fg, t) == gh_sub(eval(f, t), eval(g, t)).value);
    }

    const IntervalFn self = pointwise_gh_sub(f, f);
    for (double t : {0.1, 0.9, 1.9})
        CHECK(eval(self, t) == Interval::zero());

    CHECK_THROWS_WITH(pointwise_gh_sub(exp_pair_fn(0.0, 1.0), exp_pair_fn(1.5, 2.0)),
                      Catch::Contains("empty domain intersection"));
}

TEST_CASE("fn_add and fn_scale propagate endpoints and domains") {
    const IntervalFn sum = fn_add(sym_square_fn(), constant_fn(-1.0, 1.0));
    CHECK(eval(sum, 1.0) == Interval(-2.0, 2.0));

    const IntervalFn flipped = fn_scale(-2.0, cone_fn(0.0, 1.0, 0.0, 2.0));
    CHECK(eval(flipped, 1.0) == Interval(-2.0, 0.0));
    const IntervalFn zeroed = fn_scale(0.0, sym_square_fn());
    CHECK(eval(zeroed, 1.0) == Interval::zero());
}

TEST_CASE("numerical limits along the schedule") {
    const HSchedule sched{};

    CHECK(approx_equal(limit_at(sym_square_fn(), 0.0, Side::both, sched), Interval::zero(), 1e-6));
    CHECK(approx_equal(limit_at(abs_width_fn(), 0.0, Side::both, sched), Interval::zero(), 1e-6));

    // f_hi(t) = 1/t blows up as t -> 0+
    IntervalFn div;
    div.lo = [](double) { return 0.0; };
    div.hi = [](double t) { return 1.0 / t; };
    div.dom_lo = 0.0;
    div.dom_hi = 1.0;
    CHECK_THROWS_WITH(limit_at(div, 0.0, Side::right, sched), Catch::Contains("no limit"));

    // limit at a continuity point agrees with evaluation
    const IntervalFn f = exp_pair_fn();
    const Interval lim = limit_at(f, 0.5, Side::both, sched);
    CHECK(hausdorff(lim, eval(f, 0.5)) < 1e-6);

    // one-sided limits at the domain ends
    CHECK(hausdorff(limit_at(f, 0.0, Side::right, sched), Interval(1.0, 2.0)) < 1e-6);
    CHECK(hausdorff(limit_at(f, 1.0, Side::left, sched), eval(f, 1.0)) < 1e-6);

    // approach points must stay inside the domain
    CHECK_THROWS_AS(limit_at(f, 0.0, Side::left, sched), std::domain_error);
}

TEST_CASE("continuity probe verdicts") {
    const HSchedule sched{};

    CHECK(continuity_probe(abs_width_fn(), 0.0, sched).converged());

    const LimitEstimate flat = continuity_probe(constant_fn(-1.0, 3.0), 0.5, sched);
    CHECK(flat.converged());
    CHECK(flat.floor == 0.0);

    IntervalFn step;
    step.lo = [](double t) { return t < 0 ? 0.0 : 1.0; };
    step.hi = [](double t) { return t < 0 ? 0.0 : 1.0; };
    step.dom_lo = -1.0;
    step.dom_hi = 1.0;
    const LimitEstimate jump = continuity_probe(step, 0.0, sched);
    CHECK(jump.verdict == Verdict::diverges);
    CHECK(jump.floor == 1.0);
}

TEST_CASE("continuity survives the pointwise gH-difference") {
    const IntervalFn f = sym_square_fn();
    const IntervalFn g = constant_fn(0.0, 0.5);
    const HSchedule sched{};
    for (double t : {-1.0, 0.0, 0.7}) {
        REQUIRE(continuity_probe(f, t, sched).converged());
        REQUIRE(continuity_probe(g, t, sched).converged());
        CHECK(continuity_probe(pointwise_gh_sub(f, g), t, sched).converged());
    }
}

TEST_CASE("grid sup-norm") {
    CHECK(sup_norm(exp_pair_fn(0.0, 1.0), 101) == Approx(2.0));
    CHECK(sup_norm(constant_fn(-1.0, 1.0), 11) == 1.0);
    IntervalFn sq = sym_square_fn();
    sq.dom_lo = 0.0;
    sq.dom_hi = 1.0;
    CHECK(sup_norm(sq, 101) == Approx(1.0));
    CHECK_THROWS_AS(sup_norm(sq, 1), std::invalid_argument);
}

TEST_CASE("schedule validation") {
    CHECK_THROWS_AS((HSchedule{-1.0, 0.7, 30}.steps()), std::invalid_argument);
    CHECK_THROWS_AS((HSchedule{1e-2, 1.2, 30}.steps()), std::invalid_argument);
    CHECK_THROWS_AS((HSchedule{1e-2, 0.7, 2}.steps()), std::invalid_argument);
    CHECK_THROWS_AS((HSchedule{1e-2, 0.1, 30}.steps()), std::invalid_argument); // underflows 1e-9
    const auto steps = HSchedule{}.steps();
    CHECK(steps.size() == 30);
    CHECK(steps.front() == Approx(1e-2));
    for (std::size_t i = 1; i < steps.size(); ++i) CHECK(steps[i] < steps[i - 1]);
}
