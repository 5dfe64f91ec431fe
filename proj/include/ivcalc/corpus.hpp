#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ivcalc/derivative.hpp"
#include "ivcalc/interval_fn.hpp"

namespace ivcalc {

using Params = std::map<std::string, double>;

/// Expected classifier output at one point of a corpus function.
struct ExpectedPoint {
    double t = 0.0;
    Classification classification = Classification::none;
    std::optional<Interval> derivative;
    std::optional<Interval> left;
    std::optional<Interval> right;
};

/// A named interval-valued function with ground-truth analytics: a builder
/// (parametric where it makes sense), the expected classification table, and
/// the points to keep clear of when sampling (kinks and class switches).
struct CorpusEntry {
    std::string name;
    std::string description;
    Params defaults;
    std::function<IntervalFn(const Params&)> builder;
    std::vector<ExpectedPoint> expected;
    std::vector<double> avoid;
    bool analytic = true;

    IntervalFn build(const Params& overrides = {}) const {
        Params p = defaults;
        for (const auto& [key, value] : overrides) {
            if (defaults.find(key) == defaults.end())
                throw std::invalid_argument("unknown parameter '" + key + "' for corpus entry '" +
                                            name + "'");
            p[key] = value;
        }
        return builder(p);
    }
};

namespace detail {

inline std::vector<CorpusEntry> make_corpus() {
    std::vector<CorpusEntry> entries;

    {
        CorpusEntry e;
        e.name = "abs_width";
        e.description = "[0, |t|]: kinked width; one-sided derivatives [-1,0] and [0,1] at 0 "
                        "disagree, so no derivative exists there";
        e.analytic = false;
        e.avoid = {0.0};
        e.builder = [](const Params&) {
            IntervalFn f;
            f.lo = [](double) { return 0.0; };
            f.hi = [](double t) { return std::abs(t); };
            f.dom_lo = -2.0;
            f.dom_hi = 2.0;
            f.name = "abs_width";
            return f;
        };
        e.expected = {
            ExpectedPoint{0.0, Classification::none, std::nullopt, Interval(-1.0, 0.0),
                          Interval(0.0, 1.0)},
            ExpectedPoint{1.0, Classification::h1, Interval(0.0, 1.0), Interval(0.0, 1.0),
                          Interval(0.0, 1.0)},
            ExpectedPoint{-1.0, Classification::h2, Interval(-1.0, 0.0), Interval(-1.0, 0.0),
                          Interval(-1.0, 0.0)},
        };
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "sym_square";
        e.description = "[-t^2, t^2]: H1 for t > 0, H2 for t < 0, singleton derivative {0} at 0";
        e.avoid = {0.0};
        e.builder = [](const Params&) {
            IntervalFn f;
            f.lo = [](double t) { return -t * t; };
            f.hi = [](double t) { return t * t; };
            f.d_lo = [](double t) { return -2.0 * t; };
            f.d_hi = [](double t) { return 2.0 * t; };
            f.dom_lo = -2.0;
            f.dom_hi = 2.0;
            f.name = "sym_square";
            return f;
        };
        auto d = [](double t) {
            return Interval(-2.0 * std::abs(t), 2.0 * std::abs(t));
        };
        e.expected = {
            ExpectedPoint{1.0, Classification::h1, d(1.0), d(1.0), d(1.0)},
            ExpectedPoint{0.5, Classification::h1, d(0.5), d(0.5), d(0.5)},
            ExpectedPoint{0.0, Classification::singleton_multi, Interval::zero(), Interval::zero(),
                          Interval::zero()},
            ExpectedPoint{-0.5, Classification::h2, d(-0.5), d(-0.5), d(-0.5)},
            ExpectedPoint{-1.0, Classification::h2, d(-1.0), d(-1.0), d(-1.0)},
        };
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "exp_pair";
        e.description = "[e^-t, 2e^-t]: shrinking width, H2 everywhere with derivative "
                        "[-2e^-t, -e^-t]; the one-condition (R1-only) notion of derivative "
                        "fails on it";
        e.builder = [](const Params&) {
            IntervalFn f;
            f.lo = [](double t) { return std::exp(-t); };
            f.hi = [](double t) { return 2.0 * std::exp(-t); };
            f.d_lo = [](double t) { return -std::exp(-t); };
            f.d_hi = [](double t) { return -2.0 * std::exp(-t); };
            f.dom_lo = -1.0;
            f.dom_hi = 2.0;
            f.name = "exp_pair";
            return f;
        };
        auto d = [](double t) { return Interval(-2.0 * std::exp(-t), -std::exp(-t)); };
        e.expected = {
            ExpectedPoint{0.0, Classification::h2, d(0.0), d(0.0), d(0.0)},
            ExpectedPoint{0.5, Classification::h2, d(0.5), d(0.5), d(0.5)},
            ExpectedPoint{1.0, Classification::h2, d(1.0), d(1.0), d(1.0)},
        };
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "sin_amplitude";
        e.description = "(2 + sin t) * [-1, 1]: derivative (cos t) * [-1, 1] everywhere; the "
                        "measured combo is D1 where cos t > 0 and D2 where cos t < 0, tracking "
                        "the width monotonicity";
        e.avoid = {std::acos(-1.0) / 2.0, 3.0 * std::acos(-1.0) / 2.0};
        e.builder = [](const Params&) {
            IntervalFn f;
            f.lo = [](double t) { return -(2.0 + std::sin(t)); };
            f.hi = [](double t) { return 2.0 + std::sin(t); };
            f.d_lo = [](double t) { return -std::cos(t); };
            f.d_hi = [](double t) { return std::cos(t); };
            f.dom_lo = 0.0;
            f.dom_hi = 2.0 * std::acos(-1.0);
            f.name = "sin_amplitude";
            return f;
        };
        auto d = [](double t) {
            const double c = std::abs(std::cos(t));
            return Interval(-c, c);
        };
        e.expected = {
            ExpectedPoint{0.5, Classification::h1, d(0.5), d(0.5), d(0.5)},
            ExpectedPoint{1.0, Classification::h1, d(1.0), d(1.0), d(1.0)},
            ExpectedPoint{2.0, Classification::h2, d(2.0), d(2.0), d(2.0)},
            ExpectedPoint{4.0, Classification::h2, d(4.0), d(4.0), d(4.0)},
        };
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "constant";
        e.description = "constant [lo, hi]: derivative {0} with every condition pair holding";
        e.defaults = {{"lo", -1.0}, {"hi", 1.0}};
        e.builder = [](const Params& p) {
            const double lo = p.at("lo");
            const double hi = p.at("hi");
            if (lo > hi)
                throw std::invalid_argument("constant: lo > hi");
            IntervalFn f;
            f.lo = [lo](double) { return lo; };
            f.hi = [hi](double) { return hi; };
            f.d_lo = [](double) { return 0.0; };
            f.d_hi = [](double) { return 0.0; };
            f.dom_lo = -2.0;
            f.dom_hi = 2.0;
            f.name = "constant";
            return f;
        };
        e.expected = {
            ExpectedPoint{0.0, Classification::singleton_multi, Interval::zero(), Interval::zero(),
                          Interval::zero()},
        };
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "linear_cone";
        e.description = "t * C for a parameter interval C on t >= 0: growing width, H1 with "
                        "derivative C at interior points";
        e.defaults = {{"c_lo", 1.0}, {"c_hi", 2.0}};
        e.builder = [](const Params& p) {
            const double clo = p.at("c_lo");
            const double chi = p.at("c_hi");
            if (clo > chi)
                throw std::invalid_argument("linear_cone: c_lo > c_hi");
            IntervalFn f;
            f.lo = [clo](double t) { return t * clo; };
            f.hi = [chi](double t) { return t * chi; };
            f.d_lo = [clo](double) { return clo; };
            f.d_hi = [chi](double) { return chi; };
            f.dom_lo = 0.0;
            f.dom_hi = 2.0;
            f.name = "linear_cone";
            return f;
        };
        e.expected = {
            ExpectedPoint{1.0, Classification::h1, Interval(1.0, 2.0), Interval(1.0, 2.0),
                          Interval(1.0, 2.0)},
        };
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "shrinking";
        e.description = "[0, 1 - t] on [0, 1]: width decreasing to zero, H2 with derivative "
                        "[-1, 0]";
        e.builder = [](const Params&) {
            IntervalFn f;
            f.lo = [](double) { return 0.0; };
            f.hi = [](double t) { return 1.0 - t; };
            f.d_lo = [](double) { return 0.0; };
            f.d_hi = [](double) { return -1.0; };
            f.dom_lo = 0.0;
            f.dom_hi = 1.0;
            f.name = "shrinking";
            return f;
        };
        e.expected = {
            ExpectedPoint{0.5, Classification::h2, Interval(-1.0, 0.0), Interval(-1.0, 0.0),
                          Interval(-1.0, 0.0)},
        };
        entries.push_back(std::move(e));
    }
    return entries;
}

} // namespace detail

inline const std::vector<CorpusEntry>& corpus_entries() {
    static const std::vector<CorpusEntry> entries = detail::make_corpus();
    return entries;
}

inline const CorpusEntry& corpus_lookup(const std::string& name) {
    for (const auto& e : corpus_entries())
        if (e.name == name)
            return e;
    throw std::invalid_argument("unknown corpus entry: " + name);
}

inline IntervalFn corpus_build(const std::string& name, const Params& overrides = {}) {
    return corpus_lookup(name).build(overrides);
}

} // namespace ivcalc
