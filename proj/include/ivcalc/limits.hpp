#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ivcalc {

/// Geometric step schedule h_k = h0 * ratio^k, k = 0..count-1, discretizing
/// h -> 0+. Steps are strictly decreasing and the smallest stays >= 1e-9 so
/// difference quotients keep cancellation noise well below the verdict
/// tolerance.
struct HSchedule {
    double h0 = 1e-2;
    double ratio = 0.7;
    int count = 30;

    void validate() const {
        if (!(h0 > 0.0) || !std::isfinite(h0))
            throw std::invalid_argument("schedule: h0 must be positive and finite");
        if (!(ratio > 0.0) || !(ratio < 1.0))
            throw std::invalid_argument("schedule: ratio must lie in (0,1)");
        if (count < 4)
            throw std::invalid_argument("schedule: count must be at least 4");
        if (smallest() < 1e-9)
            throw std::invalid_argument("schedule: smallest step below 1e-9");
    }

    double smallest() const { return h0 * std::pow(ratio, count - 1); }

    std::vector<double> steps() const {
        validate();
        std::vector<double> s(static_cast<std::size_t>(count));
        double h = h0;
        for (int k = 0; k < count; ++k) {
            s[static_cast<std::size_t>(k)] = h;
            h *= ratio;
        }
        return s;
    }
};

enum class Verdict { converges_to_zero, diverges, inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::converges_to_zero: return "converges-to-zero";
        case Verdict::diverges: return "diverges";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

/// Outcome of a numerical limit-to-zero check along a step schedule:
/// the (h, residual) trace, the verdict, and the smallest residual seen.
struct LimitEstimate {
    std::vector<std::pair<double, double>> residuals;
    Verdict verdict = Verdict::inconclusive;
    double floor = std::numeric_limits<double>::infinity();

    bool converged() const { return verdict == Verdict::converges_to_zero; }
};

/// Classifies a residual trace r(h_k), h_k decreasing.
///
/// converges-to-zero: the last three residuals are <= atol and the trace is
/// non-increasing over its final half, tolerating one uptick of at most 2x
/// (values below atol/100 are treated as rounding-floor ties).
/// diverges: the final half sits above atol and does not contract.
inline LimitEstimate judge_trace(std::vector<std::pair<double, double>> trace, double atol) {
    LimitEstimate est;
    est.residuals = std::move(trace);
    const auto& r = est.residuals;
    const std::size_t n = r.size();
    if (n < 3) {
        est.verdict = Verdict::inconclusive;
        for (const auto& p : r) est.floor = std::min(est.floor, p.second);
        return est;
    }
    for (const auto& p : r) est.floor = std::min(est.floor, p.second);

    const std::size_t half = n / 2;
    const double tie = atol / 100.0;

    bool small_tail = r[n - 1].second <= atol && r[n - 2].second <= atol && r[n - 3].second <= atol;

    int upticks = 0;
    bool monotone = true;
    for (std::size_t k = half; k + 1 < n; ++k) {
        const double prev = r[k].second;
        const double next = r[k + 1].second;
        if (next <= prev || next <= tie)
            continue;
        ++upticks;
        if (upticks > 1 || next > 2.0 * prev) {
            monotone = false;
            break;
        }
    }

    if (small_tail && monotone) {
        est.verdict = Verdict::converges_to_zero;
        return est;
    }

    double tail_min = std::numeric_limits<double>::infinity();
    for (std::size_t k = half; k < n; ++k) tail_min = std::min(tail_min, r[k].second);
    if (tail_min > atol && r[n - 1].second >= 0.5 * r[half].second) {
        est.verdict = Verdict::diverges;
        return est;
    }

    est.verdict = Verdict::inconclusive;
    return est;
}

/// Two-level Richardson extrapolation for a sequence sampled on a geometric
/// schedule: v_k = L + c*rho^k + d*rho^(2k) + ... Uses the last three terms.
inline double geometric_extrapolate(const std::vector<double>& v, double rho) {
    const std::size_t n = v.size();
    if (n == 0)
        throw std::invalid_argument("extrapolate: empty sequence");
    if (n == 1)
        return v[0];
    auto level1 = [rho](double prev, double cur) { return (cur - rho * prev) / (1.0 - rho); };
    if (n == 2)
        return level1(v[0], v[1]);
    const double a = level1(v[n - 3], v[n - 2]);
    const double b = level1(v[n - 2], v[n - 1]);
    const double rho2 = rho * rho;
    return (b - rho2 * a) / (1.0 - rho2);
}

} // namespace ivcalc
