#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace ivcalc {

/**
 * A nonempty compact interval [lo, hi] of the real line.
 *
 * Both endpoints are finite and lo <= hi; the degenerate case lo == hi
 * represents a singleton. Values are immutable once constructed, so they
 * can be shared freely across threads.
 */
class Interval {
public:
    Interval() : lo_(0.0), hi_(0.0) {}

    Interval(double lo, double hi) : lo_(lo), hi_(hi) {
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw std::invalid_argument("interval: non-finite endpoint");
        if (lo > hi)
            throw std::invalid_argument("interval: inverted endpoints");
    }

    static Interval singleton(double v) { return Interval(v, v); }

    /// The degenerate interval {0}.
    static Interval zero() { return Interval(); }

    double lo() const { return lo_; }
    double hi() const { return hi_; }

    double width() const { return hi_ - lo_; }
    double norm() const { return std::max(std::abs(lo_), std::abs(hi_)); }
    double mid() const { return 0.5 * (lo_ + hi_); }

    bool is_singleton() const { return lo_ == hi_; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }
    friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }

private:
    double lo_;
    double hi_;
};

inline double width(const Interval& a) { return a.width(); }
inline double norm(const Interval& a) { return a.norm(); }

namespace detail {
inline double checked(double v) {
    if (!std::isfinite(v))
        throw std::overflow_error("interval: range overflow");
    return v;
}
} // namespace detail

/// Minkowski (endpoint-wise) addition.
inline Interval add(const Interval& a, const Interval& b) {
    return Interval(detail::checked(a.lo() + b.lo()), detail::checked(a.hi() + b.hi()));
}

/// Scalar multiplication; the endpoints swap for negative factors and
/// lambda == 0 collapses to {0} exactly.
inline Interval scale(double lambda, const Interval& a) {
    if (!std::isfinite(lambda))
        throw std::invalid_argument("interval: non-finite scalar");
    if (lambda == 0.0)
        return Interval::zero();
    if (lambda > 0.0)
        return Interval(detail::checked(lambda * a.lo()), detail::checked(lambda * a.hi()));
    return Interval(detail::checked(lambda * a.hi()), detail::checked(lambda * a.lo()));
}

/// The opposite (-1) * A = [-hi, -lo]; not an additive inverse unless A is
/// a singleton.
inline Interval opposite(const Interval& a) { return scale(-1.0, a); }

/// Result of the generalized Hukuhara difference. `hukuhara` records
/// whether w(A) >= w(B), i.e. whether A = B + value holds (the difference
/// is a Hukuhara difference proper); otherwise B = A + (-1) * value.
struct GhDifference {
    Interval value;
    bool hukuhara;
};

/// Generalized Hukuhara difference
/// [min{a.lo-b.lo, a.hi-b.hi}, max{a.lo-b.lo, a.hi-b.hi}]; total on
/// intervals.
inline GhDifference gh_sub(const Interval& a, const Interval& b) {
    const double dl = detail::checked(a.lo() - b.lo());
    const double dh = detail::checked(a.hi() - b.hi());
    return GhDifference{Interval(std::min(dl, dh), std::max(dl, dh)),
                        a.width() >= b.width()};
}

/// Hausdorff-Pompeiu distance max{|a.lo-b.lo|, |a.hi-b.hi|}; coincides with
/// norm(gh_sub(a, b)).
inline double hausdorff(const Interval& a, const Interval& b) {
    return std::max(std::abs(a.lo() - b.lo()), std::abs(a.hi() - b.hi()));
}

inline bool approx_equal(const Interval& a, const Interval& b, double tol) {
    return hausdorff(a, b) <= tol;
}

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator*(double lambda, const Interval& a) { return scale(lambda, a); }
inline Interval operator-(const Interval& a) { return opposite(a); }

/// Minkowski difference A + (-1) * B (distinct from the gH-difference).
inline Interval operator-(const Interval& a, const Interval& b) { return add(a, opposite(b)); }

inline std::ostream& operator<<(std::ostream& os, const Interval& a) {
    return os << "[" << a.lo() << ", " << a.hi() << "]";
}

} // namespace ivcalc
