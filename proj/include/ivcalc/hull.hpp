#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace ivcalc {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

namespace detail {
inline double cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline double dist_point_segment(const Point2& p, const Point2& a, const Point2& b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0)
        return std::hypot(p.x - a.x, p.y - a.y);
    double u = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    u = std::clamp(u, 0.0, 1.0);
    return std::hypot(p.x - (a.x + u * dx), p.y - (a.y + u * dy));
}
} // namespace detail

/// Monotone-chain convex hull in counterclockwise order. Collinear points
/// are dropped, so a collinear input degenerates to its two extreme points
/// and a single repeated point to one vertex.
inline std::vector<Point2> convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    const std::size_t n = pts.size();
    if (n <= 2)
        return pts;
    std::vector<Point2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) { // lower hull
        while (k >= 2 && detail::cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) { // upper hull
        while (k >= lower && detail::cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

/// Signed margin of p relative to a hull from convex_hull: for a proper
/// polygon, the minimum signed distance to the edge lines (positive strictly
/// inside, negative outside); for a degenerate hull, minus the distance to
/// the segment or point.
inline double hull_margin(const std::vector<Point2>& hull, const Point2& p) {
    if (hull.empty())
        return -std::numeric_limits<double>::infinity();
    if (hull.size() == 1)
        return -std::hypot(p.x - hull[0].x, p.y - hull[0].y);
    if (hull.size() == 2)
        return -detail::dist_point_segment(p, hull[0], hull[1]);
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point2& a = hull[i];
        const Point2& b = hull[(i + 1) % hull.size()];
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        margin = std::min(margin, detail::cross(a, b, p) / len);
    }
    return margin;
}

} // namespace ivcalc
