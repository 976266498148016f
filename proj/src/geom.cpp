#include "taxispan/geom.hpp"

#include <algorithm>

namespace taxispan {

std::vector<Interval> merge_intervals(std::vector<Interval> xs, double tol) {
    xs.erase(std::remove_if(xs.begin(), xs.end(),
                            [](const Interval& i) { return i.is_empty(); }),
             xs.end());
    std::sort(xs.begin(), xs.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    std::vector<Interval> out;
    for (const Interval& i : xs) {
        if (!out.empty() && i.lo <= out.back().hi + tol) {
            out.back().hi = std::max(out.back().hi, i.hi);
        } else {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<Point> clip_halfplane(const std::vector<Point>& poly,
                                  double a, double b, double c, double tol) {
    std::vector<Point> out;
    const size_t n = poly.size();
    if (n == 0) return out;
    auto side = [&](const Point& p) { return a * p.x + b * p.y + c; };
    for (size_t i = 0; i < n; ++i) {
        const Point& cur = poly[i];
        const Point& nxt = poly[(i + 1) % n];
        double sc = side(cur);
        double sn = side(nxt);
        bool in_c = sc >= -tol;
        bool in_n = sn >= -tol;
        if (in_c) out.push_back(cur);
        if (in_c != in_n) {
            double denom = sc - sn;
            if (std::abs(denom) > 0.0) {
                double t = sc / denom;
                out.push_back({cur.x + t * (nxt.x - cur.x),
                               cur.y + t * (nxt.y - cur.y)});
            }
        }
    }
    return out;
}

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
    double dx = b.x - a.x, dy = b.y - a.y;
    double len2 = dx * dx + dy * dy;
    double t = 0.0;
    if (len2 > 0.0) {
        t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
        t = std::clamp(t, 0.0, 1.0);
    }
    double ex = a.x + t * dx - p.x;
    double ey = a.y + t * dy - p.y;
    return std::sqrt(ex * ex + ey * ey);
}

double l1_point_segment_distance(const Point& p, const Point& a, const Point& b) {
    // |p-z|_1 along the segment is piecewise linear in the parameter with
    // breakpoints where z.x == p.x or z.y == p.y.
    std::vector<double> ts{0.0, 1.0};
    double dx = b.x - a.x, dy = b.y - a.y;
    if (std::abs(dx) > 0.0) ts.push_back(std::clamp((p.x - a.x) / dx, 0.0, 1.0));
    if (std::abs(dy) > 0.0) ts.push_back(std::clamp((p.y - a.y) / dy, 0.0, 1.0));
    double best = std::numeric_limits<double>::infinity();
    for (double t : ts) {
        Point z{a.x + t * dx, a.y + t * dy};
        best = std::min(best, taxicab_distance(p, z));
    }
    return best;
}

namespace {

int orient(const Point& a, const Point& b, const Point& c) {
    double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (v > EPS) return 1;
    if (v < -EPS) return -1;
    return 0;
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
    return point_segment_distance(p, a, b) <= EPS;
}

bool segments_intersect(const Point& a0, const Point& a1,
                        const Point& b0, const Point& b1) {
    int o1 = orient(a0, a1, b0);
    int o2 = orient(a0, a1, b1);
    int o3 = orient(b0, b1, a0);
    int o4 = orient(b0, b1, a1);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a0, a1, b0)) return true;
    if (o2 == 0 && on_segment(a0, a1, b1)) return true;
    if (o3 == 0 && on_segment(b0, b1, a0)) return true;
    if (o4 == 0 && on_segment(b0, b1, a1)) return true;
    return false;
}

}  // namespace

double segment_distance(const Point& a0, const Point& a1,
                        const Point& b0, const Point& b1) {
    if (segments_intersect(a0, a1, b0, b1)) return 0.0;
    double d = point_segment_distance(a0, b0, b1);
    d = std::min(d, point_segment_distance(a1, b0, b1));
    d = std::min(d, point_segment_distance(b0, a0, a1));
    d = std::min(d, point_segment_distance(b1, a0, a1));
    return d;
}

bool convex_contains(const std::vector<Point>& poly, const Point& p, double tol) {
    const size_t n = poly.size();
    if (n == 0) return false;
    if (n == 1) return taxicab_distance(poly[0], p) <= tol;
    if (n == 2) return point_segment_distance(p, poly[0], poly[1]) <= tol;
    // Winding may be either direction; the point is inside when it is on
    // one weak side of every edge consistently, or within tol of an edge.
    int want = 0;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        if (point_segment_distance(p, a, b) <= tol) return true;
        int o = orient(a, b, p);
        if (o == 0) continue;
        if (want == 0) want = o;
        else if (o != want) return false;
    }
    return true;
}

double convex_distance(const std::vector<Point>& a, const std::vector<Point>& b) {
    if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
    if (a.size() == 1) {
        if (convex_contains(b, a[0])) return 0.0;
    }
    if (b.size() == 1) {
        if (convex_contains(a, b[0])) return 0.0;
    }
    if (a.size() >= 3 && convex_contains(a, b[0])) return 0.0;
    if (b.size() >= 3 && convex_contains(b, a[0])) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    auto edges = [](const std::vector<Point>& poly) {
        std::vector<std::pair<Point, Point>> es;
        if (poly.size() == 1) es.push_back({poly[0], poly[0]});
        for (size_t i = 0; i + 1 < poly.size(); ++i) es.push_back({poly[i], poly[i + 1]});
        if (poly.size() >= 3) es.push_back({poly.back(), poly.front()});
        return es;
    };
    for (const auto& [p0, p1] : edges(a))
        for (const auto& [q0, q1] : edges(b))
            best = std::min(best, segment_distance(p0, p1, q0, q1));
    return best;
}

}  // namespace taxispan
