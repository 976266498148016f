#pragma once

#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

namespace taxispan {

/// Absolute tolerance for all coordinate comparisons. Inputs are expected
/// to be scaled near the unit box (documented, not enforced).
inline constexpr double EPS = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
}

inline bool finite(const Point& p) {
    return std::isfinite(p.x) && std::isfinite(p.y);
}

/// d1((x1,y1),(x2,y2)) = |x1-x2| + |y1-y2|.
inline double taxicab_distance(const Point& p, const Point& q) {
    return std::abs(p.x - q.x) + std::abs(p.y - q.y);
}

/// 45-degree rotation u=x+y, v=x-y. Maps L1 balls to axis-aligned squares;
/// d1(p,q) = max(|du|,|dv|).
inline std::pair<double, double> to_uv(const Point& p) {
    return {p.x + p.y, p.x - p.y};
}

inline Point from_uv(double u, double v) {
    return {(u + v) / 2.0, (u - v) / 2.0};
}

enum class Axis { Horizontal, Vertical };

/// Which of the four closed quadrants of a query point meet a shape.
/// First sign is x, second is y: pm = Q^{+-}.
struct QuadrantOccupancy {
    bool pp = false;
    bool pm = false;
    bool mp = false;
    bool mm = false;

    int count() const { return int(pp) + int(pm) + int(mp) + int(mm); }
    bool get(int xsign, int ysign) const {
        if (xsign > 0) return ysign > 0 ? pp : pm;
        return ysign > 0 ? mp : mm;
    }
    void set(int xsign, int ysign, bool v) {
        if (xsign > 0) (ysign > 0 ? pp : pm) = v;
        else (ysign > 0 ? mp : mm) = v;
    }
};

/// Axis-parallel half-line from an origin. sign=+1 points toward +axis.
struct Ray {
    Point origin;
    Axis axis = Axis::Horizontal;
    int sign = +1;
};

/// Union of one horizontal and one vertical ray from a common corner.
struct Elbow {
    Point corner;
    int xsign = +1;
    int ysign = +1;
};

/// Closed interval on a line; lo > hi means empty.
struct Interval {
    double lo = 1.0;
    double hi = 0.0;

    static Interval empty() { return {1.0, 0.0}; }
    static Interval point(double v) { return {v, v}; }
    bool is_empty() const { return lo > hi; }
    double length() const { return is_empty() ? 0.0 : hi - lo; }
    bool contains(double v, double tol = EPS) const {
        return !is_empty() && v >= lo - tol && v <= hi + tol;
    }
    void absorb(const Interval& o) {
        if (o.is_empty()) return;
        if (is_empty()) { *this = o; return; }
        lo = std::min(lo, o.lo);
        hi = std::max(hi, o.hi);
    }
};

inline Interval intersect(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    Interval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
    return r.lo > r.hi ? Interval::empty() : r;
}

/// Sorts and merges intervals whose gaps are within tol.
std::vector<Interval> merge_intervals(std::vector<Interval> xs, double tol = EPS);

struct BBox {
    double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
    bool valid = false;

    void expand(const Point& p) {
        if (!valid) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
            valid = true;
            return;
        }
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    void expand(const BBox& o) {
        if (!o.valid) return;
        expand(Point{o.min_x, o.min_y});
        expand(Point{o.max_x, o.max_y});
    }
    double width() const { return valid ? max_x - min_x : 0.0; }
    double height() const { return valid ? max_y - min_y : 0.0; }
    double area() const { return width() * height(); }
    bool contains(const Point& p, double tol = EPS) const {
        return valid && p.x >= min_x - tol && p.x <= max_x + tol &&
               p.y >= min_y - tol && p.y <= max_y + tol;
    }
};

// Convex polygon helpers shared by the hatching and retraction code.
// Polygons are vertex lists in consistent winding; degenerate (segment or
// point) polygons are allowed.

/// Clips a convex polygon against the half-plane a*x + b*y + c >= -tol.
std::vector<Point> clip_halfplane(const std::vector<Point>& poly,
                                  double a, double b, double c,
                                  double tol = EPS);

/// Euclidean distance between two segments (0 when they intersect).
double segment_distance(const Point& a0, const Point& a1,
                        const Point& b0, const Point& b1);

double point_segment_distance(const Point& p, const Point& a, const Point& b);

/// Minimal L1 distance from a point to a closed segment.
double l1_point_segment_distance(const Point& p, const Point& a, const Point& b);

/// True when the point lies in the closed convex polygon (within tol).
bool convex_contains(const std::vector<Point>& poly, const Point& p,
                     double tol = EPS);

/// Euclidean distance between two convex polygons (0 when they intersect).
double convex_distance(const std::vector<Point>& a, const std::vector<Point>& b);

}  // namespace taxispan
