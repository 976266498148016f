#pragma once

#include <optional>
#include <vector>

#include "taxispan/geom.hpp"

namespace taxispan {

/// One slab of a slab-stacked region. Fields are named for the h-convex
/// (y-slab) orientation; for v-convex regions "y" is the major axis (world
/// x) and "x" the minor axis (world y). Zero-height slabs (y_lo == y_hi)
/// encode isolated horizontal segments and envelope jumps.
struct Slab {
    double y_lo = 0.0, y_hi = 0.0;
    double x_lo_at_lo = 0.0, x_lo_at_hi = 0.0;
    double x_hi_at_lo = 0.0, x_hi_at_hi = 0.0;

    double x_lo_at(double y) const;
    double x_hi_at(double y) const;
    double height() const { return y_hi - y_lo; }
    /// Trapezoid area (zero-height slabs contribute nothing).
    double area() const {
        return height() * ((x_hi_at_lo - x_lo_at_lo) + (x_hi_at_hi - x_lo_at_hi)) / 2.0;
    }
};

enum class Orientation { HConvex, VConvex };

/// A horizontally- or vertically-convex closed region as a stack of slabs,
/// sorted along the slab axis with non-overlapping interiors. Every
/// cross-section perpendicular to the slab axis is a single closed interval
/// or empty.
struct SlabRegion {
    Orientation orientation = Orientation::HConvex;
    std::vector<Slab> slabs;

    bool empty() const { return slabs.empty(); }
};

/// World point -> (major, minor) coordinates of the region's slab frame.
inline std::pair<double, double> to_slab_frame(Orientation o, const Point& p) {
    if (o == Orientation::HConvex) return {p.y, p.x};
    return {p.x, p.y};
}

inline Point from_slab_frame(Orientation o, double major, double minor) {
    if (o == Orientation::HConvex) return {minor, major};
    return {major, minor};
}

/// Corners of a slab's trapezoid in world coordinates (possibly degenerate).
std::vector<Point> slab_corners(const SlabRegion& r, const Slab& s);

bool region_membership(const SlabRegion& region, const Point& p, double tol = EPS);

double region_area(const SlabRegion& region);

BBox region_bbox(const SlabRegion& region);

/// Cross-section of the region on a full line: horizontal line y=c or
/// vertical line x=c (world axes). Returns merged disjoint closed intervals
/// of the crossed coordinate.
std::vector<Interval> region_line_cross_section(const SlabRegion& region,
                                                Axis line_axis, double c);

/// Sorts slabs, drops empty ones, merges collinear neighbours. All region
/// producers call this so that equal sets have equal representations.
void canonicalize(SlabRegion& region);

/// Checks the SlabRegion structural invariants; throws std::logic_error.
void validate_region(const SlabRegion& region);

SlabRegion reflect_x(const SlabRegion& region);  // x -> -x
SlabRegion reflect_y(const SlabRegion& region);  // y -> -y
SlabRegion swap_axes(const SlabRegion& region);  // (x,y) -> (y,x)

/// area(a \ b) + area(b \ a) by slab overlay. Regions of differing
/// orientation are first re-expressed as h-convex stacks by re-hatching,
/// which is lossless for orthoconvex regions (all callers).
double symmetric_difference_area(const SlabRegion& a, const SlabRegion& b);

/// True when the axis-parallel ray meets the region.
bool ray_hits_region(const SlabRegion& region, const Ray& ray, double tol = EPS);

bool elbow_hits_region(const SlabRegion& region, const Elbow& elbow, double tol = EPS);

/// Minimal L1 distance from a point to the region (0 when inside).
double l1_distance_to_region(const SlabRegion& region, const Point& p);

/// Draws `count` points from the region, area-weighted across slabs
/// (length-weighted for degenerate regions). Deterministic for fixed seed.
std::vector<Point> region_sample(const SlabRegion& region, int count,
                                 unsigned long long seed);

}  // namespace taxispan
