#pragma once

#include "geoclique/rational.hpp"
#include "geoclique/rng.hpp"

#include <optional>
#include <vector>

namespace geoclique {

// Convex polygons are stored as vertex lists in counter-clockwise order,
// without duplicate or collinear vertices.
using Poly = std::vector<Vec2>;

// Twice the signed area (positive for CCW).
Rat area2(const Poly& p);

// Removes duplicates / collinear runs, enforces CCW, rotates so the
// lexicographically smallest vertex comes first.
Poly canonicalize_convex(Poly p);

bool is_strictly_convex_ccw(const Poly& p);

enum class PointLoc { Inside, Boundary, Outside };

PointLoc locate_point(const Poly& poly, const Vec2& p);

inline bool contains_closed(const Poly& poly, const Vec2& p) {
    return locate_point(poly, p) != PointLoc::Outside;
}

// Intersection of two convex polygons (Sutherland-Hodgman, exact).
// May return an empty or degenerate polygon when the interiors do not meet.
Poly clip_convex(const Poly& subject, const Poly& clip);

// Clip a convex polygon by the closed half-plane {p : cross(b-a, p-a) * side >= 0},
// side = +1 keeps the left of a->b, side = -1 keeps the right.
Poly clip_halfplane(const Poly& subject, const Vec2& a, const Vec2& b, int side);

// Minkowski sum of convex polygons by sorted edge-vector merge.
Poly minkowski_sum_convex(const Poly& p, const Poly& q);

// Closed-set overlap test for convex polygons (tangency counts).
bool convex_polygons_overlap(const Poly& p, const Poly& q);

Poly convex_hull(std::vector<Vec2> pts);

Poly translate_poly(const Poly& p, const Vec2& off);
Poly scale_poly(const Poly& p, const Rat& s);

// Uniform-ish exact rational point inside a convex polygon: pick a fan
// triangle by area weight, then a rational barycentric combination.
Vec2 sample_point_in_convex(const Poly& poly, SplitMix& rng, int denom_bits = 12);

} // namespace geoclique
