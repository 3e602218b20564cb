#pragma once

#include "geoclique/body.hpp"
#include "geoclique/polygon.hpp"

#include <utility>

namespace geoclique {

// The region reachable within distance d = ||c1-c2|| from both centers,
// i.e. (c1 + dS) cut with (c2 + dS). Centrally symmetric about the midpoint.
struct Lens {
    Vec2 c1, c2;
    Rat d;
    Vec2 center;   // (c1+c2)/2
    Poly region;   // exact clipped polygon ({c1} when degenerate)
    bool degenerate = false;
};

// Requires ||c1-c2|| <= 2 (unit-scale translates); c1 == c2 yields the
// flagged degenerate lens.
Lens build_lens(const ConvexBody& body, const Vec2& c1, const Vec2& c2);

// Split by the line through the centers. Both polygons are closed; as point
// sets, points on the line itself belong to the second half ("not below").
// When the line is vertical, "below" means smaller x.
std::pair<Poly, Poly> split_lens(const Lens& lens);

// Membership rule used by the solvers: strictly below the directed split line.
bool point_below_split(const Vec2& c1, const Vec2& c2, const Vec2& p);

// Supporting-direction cone of a convex polygon at a boundary point, as the
// pair of incident edge directions (equal when the point is edge-interior).
std::pair<Vec2, Vec2> boundary_direction_cone(const Poly& poly, const Vec2& at);

} // namespace geoclique
