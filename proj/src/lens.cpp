#include "geoclique/lens.hpp"

#include "geoclique/errors.hpp"

#include <cstddef>

namespace geoclique {

Lens build_lens(const ConvexBody& body, const Vec2& c1, const Vec2& c2) {
    Lens lens;
    lens.c1 = c1;
    lens.c2 = c2;
    lens.center = make_rat(1, 2) * (c1 + c2);
    lens.d = minkowski_norm(body, c1 - c2);
    require(lens.d <= 2, "lens requires ||c1-c2|| <= 2");
    if (lens.d == 0) {
        lens.degenerate = true;
        lens.region = {c1};
        return lens;
    }
    Poly s1 = translate_poly(scale_poly(body.vertices(), lens.d), c1);
    Poly s2 = translate_poly(scale_poly(body.vertices(), lens.d), c2);
    lens.region = clip_convex(s1, s2);
    audit(lens.region.size() >= 3, "lens region degenerated unexpectedly");
    // central symmetry about the midpoint (checked again by the test suite)
    for (const auto& v : lens.region) {
        Vec2 reflected = lens.center + (lens.center - v);
        audit(contains_closed(lens.region, reflected), "lens region not centrally symmetric");
    }
    return lens;
}

bool point_below_split(const Vec2& c1, const Vec2& c2, const Vec2& p) {
    if (c1.x == c2.x) return p.x < c1.x; // vertical: below = smaller x
    const Vec2& a = c1.x < c2.x ? c1 : c2;
    const Vec2& b = c1.x < c2.x ? c2 : c1;
    return cross(b - a, p - a) < 0;
}

std::pair<Poly, Poly> split_lens(const Lens& lens) {
    require(!lens.degenerate, "cannot split a degenerate lens");
    Vec2 a = lens.c1, b = lens.c2;
    int below_side;
    if (a.x == b.x) {
        // orient the vertical line upward; left of it = smaller x = below
        if (a.y > b.y) std::swap(a, b);
        below_side = +1;
    } else {
        if (a.x > b.x) std::swap(a, b);
        below_side = -1; // right of the left-to-right line = below
    }
    Poly d1 = clip_halfplane(lens.region, a, b, below_side);
    Poly d2 = clip_halfplane(lens.region, a, b, -below_side);
    audit(d1.size() >= 3 && d2.size() >= 3, "lens split produced a degenerate half");
    return {d1, d2};
}

std::pair<Vec2, Vec2> boundary_direction_cone(const Poly& poly, const Vec2& at) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        if (at == a) {
            const Vec2& prev = poly[(i + n - 1) % n];
            return {a - prev, b - a};
        }
        if (orient(a, b, at) == 0) {
            Rat t = dot(at - a, b - a);
            Rat len = dot(b - a, b - a);
            if (t > 0 && t < len) return {b - a, b - a};
        }
    }
    throw InvalidInput("point is not on the polygon boundary");
}

} // namespace geoclique
