#pragma once

#include "geoclique/polygon.hpp"
#include "geoclique/rational.hpp"

#include <vector>

namespace geoclique {

// A centrally symmetric convex polygon about the origin. The gauge of the
// body, minkowski_norm below, is the norm used by all translate/homothet
// intersection tests.
class ConvexBody {
public:
    explicit ConvexBody(Poly vertices);

    const Poly& vertices() const { return verts_; }

    // Outward edge normals and offsets: body = {x : dot(n_i, x) <= b_i}.
    const std::vector<Vec2>& normals() const { return normals_; }
    const std::vector<Rat>& offsets() const { return offsets_; }

    bool operator==(const ConvexBody& o) const { return verts_ == o.verts_; }

private:
    Poly verts_;
    std::vector<Vec2> normals_;
    std::vector<Rat> offsets_;
};

// The gauge inf{lambda > 0 : v in lambda * body}; exact, 0 for v = 0.
Rat minkowski_norm(const ConvexBody& body, const Vec2& v);

// Difference body (S + (-S)) / 2 of an arbitrary convex polygon; translates
// of the input and of the output have identical intersection graphs.
ConvexBody central_symmetrize(const Poly& convex_polygon);

// Stock bodies.
ConvexBody body_square();                    // [-1,1]^2, gauge = max-coordinate
ConvexBody body_hexagon();                   // rationalized regular hexagon
ConvexBody body_symmetrized_triangle();      // difference body of a right triangle
// 2k-gon with vertices exactly on the unit circle (rational points); the
// approximation mode used whenever a "disk" is requested.
ConvexBody body_disk_polygon(int half_vertex_count = 64);

} // namespace geoclique
