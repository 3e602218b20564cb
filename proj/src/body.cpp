#include "geoclique/body.hpp"

#include "geoclique/errors.hpp"

#include <cmath>
#include <cstddef>

namespace geoclique {

ConvexBody::ConvexBody(Poly vertices) : verts_(canonicalize_convex(std::move(vertices))) {
    require(verts_.size() >= 4, "body must be a non-degenerate centrally symmetric polygon");
    require(verts_.size() % 2 == 0, "centrally symmetric polygon has an even vertex count");
    require(is_strictly_convex_ccw(verts_), "body must be strictly convex");
    const std::size_t k = verts_.size() / 2;
    for (std::size_t i = 0; i < k; ++i) {
        require(verts_[i + k] == -verts_[i], "body vertices must satisfy v[i+k] == -v[i]");
    }
    const std::size_t n = verts_.size();
    normals_.reserve(n);
    offsets_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 e = verts_[(i + 1) % n] - verts_[i];
        Vec2 nrm{e.y, -e.x};
        Rat off = dot(nrm, verts_[i]);
        require(off > 0, "origin must be strictly interior to the body");
        normals_.push_back(nrm);
        offsets_.push_back(off);
    }
}

Rat minkowski_norm(const ConvexBody& body, const Vec2& v) {
    // For a symmetric polygon containing the origin, the gauge is
    // max_i dot(n_i, v) / b_i; the maximum is >= 0 because normals come in
    // opposite pairs.
    Rat best = 0;
    const auto& ns = body.normals();
    const auto& bs = body.offsets();
    for (std::size_t i = 0; i < ns.size(); ++i) {
        Rat val = dot(ns[i], v) / bs[i];
        if (val > best) best = val;
    }
    return best;
}

ConvexBody central_symmetrize(const Poly& convex_polygon) {
    Poly p = canonicalize_convex(convex_polygon);
    require(p.size() >= 3 && is_strictly_convex_ccw(p), "input polygon must be convex and non-degenerate");
    Poly neg;
    neg.reserve(p.size());
    for (const auto& v : p) neg.push_back(-v);
    Poly sum = minkowski_sum_convex(p, canonicalize_convex(std::move(neg)));
    return ConvexBody(scale_poly(sum, make_rat(1, 2)));
}

ConvexBody body_square() {
    return ConvexBody({{Rat(1), Rat(1)}, {Rat(-1), Rat(1)}, {Rat(-1), Rat(-1)}, {Rat(1), Rat(-1)}});
}

ConvexBody body_hexagon() {
    // regular hexagon with sqrt(3)/2 ~ 7/8
    const Rat h = make_rat(7, 8);
    const Rat q = make_rat(1, 2);
    return ConvexBody({{Rat(1), Rat(0)}, {q, h}, {-q, h}, {Rat(-1), Rat(0)}, {-q, -h}, {q, -h}});
}

ConvexBody body_symmetrized_triangle() {
    return central_symmetrize({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
}

ConvexBody body_disk_polygon(int half_vertex_count) {
    require(half_vertex_count >= 2 && half_vertex_count <= (1 << 16),
            "disk polygon resolution out of range");
    const int k = half_vertex_count;
    // Rational points on the unit circle via t = tan(theta/2):
    // (x, y) = ((1-t^2)/(1+t^2), 2t/(1+t^2)). Upper half for theta in [0, pi),
    // lower half by central symmetry, so the polygon is exactly symmetric.
    Poly upper;
    upper.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        double theta = M_PI * static_cast<double>(i) / static_cast<double>(k);
        double td = std::tan(theta / 2.0);
        // rationalize t with a fixed denominator; exact circle membership holds
        // for any rational t, only the angular spacing is approximate
        const std::int64_t den = 8LL * k;
        auto num = static_cast<std::int64_t>(std::llround(td * static_cast<double>(den)));
        Rat t = make_rat(num, den);
        Rat one(1), t2 = t * t;
        upper.push_back({(one - t2) / (one + t2), 2 * t / (one + t2)});
    }
    Poly all = upper;
    for (const auto& v : upper) all.push_back(-v);
    return ConvexBody(std::move(all));
}

} // namespace geoclique
