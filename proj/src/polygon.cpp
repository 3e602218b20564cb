#include "geoclique/polygon.hpp"

#include "geoclique/errors.hpp"

#include <algorithm>
#include <cstddef>

namespace geoclique {

Rat area2(const Poly& p) {
    Rat a = 0;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) a += cross(p[i], p[(i + 1) % n]);
    return a;
}

Poly canonicalize_convex(Poly p) {
    if (p.size() >= 3 && area2(p) < 0) std::reverse(p.begin(), p.end());
    // drop consecutive duplicates
    Poly q;
    for (const auto& v : p) {
        if (q.empty() || !(q.back() == v)) q.push_back(v);
    }
    while (q.size() > 1 && q.front() == q.back()) q.pop_back();
    if (q.size() < 3) return q;
    // merge collinear runs
    Poly r;
    const std::size_t n = q.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& prev = q[(i + n - 1) % n];
        const Vec2& cur = q[i];
        const Vec2& nxt = q[(i + 1) % n];
        if (orient(prev, cur, nxt) != 0) r.push_back(cur);
    }
    if (r.size() < 3) return r;
    std::size_t best = 0;
    for (std::size_t i = 1; i < r.size(); ++i)
        if (lex_less(r[i], r[best])) best = i;
    std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(best), r.end());
    return r;
}

bool is_strictly_convex_ccw(const Poly& p) {
    const std::size_t n = p.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (orient(p[i], p[(i + 1) % n], p[(i + 2) % n]) <= 0) return false;
    }
    return true;
}

PointLoc locate_point(const Poly& poly, const Vec2& p) {
    const std::size_t n = poly.size();
    if (n == 0) return PointLoc::Outside;
    if (n == 1) return poly[0] == p ? PointLoc::Boundary : PointLoc::Outside;
    if (n == 2) {
        // segment
        if (orient(poly[0], poly[1], p) != 0) return PointLoc::Outside;
        Rat t = dot(p - poly[0], poly[1] - poly[0]);
        Rat len = dot(poly[1] - poly[0], poly[1] - poly[0]);
        return (t >= 0 && t <= len) ? PointLoc::Boundary : PointLoc::Outside;
    }
    bool on_edge = false;
    for (std::size_t i = 0; i < n; ++i) {
        int s = orient(poly[i], poly[(i + 1) % n], p);
        if (s < 0) return PointLoc::Outside;
        if (s == 0) on_edge = true;
    }
    return on_edge ? PointLoc::Boundary : PointLoc::Inside;
}

Poly clip_halfplane(const Poly& subject, const Vec2& a, const Vec2& b, int side) {
    Poly out;
    const std::size_t n = subject.size();
    if (n == 0) return out;
    const Vec2 dir = b - a;
    auto eval = [&](const Vec2& p) { return Rat(side) * cross(dir, p - a); };
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& cur = subject[i];
        const Vec2& nxt = subject[(i + 1) % n];
        Rat fc = eval(cur);
        Rat fn = eval(nxt);
        if (fc >= 0) out.push_back(cur);
        if ((fc > 0 && fn < 0) || (fc < 0 && fn > 0)) {
            // exact crossing point
            Rat t = fc / (fc - fn);
            out.push_back(cur + t * (nxt - cur));
        }
    }
    return canonicalize_convex(std::move(out));
}

Poly clip_convex(const Poly& subject, const Poly& clip) {
    Poly cur = subject;
    const std::size_t n = clip.size();
    for (std::size_t i = 0; i < n && cur.size() >= 3; ++i) {
        cur = clip_halfplane(cur, clip[i], clip[(i + 1) % n], +1);
    }
    return cur;
}

namespace {

// angular comparator for edge vectors: half-plane split then cross product
int half_of(const Vec2& v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; }

bool angle_less(const Vec2& a, const Vec2& b) {
    int ha = half_of(a), hb = half_of(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

std::size_t bottommost(const Poly& p) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (p[i].y < p[best].y || (p[i].y == p[best].y && p[i].x < p[best].x)) best = i;
    }
    return best;
}

} // namespace

Poly minkowski_sum_convex(const Poly& p, const Poly& q) {
    require(p.size() >= 3 && q.size() >= 3, "minkowski sum needs non-degenerate polygons");
    const std::size_t np = p.size(), nq = q.size();
    std::size_t ip = bottommost(p), iq = bottommost(q);
    Poly out;
    out.reserve(np + nq);
    Vec2 cur = p[ip] + q[iq];
    std::size_t cp = 0, cq = 0;
    while (cp < np || cq < nq) {
        out.push_back(cur);
        Vec2 ep = p[(ip + 1) % np] - p[ip % np];
        Vec2 eq = q[(iq + 1) % nq] - q[iq % nq];
        if (cq == nq || (cp < np && angle_less(ep, eq))) {
            cur = cur + ep;
            ++ip; ++cp;
        } else if (cp == np || angle_less(eq, ep)) {
            cur = cur + eq;
            ++iq; ++cq;
        } else { // parallel edges: advance both at once
            cur = cur + ep + eq;
            ++ip; ++cp; ++iq; ++cq;
        }
    }
    return canonicalize_convex(std::move(out));
}

bool convex_polygons_overlap(const Poly& p, const Poly& q) {
    if (p.empty() || q.empty()) return false;
    auto separated_by_edges = [](const Poly& a, const Poly& b) {
        const std::size_t n = a.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 axis{a[(i + 1) % n].y - a[i].y, a[i].x - a[(i + 1) % n].x}; // outward
            Rat amax = dot(axis, a[0]);
            for (const auto& v : a) { Rat d = dot(axis, v); if (d > amax) amax = d; }
            Rat bmin = dot(axis, b[0]);
            for (const auto& v : b) { Rat d = dot(axis, v); if (d < bmin) bmin = d; }
            if (bmin > amax) return true; // strict separation: closed sets disjoint
        }
        return false;
    };
    if (p.size() >= 2 && separated_by_edges(p, q)) return false;
    if (q.size() >= 2 && separated_by_edges(q, p)) return false;
    if (p.size() == 1) return contains_closed(q, p[0]);
    if (q.size() == 1) return contains_closed(p, q[0]);
    return true;
}

Poly convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    Poly hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return canonicalize_convex(std::move(hull));
}

Poly translate_poly(const Poly& p, const Vec2& off) {
    Poly out;
    out.reserve(p.size());
    for (const auto& v : p) out.push_back(v + off);
    return out;
}

Poly scale_poly(const Poly& p, const Rat& s) {
    Poly out;
    out.reserve(p.size());
    for (const auto& v : p) out.push_back(s * v);
    return out;
}

Vec2 sample_point_in_convex(const Poly& poly, SplitMix& rng, int denom_bits) {
    require(poly.size() >= 3, "sampling needs a polygon with interior");
    // fan triangles (0, i, i+1), pick by area weight
    std::vector<Rat> cum;
    Rat total = 0;
    for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
        total += rat_abs(cross(poly[i] - poly[0], poly[i + 1] - poly[0]));
        cum.push_back(total);
    }
    const std::uint64_t den = 1ULL << denom_bits;
    Rat pick = total * Rat(Int(rng.below(den)), Int(den));
    std::size_t tri = 0;
    while (tri + 1 < cum.size() && cum[tri] <= pick) ++tri;
    const Vec2& a = poly[0];
    const Vec2& b = poly[tri + 1];
    const Vec2& c = poly[tri + 2];
    Rat u = Rat(Int(rng.below(den)), Int(den));
    Rat v = Rat(Int(rng.below(den)), Int(den));
    if (u + v > 1) { u = 1 - u; v = 1 - v; }
    return a + u * (b - a) + v * (c - a);
}

} // namespace geoclique
