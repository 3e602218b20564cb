#pragma once

#include "geoclique/body.hpp"
#include "geoclique/graph.hpp"
#include "geoclique/polygon.hpp"
#include "geoclique/rational.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace geoclique {

// Center + positive scale; scale == 1 for translates.
struct Placement {
    Vec2 center;
    Rat scale{1};
};

// Closed half-plane: the side of the directed boundary line a->b.
// Left is the side where cross(b-a, p-a) >= 0.
enum class HalfSide { Left, Right };

struct HalfPlane {
    Vec2 a, b;
    HalfSide side = HalfSide::Left;

    // Uniform representation {p : dot(normal(), p) >= offset()}.
    Vec2 normal() const {
        Vec2 n{a.y - b.y, b.x - a.x};
        return side == HalfSide::Left ? n : -n;
    }
    Rat offset() const { return dot(normal(), a); }
    bool contains(const Vec2& p) const { return dot(normal(), p) >= offset(); }
};

struct AxisRect {
    Rat x_lo, x_hi, y_lo, y_hi;

    bool contains(const Vec2& p) const {
        return p.x >= x_lo && p.x <= x_hi && p.y >= y_lo && p.y <= y_hi;
    }
    Poly corners() const {
        return {{x_lo, y_lo}, {x_hi, y_lo}, {x_hi, y_hi}, {x_lo, y_hi}};
    }
};

enum class ObjKind { Translate, Homothet, HalfPlaneObj, Rect };

struct SceneObject {
    ObjKind kind;
    Placement placement;  // Translate / Homothet
    HalfPlane halfplane;  // HalfPlaneObj
    AxisRect rect;        // Rect
    std::string label;
    int weight = 1;       // stacked copies
};

struct Scene {
    ConvexBody body = body_square();
    std::vector<SceneObject> objects;

    void validate(bool allow_degenerate_rects = false) const;
};

// Closed-set pairwise predicates.
bool translates_intersect(const ConvexBody& body, const Placement& p1, const Placement& p2);
bool homothets_intersect(const ConvexBody& body, const Placement& p1, const Placement& p2);
bool halfplanes_intersect(const HalfPlane& h1, const HalfPlane& h2);
bool halfplane_rect_intersect(const HalfPlane& h, const AxisRect& r);
bool halfplane_polygon_intersect(const HalfPlane& h, const Poly& poly);
bool rects_intersect(const AxisRect& r1, const AxisRect& r2);

Poly materialize(const ConvexBody& body, const Placement& p);

// Dispatching predicate between any two scene objects under the scene body.
bool objects_intersect(const Scene& scene, const SceneObject& o1, const SceneObject& o2);

// Intersection graph of a scene; weight-w objects become w true-twin
// vertices. The OpenMP kernel and the plain serial loop must agree.
IntersectionGraph scene_to_graph(const Scene& scene);
IntersectionGraph scene_to_graph_serial(const Scene& scene);

// JSON scene format:
// {"body": [[x_num,x_den,y_num,y_den],...],
//  "objects":[{"kind":"translate","center":[...],"label":..,"weight":..}, ...]}
std::string scene_to_json(const Scene& scene);
Scene scene_from_json(const std::string& text);

} // namespace geoclique
