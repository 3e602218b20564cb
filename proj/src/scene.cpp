#include "geoclique/scene.hpp"

#include "geoclique/errors.hpp"

#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace geoclique {

void Scene::validate(bool allow_degenerate_rects) const {
    for (const auto& o : objects) {
        require(o.weight >= 1, "object weight must be a positive integer");
        switch (o.kind) {
            case ObjKind::Translate:
                require(o.placement.scale == 1, "translate must have scale 1");
                break;
            case ObjKind::Homothet:
                require(o.placement.scale > 0, "homothet scale must be positive");
                break;
            case ObjKind::HalfPlaneObj:
                require(!(o.halfplane.a == o.halfplane.b), "half-plane boundary needs two distinct points");
                break;
            case ObjKind::Rect:
                if (allow_degenerate_rects) {
                    require(o.rect.x_lo <= o.rect.x_hi && o.rect.y_lo <= o.rect.y_hi,
                            "rectangle bounds out of order");
                } else {
                    require(o.rect.x_lo < o.rect.x_hi && o.rect.y_lo < o.rect.y_hi,
                            "degenerate rectangle (pass the degeneracy flag to allow)");
                }
                break;
        }
    }
}

bool translates_intersect(const ConvexBody& body, const Placement& p1, const Placement& p2) {
    require(p1.scale == 1 && p2.scale == 1, "translates_intersect requires unit scales");
    return minkowski_norm(body, p1.center - p2.center) <= 2;
}

bool homothets_intersect(const ConvexBody& body, const Placement& p1, const Placement& p2) {
    require(p1.scale > 0 && p2.scale > 0, "homothet scales must be positive");
    return minkowski_norm(body, p1.center - p2.center) <= p1.scale + p2.scale;
}

bool halfplanes_intersect(const HalfPlane& h1, const HalfPlane& h2) {
    Vec2 n1 = h1.normal(), n2 = h2.normal();
    if (cross(n1, n2) != 0) return true; // boundaries cross
    if (dot(n1, n2) > 0) return true;    // parallel, same direction: nested
    // opposite directions: {n1 p >= c1} and {-t n1 p >= c2}, t > 0
    Rat t = (n1.x != 0) ? (-n2.x / n1.x) : (-n2.y / n1.y);
    return h1.offset() * t + h2.offset() <= 0;
}

bool halfplane_rect_intersect(const HalfPlane& h, const AxisRect& r) {
    Vec2 n = h.normal();
    Rat c = h.offset();
    for (const auto& p : r.corners())
        if (dot(n, p) >= c) return true;
    return false;
}

bool halfplane_polygon_intersect(const HalfPlane& h, const Poly& poly) {
    Vec2 n = h.normal();
    Rat c = h.offset();
    for (const auto& p : poly)
        if (dot(n, p) >= c) return true;
    return false;
}

bool rects_intersect(const AxisRect& r1, const AxisRect& r2) {
    return r1.x_lo <= r2.x_hi && r2.x_lo <= r1.x_hi && r1.y_lo <= r2.y_hi && r2.y_lo <= r1.y_hi;
}

Poly materialize(const ConvexBody& body, const Placement& p) {
    return translate_poly(scale_poly(body.vertices(), p.scale), p.center);
}

bool objects_intersect(const Scene& scene, const SceneObject& o1, const SceneObject& o2) {
    auto kind = [](const SceneObject& o) { return o.kind; };
    const SceneObject* a = &o1;
    const SceneObject* b = &o2;
    // normalize order so we only dispatch one triangle of the kind matrix
    if (static_cast<int>(kind(*a)) > static_cast<int>(kind(*b))) std::swap(a, b);

    const bool a_norm = a->kind == ObjKind::Translate || a->kind == ObjKind::Homothet;
    const bool b_norm = b->kind == ObjKind::Translate || b->kind == ObjKind::Homothet;
    if (a_norm && b_norm) return homothets_intersect(scene.body, a->placement, b->placement);

    if (a->kind == ObjKind::HalfPlaneObj && b->kind == ObjKind::HalfPlaneObj)
        return halfplanes_intersect(a->halfplane, b->halfplane);
    if (a->kind == ObjKind::Rect && b->kind == ObjKind::Rect)
        return rects_intersect(a->rect, b->rect);

    if (b->kind == ObjKind::HalfPlaneObj) std::swap(a, b);
    if (a->kind == ObjKind::HalfPlaneObj) {
        if (b->kind == ObjKind::Rect) return halfplane_rect_intersect(a->halfplane, b->rect);
        return halfplane_polygon_intersect(a->halfplane, materialize(scene.body, b->placement));
    }
    // remaining mixed case: body homothet/translate vs rectangle
    if (a->kind == ObjKind::Rect) std::swap(a, b);
    return convex_polygons_overlap(materialize(scene.body, a->placement), b->rect.corners());
}

namespace {

struct Expanded {
    std::vector<const SceneObject*> objs;
    std::vector<std::string> labels;
};

Expanded expand_weights(const Scene& scene) {
    Expanded e;
    for (const auto& o : scene.objects) {
        for (int w = 0; w < o.weight; ++w) {
            e.objs.push_back(&o);
            e.labels.push_back(o.weight == 1 ? o.label : o.label + "#" + std::to_string(w + 1));
        }
    }
    return e;
}

} // namespace

IntersectionGraph scene_to_graph_serial(const Scene& scene) {
    scene.validate();
    Expanded e = expand_weights(scene);
    const int n = static_cast<int>(e.objs.size());
    IntersectionGraph g(n);
    g.labels = e.labels;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (e.objs[i] == e.objs[j] || objects_intersect(scene, *e.objs[i], *e.objs[j]))
                g.add_edge(i, j);
    return g;
}

IntersectionGraph scene_to_graph(const Scene& scene) {
    scene.validate();
    Expanded e = expand_weights(scene);
    const int n = static_cast<int>(e.objs.size());
    IntersectionGraph g(n);
    g.labels = e.labels;
    // pairwise predicates are pure; rows are independent
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (e.objs[i] == e.objs[j] || objects_intersect(scene, *e.objs[i], *e.objs[j])) {
                // writes touch disjoint cells (i,j)/(j,i) only from row min(i,j)
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

namespace {

using nlohmann::ordered_json;

ordered_json rat_to_json_num(const Rat& r) {
    const Int& num = numerator(r);
    const Int& den = denominator(r);
    const Int lim = Int(1) << 53;
    if (num > -lim && num < lim && den < lim) {
        ordered_json a = ordered_json::array();
        a.push_back(num.template convert_to<std::int64_t>());
        a.push_back(den.template convert_to<std::int64_t>());
        return a;
    }
    ordered_json a = ordered_json::array();
    a.push_back(num.str());
    a.push_back(den.str());
    return a;
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    require(j.is_number_integer(), "expected integer or string in rational encoding");
    return Int(j.get<std::int64_t>());
}

Rat rat_from_json_pair(const nlohmann::json& j, std::size_t at) {
    Int num = int_from_json(j.at(at));
    Int den = int_from_json(j.at(at + 1));
    require(den != 0, "zero denominator in scene file");
    return Rat(num, den);
}

ordered_json point_to_json(const Vec2& p) {
    ordered_json a = rat_to_json_num(p.x);
    ordered_json b = rat_to_json_num(p.y);
    ordered_json out = ordered_json::array();
    for (auto& v : a) out.push_back(v);
    for (auto& v : b) out.push_back(v);
    return out;
}

Vec2 point_from_json(const nlohmann::json& j) {
    require(j.is_array() && j.size() == 4, "point must be [x_num,x_den,y_num,y_den]");
    return {rat_from_json_pair(j, 0), rat_from_json_pair(j, 2)};
}

} // namespace

std::string scene_to_json(const Scene& scene) {
    ordered_json j;
    ordered_json body = ordered_json::array();
    for (const auto& v : scene.body.vertices()) body.push_back(point_to_json(v));
    j["body"] = body;
    ordered_json objs = ordered_json::array();
    for (const auto& o : scene.objects) {
        ordered_json e;
        switch (o.kind) {
            case ObjKind::Translate:
                e["kind"] = "translate";
                e["center"] = point_to_json(o.placement.center);
                break;
            case ObjKind::Homothet:
                e["kind"] = "homothet";
                e["center"] = point_to_json(o.placement.center);
                e["scale"] = rat_to_json_num(o.placement.scale);
                break;
            case ObjKind::HalfPlaneObj:
                e["kind"] = "halfplane";
                e["a"] = point_to_json(o.halfplane.a);
                e["b"] = point_to_json(o.halfplane.b);
                e["side"] = o.halfplane.side == HalfSide::Left ? "left" : "right";
                break;
            case ObjKind::Rect:
                e["kind"] = "rect";
                e["x_lo"] = rat_to_json_num(o.rect.x_lo);
                e["x_hi"] = rat_to_json_num(o.rect.x_hi);
                e["y_lo"] = rat_to_json_num(o.rect.y_lo);
                e["y_hi"] = rat_to_json_num(o.rect.y_hi);
                break;
        }
        e["label"] = o.label;
        e["weight"] = o.weight;
        objs.push_back(e);
    }
    j["objects"] = objs;
    return j.dump(2) + "\n";
}

Scene scene_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw InvalidInput(std::string("scene JSON parse error: ") + e.what());
    }
    Scene scene;
    Poly body;
    for (const auto& v : j.at("body")) body.push_back(point_from_json(v));
    scene.body = ConvexBody(std::move(body));
    for (const auto& e : j.at("objects")) {
        SceneObject o;
        std::string kind = e.at("kind").get<std::string>();
        if (kind == "translate") {
            o.kind = ObjKind::Translate;
            o.placement.center = point_from_json(e.at("center"));
            o.placement.scale = 1;
        } else if (kind == "homothet") {
            o.kind = ObjKind::Homothet;
            o.placement.center = point_from_json(e.at("center"));
            o.placement.scale = rat_from_json_pair(e.at("scale"), 0);
        } else if (kind == "halfplane") {
            o.kind = ObjKind::HalfPlaneObj;
            o.halfplane.a = point_from_json(e.at("a"));
            o.halfplane.b = point_from_json(e.at("b"));
            std::string side = e.at("side").get<std::string>();
            require(side == "left" || side == "right", "half-plane side must be left or right");
            o.halfplane.side = side == "left" ? HalfSide::Left : HalfSide::Right;
        } else if (kind == "rect") {
            o.kind = ObjKind::Rect;
            o.rect.x_lo = rat_from_json_pair(e.at("x_lo"), 0);
            o.rect.x_hi = rat_from_json_pair(e.at("x_hi"), 0);
            o.rect.y_lo = rat_from_json_pair(e.at("y_lo"), 0);
            o.rect.y_hi = rat_from_json_pair(e.at("y_hi"), 0);
        } else {
            throw InvalidInput("unknown object kind: " + kind);
        }
        if (e.contains("label")) o.label = e.at("label").get<std::string>();
        if (e.contains("weight")) o.weight = e.at("weight").get<int>();
        scene.objects.push_back(std::move(o));
    }
    scene.validate();
    return scene;
}

} // namespace geoclique
