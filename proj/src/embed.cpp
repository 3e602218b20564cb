#include "geoclique/embed.hpp"

#include "geoclique/errors.hpp"
#include "geoclique/rng.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace geoclique {

namespace {

std::string interval_tag(std::pair<int, int> iv) {
    std::ostringstream os;
    os << "[" << iv.first << "," << iv.second << "]";
    return os.str();
}

Rat slope_of(const Vec2& a, const Vec2& b) { return (b.y - a.y) / (b.x - a.x); }

struct ChainBuild {
    std::vector<Vec2> pts; // p_0 .. p_{n+1}
};

// Sample the convex curve x -> -1/x and wiggle the inner points until the
// chain is strictly convex and the midpoint-line slopes are pairwise
// distinct. All coordinates stay rational so downstream predicates are exact.
ChainBuild build_chain(int n, const Rat& range, std::uint64_t seed, bool all_pairs) {
    require(range > 0, "curve range must be positive");
    ChainBuild cb;
    std::vector<Rat> xs, base_y;
    for (int i = 0; i <= n + 1; ++i) {
        Rat x = -(1 + range) + range * Rat(Int(i), Int(n + 1));
        xs.push_back(x);
        base_y.push_back(-1 / x);
    }
    // smallest convexity gap of the unwiggled chain bounds the safe wiggle
    Rat min_gap;
    bool first = true;
    for (int i = 1; i <= n; ++i) {
        Rat s1 = (base_y[static_cast<std::size_t>(i)] - base_y[static_cast<std::size_t>(i - 1)]) /
                 (xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(i - 1)]);
        Rat s2 = (base_y[static_cast<std::size_t>(i + 1)] - base_y[static_cast<std::size_t>(i)]) /
                 (xs[static_cast<std::size_t>(i + 1)] - xs[static_cast<std::size_t>(i)]);
        Rat gap = s2 - s1;
        audit(gap > 0, "curve samples are not strictly convex");
        if (first || gap < min_gap) {
            min_gap = gap;
            first = false;
        }
    }
    const Rat eta = min_gap * (xs[1] - xs[0]) / Rat(4096);

    SplitMix rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        cb.pts.clear();
        for (int i = 0; i <= n + 1; ++i) {
            Rat dy = (i >= 1 && i <= n) ? eta * Rat(Int(rng.below(256)), Int(256)) : Rat(0);
            cb.pts.push_back({xs[static_cast<std::size_t>(i)], base_y[static_cast<std::size_t>(i)] + dy});
        }
        bool convex = true;
        for (int i = 1; i <= n && convex; ++i)
            convex = orient(cb.pts[static_cast<std::size_t>(i - 1)], cb.pts[static_cast<std::size_t>(i)],
                            cb.pts[static_cast<std::size_t>(i + 1)]) > 0;
        if (!convex) continue;
        if (!all_pairs) return cb;
        std::set<Rat> slopes;
        bool distinct = true;
        for (int i = 1; i <= n && distinct; ++i) {
            Vec2 m1 = make_rat(1, 2) * (cb.pts[static_cast<std::size_t>(i - 1)] + cb.pts[static_cast<std::size_t>(i)]);
            for (int j = i; j <= n && distinct; ++j) {
                Vec2 m2 = make_rat(1, 2) * (cb.pts[static_cast<std::size_t>(j)] + cb.pts[static_cast<std::size_t>(j + 1)]);
                distinct = slopes.insert(slope_of(m1, m2)).second;
            }
        }
        if (distinct) return cb;
    }
    throw AuditFailure("could not wiggle the chain into distinct slopes");
}

struct LineOf {
    Vec2 m1, m2; // midpoints; directed left to right
};

LineOf interval_line(const ChainBuild& cb, std::pair<int, int> iv) {
    const auto& p = cb.pts;
    Vec2 m1 = make_rat(1, 2) * (p[static_cast<std::size_t>(iv.first - 1)] + p[static_cast<std::size_t>(iv.first)]);
    Vec2 m2 = make_rat(1, 2) * (p[static_cast<std::size_t>(iv.second)] + p[static_cast<std::size_t>(iv.second + 1)]);
    return {m1, m2};
}

// conservative rational lower bound on the euclidean distance margin of every
// rectangle corner / chain point against every interval line
Rat distance_margin(const std::vector<LineOf>& lines, const std::vector<Vec2>& probes) {
    Rat best;
    bool first = true;
    for (const auto& ln : lines) {
        Vec2 n{ln.m1.y - ln.m2.y, ln.m2.x - ln.m1.x};
        Rat c = dot(n, ln.m1);
        Rat l1 = rat_abs(n.x) + rat_abs(n.y);
        for (const auto& pt : probes) {
            Rat gap = rat_abs(dot(n, pt) - c) / l1;
            if (gap == 0) continue; // points on the line carry no requirement
            if (first || gap < best) {
                best = gap;
                first = false;
            }
        }
    }
    audit(!first, "no probes for the margin computation");
    return best;
}

} // namespace

GeometricEmbedding embed_mipa_as_clique(const MipaInstance& inst, EmbedMode mode,
                                        const EmbedOptions& opts) {
    inst.validate();
    require(inst.symmetric(), "embedding requires a symmetric matching");
    require(inst.intervals_disjoint(), "embedding requires pairwise disjoint intervals");
    require(inst.max_interval_length() <= 5, "embedding requires intervals of at most five points");

    const int n = inst.n;
    GeometricEmbedding emb;
    emb.instance = inst;
    emb.mode = mode;

    bool audit_all = opts.audit_all_pair_slopes && n <= 256;
    ChainBuild cb = build_chain(n, opts.curve_range, opts.wiggle_seed, audit_all);
    emb.p_chain = cb.pts;
    for (const auto& p : cb.pts) emb.q_chain.push_back(-p);

    // x-order sanity: p_0 .. p_{n+1} then q_{n+1} .. q_0
    for (int i = 0; i <= n; ++i)
        audit(cb.pts[static_cast<std::size_t>(i)].x < cb.pts[static_cast<std::size_t>(i + 1)].x,
              "p-chain is not x-sorted");
    audit(cb.pts[static_cast<std::size_t>(n + 1)].x < emb.q_chain[static_cast<std::size_t>(n + 1)].x,
          "chains overlap in x");

    std::vector<LineOf> lines;
    for (auto iv : inst.intervals) lines.push_back(interval_line(cb, iv));

    // separation audits: the interval's chain points lie strictly below its
    // line, the rest strictly above, and the origin strictly below
    if (!audit_all) {
        std::set<Rat> used;
        for (const auto& ln : lines)
            audit(used.insert(slope_of(ln.m1, ln.m2)).second, "interval lines share a slope");
    }
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const auto& ln = lines[k];
        auto iv = inst.intervals[k];
        for (int i = 1; i <= n; ++i) {
            int side = orient(ln.m1, ln.m2, cb.pts[static_cast<std::size_t>(i)]);
            audit(side != 0, "chain point on an interval line");
            bool below = side < 0;
            audit(below == (i >= iv.first && i <= iv.second), "interval line separation failed");
        }
        audit(orient(ln.m1, ln.m2, Vec2{Rat(0), Rat(0)}) < 0, "origin is not below an interval line");
    }

    Scene& scene = emb.scene;
    // rectangles: one per level-0 matching edge, containing the origin
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) edges.emplace_back(i, inst.sigma[static_cast<std::size_t>(i - 1)]);

    std::vector<Vec2> probes{Vec2{Rat(0), Rat(0)}};
    for (int i = 1; i <= n; ++i) probes.push_back(cb.pts[static_cast<std::size_t>(i)]);
    for (auto [i, j] : edges) {
        // all four corners of R(i,j)
        const Vec2& tl = cb.pts[static_cast<std::size_t>(i)];
        Vec2 br = -cb.pts[static_cast<std::size_t>(j)];
        probes.push_back(tl);
        probes.push_back(br);
        probes.push_back({tl.x, br.y});
        probes.push_back({br.x, tl.y});
    }

    auto push_halfplanes = [&](Scene& sc) {
        for (std::size_t k = 0; k < lines.size(); ++k) {
            SceneObject hp;
            hp.kind = ObjKind::HalfPlaneObj;
            hp.halfplane = {lines[k].m1, lines[k].m2, HalfSide::Left}; // upper side
            hp.label = "h_p(" + interval_tag(inst.intervals[k]) + ")";
            hp.weight = 5;
            emb.hp_index.push_back(static_cast<int>(sc.objects.size()));
            sc.objects.push_back(hp);
            SceneObject hq;
            hq.kind = ObjKind::HalfPlaneObj;
            hq.halfplane = {-lines[k].m1, -lines[k].m2, HalfSide::Left}; // reflected: lower side
            hq.label = "h_q(" + interval_tag(inst.intervals[k]) + ")";
            hq.weight = 5;
            emb.hq_index.push_back(static_cast<int>(sc.objects.size()));
            sc.objects.push_back(hq);
        }
    };
    auto push_rects = [&](Scene& sc) {
        for (auto [i, j] : edges) {
            const Vec2& tl = cb.pts[static_cast<std::size_t>(i)];
            Vec2 br = -cb.pts[static_cast<std::size_t>(j)];
            SceneObject r;
            r.kind = ObjKind::Rect;
            r.rect = {tl.x, br.x, br.y, tl.y};
            r.label = "R(" + std::to_string(i) + "," + std::to_string(j) + ")";
            emb.rect_index.push_back(static_cast<int>(sc.objects.size()));
            sc.objects.push_back(r);
        }
    };

    if (mode == EmbedMode::HalfPlane) {
        push_halfplanes(scene);
        push_rects(scene);
        scene.validate();
        return emb;
    }

    // UnitDisk mode: replace each half-plane by a large homothet of the
    // polygonal disk body, sized so the intersection graph is unchanged.
    // A disk hugging its boundary line deviates from it by at most the
    // facet sagitta, so a fine enough polygon reproduces every verdict;
    // equality with the half-plane graph is verified, not assumed.
    Scene half_scene;
    push_halfplanes(half_scene);
    push_rects(half_scene);
    half_scene.validate();
    IntersectionGraph target = scene_to_graph(half_scene);

    Rat margin = distance_margin(lines, probes);
    double mu = to_double(margin);
    double theta_min = 1.0;
    for (std::size_t a = 0; a < lines.size(); ++a)
        for (std::size_t b = a + 1; b < lines.size(); ++b) {
            double sa = to_double(slope_of(lines[a].m1, lines[a].m2));
            double sb = to_double(slope_of(lines[b].m1, lines[b].m2));
            double ang = std::fabs(std::atan(sa) - std::atan(sb));
            theta_min = std::min(theta_min, ang);
        }
    double reach = 0; // scene extent
    for (const auto& pt : probes) reach = std::max({reach, std::fabs(to_double(pt.x)), std::fabs(to_double(pt.y))});

    double radius_d = std::max(64.0 / (theta_min * theta_min), 8.0 * reach * reach / mu);
    int resolution = opts.disk_resolution;
    if (resolution == 0) {
        resolution = 256;
        while (resolution < 1 << 14 &&
               static_cast<double>(resolution) < 3.2 * std::sqrt(radius_d / mu))
            resolution *= 2;
    }

    for (int attempt = 0; attempt < 3; ++attempt) {
        Scene disk_scene;
        disk_scene.body = body_disk_polygon(resolution);
        emb.hp_index.clear();
        emb.hq_index.clear();
        emb.rect_index.clear();
        Rat big_r(static_cast<long long>(radius_d) + 1);
        for (std::size_t k = 0; k < lines.size(); ++k) {
            const auto& ln = lines[k];
            Vec2 nrm{ln.m1.y - ln.m2.y, ln.m2.x - ln.m1.x}; // points up, away from O
            Rat nn = dot(nrm, nrm);
            // rational approximation of big_r / |n| so every disk has radius
            // close to big_r regardless of the boundary segment length
            double inv_len = to_double(big_r) / std::sqrt(to_double(nn));
            Rat t(Int(static_cast<long long>(inv_len * 65536.0)), Int(65536));
            Vec2 foot = (dot(nrm, ln.m1) / nn) * nrm; // perpendicular from O
            Rat scale = t * minkowski_norm(disk_scene.body, nrm);

            auto add_disk = [&](const Vec2& center, const std::string& label, std::vector<int>& slot) {
                SceneObject d;
                d.kind = ObjKind::Homothet;
                d.placement = {center, scale};
                d.label = label;
                d.weight = 5;
                slot.push_back(static_cast<int>(disk_scene.objects.size()));
                disk_scene.objects.push_back(d);
            };
            add_disk(foot + t * nrm, "h_p(" + interval_tag(inst.intervals[k]) + ")", emb.hp_index);
            add_disk(-(foot + t * nrm), "h_q(" + interval_tag(inst.intervals[k]) + ")", emb.hq_index);
        }
        push_rects(disk_scene);
        disk_scene.validate();

        IntersectionGraph got = scene_to_graph(disk_scene);
        bool same = got.n() == target.n();
        for (int u = 0; u < got.n() && same; ++u)
            for (int v = u + 1; v < got.n() && same; ++v)
                same = got.adjacent(u, v) == target.adjacent(u, v);
        if (same) {
            emb.scene = std::move(disk_scene);
            emb.disk_resolution = resolution;
            return emb;
        }
        resolution = std::min(resolution * 2, 1 << 14);
        radius_d *= 2.0;
    }
    throw AuditFailure("disk replacement could not reproduce the half-plane graph");
}

} // namespace geoclique
