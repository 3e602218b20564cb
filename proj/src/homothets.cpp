#include "geoclique/homothets.hpp"

#include "geoclique/clique.hpp"
#include "geoclique/errors.hpp"
#include "geoclique/polygon.hpp"

#include <algorithm>

namespace geoclique {

IntersectionGraph HomothetScene::graph() const {
    const int n = static_cast<int>(placements.size());
    IntersectionGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (homothets_intersect(body, placements[static_cast<std::size_t>(i)],
                                    placements[static_cast<std::size_t>(j)]))
                g.add_edge(i, j);
    return g;
}

K22Status k22_diagonal_property(const HomothetScene& scene, const std::array<int, 4>& four) {
    std::vector<Vec2> centers;
    for (int idx : four) {
        require(idx >= 0 && idx < static_cast<int>(scene.placements.size()), "index out of range");
        centers.push_back(scene.placements[static_cast<std::size_t>(idx)].center);
    }
    // strict convex position: no three collinear and all four on the hull
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c)
                if (orient(centers[static_cast<std::size_t>(a)], centers[static_cast<std::size_t>(b)],
                           centers[static_cast<std::size_t>(c)]) == 0)
                    return K22Status::NotConvexPosition;
    Poly hull = convex_hull(centers);
    if (hull.size() != 4) return K22Status::NotConvexPosition;

    std::vector<std::pair<int, int>> nonedges;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (!homothets_intersect(scene.body, scene.placements[static_cast<std::size_t>(four[static_cast<std::size_t>(a)])],
                                     scene.placements[static_cast<std::size_t>(four[static_cast<std::size_t>(b)])]))
                nonedges.emplace_back(a, b);
    if (nonedges.size() != 2) return K22Status::NotK22;
    auto [e1, e2] = std::make_pair(nonedges[0], nonedges[1]);
    if (e1.first == e2.first || e1.first == e2.second || e1.second == e2.first ||
        e1.second == e2.second)
        return K22Status::NotK22; // complement must be a perfect matching

    // hull position of each center
    std::array<int, 4> hull_pos{};
    for (int a = 0; a < 4; ++a) {
        auto it = std::find(hull.begin(), hull.end(), centers[static_cast<std::size_t>(a)]);
        hull_pos[static_cast<std::size_t>(a)] = static_cast<int>(it - hull.begin());
    }
    auto is_diagonal = [&](const std::pair<int, int>& e) {
        int d = std::abs(hull_pos[static_cast<std::size_t>(e.first)] -
                         hull_pos[static_cast<std::size_t>(e.second)]);
        return d == 2;
    };
    return is_diagonal(e1) && is_diagonal(e2) ? K22Status::DiagonalTrue : K22Status::DiagonalFalse;
}

namespace {

int smallest_scale_index(const std::vector<Placement>& ps, const std::vector<int>& alive) {
    int best = -1;
    for (int v : alive) {
        if (best == -1 || ps[static_cast<std::size_t>(v)].scale < ps[static_cast<std::size_t>(best)].scale)
            best = v;
    }
    return best;
}

} // namespace

NeighborhoodBound smallest_homothet_neighborhood_bound(const HomothetScene& scene) {
    require(!scene.placements.empty(), "scene must be nonempty");
    std::vector<int> all(scene.placements.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    NeighborhoodBound out;
    out.vertex = smallest_scale_index(scene.placements, all);
    IntersectionGraph g = scene.graph();
    auto nbrs = g.neighbors(out.vertex);
    if (nbrs.size() > 25) return out; // bound unverified
    // independence number = clique number of the complement
    IntersectionGraph sub = g.induced(nbrs).complement();
    out.independence_number = static_cast<int>(exact_max_clique(sub).size());
    out.within_six = *out.independence_number <= 6;
    return out;
}

std::vector<int> peel_and_solve(const HomothetScene& scene, const InnerSolver& inner) {
    const int n = static_cast<int>(scene.placements.size());
    if (n == 0) return {};
    IntersectionGraph g = scene.graph();
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<int> best;
    for (int step = 0; step < n; ++step) {
        std::vector<int> live;
        for (int v = 0; v < n; ++v)
            if (alive[static_cast<std::size_t>(v)]) live.push_back(v);
        int v = smallest_scale_index(scene.placements, live);
        std::vector<int> nbrs;
        for (int u : live)
            if (u != v && g.adjacent(u, v)) nbrs.push_back(u);
        auto local = inner(g.induced(nbrs));
        std::vector<int> cand{v};
        for (int idx : local) cand.push_back(nbrs[static_cast<std::size_t>(idx)]);
        std::sort(cand.begin(), cand.end());
        audit(g.is_clique(cand), "peel step produced a non-clique");
        if (cand.size() > best.size() || (cand.size() == best.size() && cand < best)) best = cand;
        alive[static_cast<std::size_t>(v)] = 0;
    }
    return best;
}

std::vector<int> peel_and_solve(const HomothetScene& scene) {
    return peel_and_solve(scene, [](const IntersectionGraph& sub) { return exact_max_clique(sub); });
}

EptasPreconditionReport check_eptas_preconditions(const HomothetScene& scene) {
    EptasPreconditionReport rep;
    IntersectionGraph g = scene.graph();
    if (g.n() <= 18) {
        rep.odd_cycle_pair_checked = true;
        auto pair = find_two_mutually_induced_odd_cycles(g.complement());
        rep.no_two_mutually_induced_odd_cycles_in_complement = !pair.has_value();
        rep.odd_cycle_note = pair.has_value() ? "found a mutually induced odd cycle pair in the complement"
                                              : "none found";
    } else {
        rep.odd_cycle_note = "skipped: graph larger than the exhaustive guard";
    }
    if (!scene.placements.empty()) {
        auto nb = smallest_homothet_neighborhood_bound(scene);
        rep.peel_vertex = nb.vertex;
        auto nbrs = g.neighbors(nb.vertex);
        rep.neighborhood_size = static_cast<int>(nbrs.size());
        if (nbrs.size() <= 25) {
            rep.density_checked = true;
            rep.neighborhood_clique = static_cast<int>(exact_max_clique(g.induced(nbrs)).size());
            // omega(G_v) >= n/36 with n the neighborhood size
            rep.density_at_least_beta = 36 * rep.neighborhood_clique >= rep.neighborhood_size;
        }
    }
    return rep;
}

std::vector<int> max_clique_homothets(const HomothetScene& scene, double epsilon) {
    (void)epsilon; // accepted for interface compatibility; the solver is exact
    return peel_and_solve(scene);
}

} // namespace geoclique
