#include "geoclique/translates.hpp"

#include "geoclique/clique.hpp"
#include "geoclique/errors.hpp"
#include "geoclique/lens.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace geoclique {

namespace {

struct PairCand {
    Rat d;
    int i, j;
};

// candidate clique through the guessed farthest pair (i, j)
std::vector<int> solve_pair(const IntersectionGraph& g, const std::vector<Vec2>& centers,
                            const std::vector<std::vector<Rat>>& dist, const PairCand& pc) {
    const int n = static_cast<int>(centers.size());
    std::vector<int> below, above;
    for (int k = 0; k < n; ++k) {
        if (dist[static_cast<std::size_t>(k)][static_cast<std::size_t>(pc.i)] > pc.d) continue;
        if (dist[static_cast<std::size_t>(k)][static_cast<std::size_t>(pc.j)] > pc.d) continue;
        if (pc.d != 0 && point_below_split(centers[static_cast<std::size_t>(pc.i)],
                                           centers[static_cast<std::size_t>(pc.j)],
                                           centers[static_cast<std::size_t>(k)]))
            below.push_back(k);
        else
            above.push_back(k);
    }
    return max_clique_cobipartite(g, {below, above});
}

bool better(const std::vector<int>& cand, const std::vector<int>& cur) {
    if (cand.size() != cur.size()) return cand.size() > cur.size();
    return cand < cur;
}

std::vector<int> geometric_impl(const ConvexBody& body, const std::vector<Vec2>& centers,
                                bool parallel) {
    const int n = static_cast<int>(centers.size());
    if (n == 0) return {};
    if (n == 1) return {0};

    std::vector<std::vector<Rat>> dist(static_cast<std::size_t>(n),
                                       std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat d = minkowski_norm(body, centers[static_cast<std::size_t>(i)] -
                                             centers[static_cast<std::size_t>(j)]);
            dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d;
            dist[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = d;
        }

    IntersectionGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] <= 2) g.add_edge(i, j);

    std::vector<PairCand> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j))
                pairs.push_back({dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], i, j});
    // non-increasing distance; ties by vertex ids for reproducibility
    std::sort(pairs.begin(), pairs.end(), [](const PairCand& a, const PairCand& b) {
        if (a.d != b.d) return a.d > b.d;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });

    std::vector<int> best{0}; // edgeless scenes: any single object
    if (parallel) {
#ifdef _OPENMP
        const int np = static_cast<int>(pairs.size());
        std::vector<std::vector<int>> results(static_cast<std::size_t>(np));
#pragma omp parallel for schedule(dynamic, 2)
        for (int p = 0; p < np; ++p)
            results[static_cast<std::size_t>(p)] = solve_pair(g, centers, dist, pairs[static_cast<std::size_t>(p)]);
        for (const auto& r : results)
            if (better(r, best)) best = r;
        return best;
#endif
    }
    for (const auto& pc : pairs) {
        if (static_cast<int>(best.size()) >= n) break; // cannot be beaten
        auto cand = solve_pair(g, centers, dist, pc);
        if (better(cand, best)) best = cand;
    }
    return best;
}

} // namespace

IntersectionGraph translate_scene_graph(const ConvexBody& body, const std::vector<Vec2>& centers) {
    const int n = static_cast<int>(centers.size());
    IntersectionGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (minkowski_norm(body, centers[static_cast<std::size_t>(i)] -
                                         centers[static_cast<std::size_t>(j)]) <= 2)
                g.add_edge(i, j);
    return g;
}

std::vector<int> max_clique_translates_geometric(const ConvexBody& body,
                                                 const std::vector<Vec2>& centers) {
    return geometric_impl(body, centers, true);
}

std::vector<int> max_clique_translates_geometric_serial(const ConvexBody& body,
                                                        const std::vector<Vec2>& centers) {
    return geometric_impl(body, centers, false);
}

EdgeOrdering ordering_by_nonincreasing_length(const ConvexBody& body,
                                              const std::vector<Vec2>& centers,
                                              const IntersectionGraph& g) {
    struct Item { Rat d; Edge e; };
    std::vector<Item> items;
    for (auto e : g.edges()) {
        items.push_back({minkowski_norm(body, centers[static_cast<std::size_t>(e.first)] -
                                                  centers[static_cast<std::size_t>(e.second)]),
                         e});
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (a.d != b.d) return a.d > b.d;
        return a.e < b.e;
    });
    EdgeOrdering ord;
    for (auto& it : items) ord.edges.push_back(it.e);
    return ord;
}

RobustCliqueResult robust_max_clique_translates(const IntersectionGraph& g) {
    RobustCliqueResult res;
    auto cneeo = compute_cneeo(g);
    if (!cneeo.found) {
        res.in_class = false;
        res.certificate = cneeo.stuck_edges;
        return res;
    }
    res.in_class = true;
    res.clique = max_clique_from_cneeo(g, cneeo.ordering);
    return res;
}

} // namespace geoclique
