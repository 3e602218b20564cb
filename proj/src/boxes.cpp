#include "geoclique/boxes.hpp"

#include "geoclique/clique.hpp"
#include "geoclique/errors.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace geoclique {

namespace {

struct Grid {
    std::vector<Rat> xs, ys;
};

Grid candidate_grid(const std::vector<AxisRect>& rects) {
    std::set<Rat> xs, ys;
    for (const auto& r : rects) {
        xs.insert(r.x_lo);
        ys.insert(r.y_lo);
        // the corner coordinates keep the sweep valid for touching rectangles
        xs.insert(r.x_hi);
        ys.insert(r.y_hi);
    }
    return {{xs.begin(), xs.end()}, {ys.begin(), ys.end()}};
}

std::vector<int> covering_set(const std::vector<AxisRect>& rects, const Vec2& p) {
    std::vector<int> cover;
    for (std::size_t i = 0; i < rects.size(); ++i)
        if (rects[i].contains(p)) cover.push_back(static_cast<int>(i));
    return cover;
}

bool better(const std::vector<int>& cand, const std::vector<int>& cur) {
    if (cand.size() != cur.size()) return cand.size() > cur.size();
    return cand < cur;
}

std::vector<int> rect_sweep(const std::vector<AxisRect>& rects, bool parallel) {
    if (rects.empty()) return {};
    Grid grid = candidate_grid(rects);
    const int nx = static_cast<int>(grid.xs.size());
    const int ny = static_cast<int>(grid.ys.size());
    std::vector<int> best;
    if (parallel) {
#ifdef _OPENMP
        std::vector<std::vector<int>> row_best(static_cast<std::size_t>(nx));
#pragma omp parallel for schedule(static)
        for (int ix = 0; ix < nx; ++ix) {
            std::vector<int> local;
            for (int iy = 0; iy < ny; ++iy) {
                auto cover = covering_set(rects, {grid.xs[static_cast<std::size_t>(ix)],
                                                  grid.ys[static_cast<std::size_t>(iy)]});
                if (better(cover, local)) local = cover;
            }
            row_best[static_cast<std::size_t>(ix)] = std::move(local);
        }
        for (const auto& r : row_best)
            if (better(r, best)) best = r;
        return best;
#endif
    }
    for (int ix = 0; ix < nx; ++ix)
        for (int iy = 0; iy < ny; ++iy) {
            auto cover = covering_set(rects, {grid.xs[static_cast<std::size_t>(ix)],
                                              grid.ys[static_cast<std::size_t>(iy)]});
            if (better(cover, best)) best = cover;
        }
    return best;
}

} // namespace

std::vector<int> max_clique_rectangles(const std::vector<AxisRect>& rects) {
    return rect_sweep(rects, true);
}

std::vector<int> max_clique_rectangles_serial(const std::vector<AxisRect>& rects) {
    return rect_sweep(rects, false);
}

std::vector<std::vector<int>> enumerate_maximal_cliques_rectangles(const std::vector<AxisRect>& rects) {
    std::vector<std::vector<int>> out;
    if (rects.empty()) return out;
    Grid grid = candidate_grid(rects);
    std::set<std::vector<int>> seen;
    const int n = static_cast<int>(rects.size());
    for (const auto& x : grid.xs) {
        for (const auto& y : grid.ys) {
            auto cover = covering_set(rects, {x, y});
            if (cover.empty()) continue;
            // maximal iff no rectangle outside intersects all members; with the
            // Helly property that means the common box admits no further member
            Rat cx_lo = rects[static_cast<std::size_t>(cover[0])].x_lo;
            Rat cx_hi = rects[static_cast<std::size_t>(cover[0])].x_hi;
            Rat cy_lo = rects[static_cast<std::size_t>(cover[0])].y_lo;
            Rat cy_hi = rects[static_cast<std::size_t>(cover[0])].y_hi;
            for (int idx : cover) {
                const auto& r = rects[static_cast<std::size_t>(idx)];
                cx_lo = std::max(cx_lo, r.x_lo);
                cx_hi = std::min(cx_hi, r.x_hi);
                cy_lo = std::max(cy_lo, r.y_lo);
                cy_hi = std::min(cy_hi, r.y_hi);
            }
            bool maximal = true;
            std::size_t member = 0;
            for (int i = 0; i < n && maximal; ++i) {
                if (member < cover.size() && cover[member] == i) {
                    ++member;
                    continue;
                }
                const auto& r = rects[static_cast<std::size_t>(i)];
                if (r.x_lo <= cx_hi && cx_lo <= r.x_hi && r.y_lo <= cy_hi && cy_lo <= r.y_hi)
                    maximal = false;
            }
            if (maximal) seen.insert(cover);
        }
    }
    out.assign(seen.begin(), seen.end());
    return out;
}

bool halfplanes_pairwise_intersect(const std::vector<HalfPlane>& halfplanes) {
    for (std::size_t i = 0; i < halfplanes.size(); ++i)
        for (std::size_t j = i + 1; j < halfplanes.size(); ++j)
            if (!halfplanes_intersect(halfplanes[i], halfplanes[j])) return false;
    return true;
}

std::vector<int> max_clique_halfplanes_rectangles(const std::vector<HalfPlane>& halfplanes,
                                                  const std::vector<AxisRect>& rects) {
    require(halfplanes_pairwise_intersect(halfplanes),
            "half-planes must pairwise intersect; with disjoint half-planes the mixed "
            "clique problem is as hard as the general case and this solver does not apply");
    const int k = static_cast<int>(halfplanes.size());
    const int n = static_cast<int>(rects.size());

    IntersectionGraph g(k + n);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
            if (halfplane_rect_intersect(halfplanes[static_cast<std::size_t>(i)],
                                         rects[static_cast<std::size_t>(j)]))
                g.add_edge(i, k + j);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rects_intersect(rects[static_cast<std::size_t>(i)], rects[static_cast<std::size_t>(j)]))
                g.add_edge(k + i, k + j);

    auto maximal = enumerate_maximal_cliques_rectangles(rects);
    maximal.push_back({}); // allow half-planes-only cliques

    std::vector<int> best;
    std::vector<int> hp_side(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) hp_side[static_cast<std::size_t>(i)] = i;
    // every clique's rectangle part is contained in some maximal rectangle
    // clique, so scanning those candidates is exhaustive; solves are independent
    const int cands = static_cast<int>(maximal.size());
    std::vector<std::vector<int>> results(static_cast<std::size_t>(cands));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int c = 0; c < cands; ++c) {
        std::vector<int> rect_side;
        for (int r : maximal[static_cast<std::size_t>(c)]) rect_side.push_back(k + r);
        results[static_cast<std::size_t>(c)] = max_clique_cobipartite(g, {hp_side, rect_side});
    }
    for (const auto& r : results)
        if (better(r, best)) best = r;
    return best;
}

} // namespace geoclique
