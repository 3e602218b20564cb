#pragma once

#include "geoclique/scene.hpp"

#include <vector>

namespace geoclique {

// Exact maximum clique of axis-parallel rectangles via a candidate-point
// sweep; rectangles have the Helly property so a clique is exactly a set of
// rectangles sharing a point, and some deepest point lies on the lows grid.
std::vector<int> max_clique_rectangles(const std::vector<AxisRect>& rects);
std::vector<int> max_clique_rectangles_serial(const std::vector<AxisRect>& rects);

// All maximal cliques, each as the covering set of an arrangement cell.
std::vector<std::vector<int>> enumerate_maximal_cliques_rectangles(const std::vector<AxisRect>& rects);

// Mixed scene where the half-planes pairwise intersect: per maximal
// rectangle clique, the half-planes plus that clique induce a cobipartite
// graph; solve each by matching and keep the best. Vertices are indexed
// half-planes first (0..k-1) then rectangles (k..k+n-1).
std::vector<int> max_clique_halfplanes_rectangles(const std::vector<HalfPlane>& halfplanes,
                                                  const std::vector<AxisRect>& rects);

bool halfplanes_pairwise_intersect(const std::vector<HalfPlane>& halfplanes);

} // namespace geoclique
