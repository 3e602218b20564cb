#pragma once

#include "geoclique/body.hpp"
#include "geoclique/cneeo.hpp"
#include "geoclique/graph.hpp"

#include <vector>

namespace geoclique {

// Maximum clique among unit-scale translates with the representation given.
// Guesses the farthest pair of a maximum clique, keeps centers reachable
// within that distance from both, splits along the center line into two
// cliques and solves the cobipartite rest by matching.
std::vector<int> max_clique_translates_geometric(const ConvexBody& body,
                                                 const std::vector<Vec2>& centers);
// Serial reference for the parallel per-pair loop above.
std::vector<int> max_clique_translates_geometric_serial(const ConvexBody& body,
                                                        const std::vector<Vec2>& centers);

// Representation-free solver: construct a CNEEO and solve, or certify that
// the graph is not a translate intersection graph.
RobustCliqueResult robust_max_clique_translates(const IntersectionGraph& g);

// Edge ordering by non-increasing center distance (the ordering that is
// always a CNEEO on translate scenes).
EdgeOrdering ordering_by_nonincreasing_length(const ConvexBody& body,
                                              const std::vector<Vec2>& centers,
                                              const IntersectionGraph& g);

IntersectionGraph translate_scene_graph(const ConvexBody& body, const std::vector<Vec2>& centers);

} // namespace geoclique
