#pragma once

#include "geoclique/clique.hpp"
#include "geoclique/graph.hpp"

#include <utility>
#include <vector>

namespace geoclique {

using Edge = std::pair<int, int>; // normalized u < v

// A permutation of the edge set. For e_k the relevant neighborhood is the
// set of common neighbors of its endpoints in the suffix graph; the ordering
// is a CNEEO when every such set induces a cobipartite subgraph of g.
struct EdgeOrdering {
    std::vector<Edge> edges;
};

struct CneeoResult {
    bool found = false;
    EdgeOrdering ordering;        // valid when found
    std::vector<Edge> stuck_edges; // non-empty certificate when not found
};

// Greedy construction: repeatedly emit the lexicographically smallest edge
// whose suffix common neighborhood is cobipartite in g. Because induced
// subgraphs of cobipartite graphs stay cobipartite, an edge once eligible
// stays eligible, so the greedy finds an ordering whenever one exists and
// the stuck set certifies that none does.
CneeoResult compute_cneeo(const IntersectionGraph& g);

bool validate_cneeo(const IntersectionGraph& g, const EdgeOrdering& ordering);

// Maximum clique given a valid CNEEO: for each e_k = uv take the cobipartite
// suffix neighborhood, solve it by matching, add u and v; best over k (and
// over single vertices).
std::vector<int> max_clique_from_cneeo(const IntersectionGraph& g, const EdgeOrdering& ordering);

struct RobustCliqueResult {
    bool in_class = false;          // false: certified not a translate graph
    std::vector<int> clique;        // valid when in_class
    std::vector<Edge> certificate;  // stuck edges otherwise
};

// Independent check used by the tests: decides CNEEO existence by memoized
// search over remaining-edge subsets. Guarded at m <= 20.
bool cneeo_exists_exhaustive(const IntersectionGraph& g);

// Common neighbors of u and v restricted to a given remaining edge set.
std::vector<int> suffix_common_neighbors(const IntersectionGraph& g,
                                         const std::vector<Edge>& remaining, const Edge& e);

} // namespace geoclique
