#pragma once

#include "geoclique/graph.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace geoclique {

// Exhaustive oracle, guarded at n <= 30. Returns the lexicographically
// smallest maximum clique (sorted vertex ids).
std::vector<int> brute_force_max_clique(const IntersectionGraph& g);

struct CliqueResult {
    std::vector<int> clique;
    bool optimal = true;
};

// Branch and bound with greedy-coloring upper bounds; deterministic.
std::vector<int> exact_max_clique(const IntersectionGraph& g);

// Same search with a wall-clock budget; may return a non-optimal lower bound.
CliqueResult exact_max_clique_budgeted(const IntersectionGraph& g, long long budget_ms);

// OpenMP lane: root branches explored in parallel to establish the clique
// number, then a serial pass extracts the canonical witness. Result is
// independent of thread count.
std::vector<int> exact_max_clique_parallel(const IntersectionGraph& g);

std::vector<int> greedy_clique(const IntersectionGraph& g);

using CliquePartition = std::pair<std::vector<int>, std::vector<int>>;

// True (with a two-clique cover of the subset) iff the complement of the
// induced subgraph is bipartite.
std::optional<CliquePartition> is_cobipartite(const IntersectionGraph& g,
                                              const std::vector<int>& subset);

// Maximum clique of a cobipartite induced subgraph: augmenting-path maximum
// matching on the bipartite complement, then a Koenig vertex-cover extraction.
std::vector<int> max_clique_cobipartite(const IntersectionGraph& g,
                                        const CliquePartition& partition);

// Size of the maximum matching of the bipartite complement between the two
// sides; exposed so Koenig's identity |clique| = |S| - matching is testable.
int cobipartite_complement_matching_size(const IntersectionGraph& g,
                                         const CliquePartition& partition);

// Two vertex-disjoint chordless odd cycles with no edges between them, or
// nothing. Exhaustive over vertex subsets; guarded at n <= 18.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
find_two_mutually_induced_odd_cycles(const IntersectionGraph& g);

} // namespace geoclique
