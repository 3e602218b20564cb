#pragma once

#include "geoclique/body.hpp"
#include "geoclique/graph.hpp"
#include "geoclique/scene.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace geoclique {

struct HomothetScene {
    ConvexBody body = body_square();
    std::vector<Placement> placements;

    IntersectionGraph graph() const;
};

enum class K22Status {
    DiagonalTrue,      // the two non-edges join opposite corners (always, per theory)
    DiagonalFalse,     // would contradict the structure lemma: report loudly
    NotK22,            // induced subgraph is not exactly two disjoint non-edges
    NotConvexPosition, // centers not in strict convex position
};

K22Status k22_diagonal_property(const HomothetScene& scene, const std::array<int, 4>& four);

struct NeighborhoodBound {
    int vertex = -1;
    std::optional<int> independence_number; // empty when the size guard tripped
    bool within_six = false;
};

// Vertex of minimum scale (ties: smallest index) and the exact independence
// number of its neighborhood; guarded at 25 neighbors.
NeighborhoodBound smallest_homothet_neighborhood_bound(const HomothetScene& scene);

using InnerSolver = std::function<std::vector<int>(const IntersectionGraph&)>;

// Peel by smallest scale: solve the best clique through the current smallest
// homothet, drop it, iterate. Exact when the inner solver is exact.
std::vector<int> peel_and_solve(const HomothetScene& scene, const InnerSolver& inner);
std::vector<int> peel_and_solve(const HomothetScene& scene);

struct EptasPreconditionReport {
    bool odd_cycle_pair_checked = false;
    bool no_two_mutually_induced_odd_cycles_in_complement = false;
    std::string odd_cycle_note;

    bool density_checked = false;
    int peel_vertex = -1;
    int neighborhood_size = 0;
    int neighborhood_clique = 0;
    bool density_at_least_beta = false; // omega(G_v) >= |G_v| / 36

    std::string vc_dimension_note = "not computed - out of scope";
};

EptasPreconditionReport check_eptas_preconditions(const HomothetScene& scene);

// Interface-compatible entry point: epsilon is accepted for compatibility
// with approximation-scheme callers and ignored; the solver is exact.
std::vector<int> max_clique_homothets(const HomothetScene& scene, double epsilon = 0.0);

} // namespace geoclique
