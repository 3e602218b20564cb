#pragma once

#include "geoclique/mipa.hpp"
#include "geoclique/scene.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace geoclique {

enum class EmbedMode { HalfPlane, UnitDisk };

struct EmbedOptions {
    Rat curve_range = Rat(1);        // x sampled on [-(1+range), -1]
    std::uint64_t wiggle_seed = 1;   // deterministic wiggle retry stream
    int disk_resolution = 0;         // 0 = choose automatically (UnitDisk mode)
    bool audit_all_pair_slopes = true; // distinct slopes for every i <= j (O(n^2))
};

// Output of the clique embedding: a scene of weight-5 half-plane pairs (or
// large polygonal-disk homothets) plus one axis-parallel rectangle per
// matching edge. The scene's maximum clique equals 5 * |intervals| + the
// MIPA optimum.
struct GeometricEmbedding {
    Scene scene;
    std::vector<Vec2> p_chain; // p_0 .. p_{n+1}
    std::vector<Vec2> q_chain; // q_i = -p_i
    MipaInstance instance;
    EmbedMode mode = EmbedMode::HalfPlane;
    int disk_resolution = 0;   // half vertex count actually used (UnitDisk)

    // scene object index of h_p(I) / h_q(I) per interval, and of R(i,j)
    std::vector<int> hp_index, hq_index;
    std::vector<int> rect_index; // aligned with level-0 matching edges (i asc)
};

GeometricEmbedding embed_mipa_as_clique(const MipaInstance& inst, EmbedMode mode,
                                        const EmbedOptions& opts = {});

} // namespace geoclique
