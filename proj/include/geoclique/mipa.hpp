#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace geoclique {

// Max Interval Permutation Avoidance. sigma is 1-indexed: the matching joins
// (i,0) to (sigma[i-1],1). A placement sends each interval to level 0 or 1;
// the objective counts matching edges with no endpoint on a placed interval.
struct MipaInstance {
    int n = 0;
    std::vector<int> sigma;                    // 1-indexed values
    std::vector<std::pair<int, int>> intervals; // inclusive [l, r], 1 <= l <= r <= n

    void validate() const;
    bool symmetric() const;                      // sigma is an involution
    bool intervals_disjoint() const;
    int max_interval_length() const;             // number of integer points
};

using MipaPlacement = std::vector<std::uint8_t>; // one bit per interval

int evaluate_placement(const MipaInstance& inst, const MipaPlacement& placement);

struct MipaSolution {
    MipaPlacement placement;
    int value = 0;
};

// Exhaustive optimum, lexicographically smallest optimal placement.
// Guarded at 24 intervals; enumeration walks a Gray code so each step is an
// O(affected edges) update.
MipaSolution brute_force_mipa(const MipaInstance& inst);
MipaSolution brute_force_mipa_serial(const MipaInstance& inst);

// Steepest-ascent hill climbing over single-interval flips.
MipaSolution local_search_mipa(const MipaInstance& inst, std::uint64_t seed, int max_iters);

std::string mipa_to_json(const MipaInstance& inst);
MipaInstance mipa_from_json(const std::string& text);

} // namespace geoclique
