#include "geoclique/mipa.hpp"

#include "geoclique/errors.hpp"
#include "geoclique/rng.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace geoclique {

void MipaInstance::validate() const {
    require(n >= 1, "MIPA ground set must be nonempty");
    require(static_cast<int>(sigma.size()) == n, "sigma must have n entries");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : sigma) {
        require(v >= 1 && v <= n, "sigma value out of range");
        require(!seen[static_cast<std::size_t>(v)], "sigma is not a bijection");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (auto [l, r] : intervals) {
        require(1 <= l && l <= r && r <= n, "interval out of range");
    }
}

bool MipaInstance::symmetric() const {
    for (int i = 1; i <= n; ++i)
        if (sigma[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i - 1)] - 1)] != i)
            return false;
    return true;
}

bool MipaInstance::intervals_disjoint() const {
    auto sorted = intervals;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 1; k < sorted.size(); ++k)
        if (sorted[k].first <= sorted[k - 1].second) return false;
    return true;
}

int MipaInstance::max_interval_length() const {
    int best = 0;
    for (auto [l, r] : intervals) best = std::max(best, r - l + 1);
    return best;
}

namespace {

// interval indices containing each point (general instances may overlap)
std::vector<std::vector<int>> point_intervals(const MipaInstance& inst) {
    std::vector<std::vector<int>> at(static_cast<std::size_t>(inst.n) + 1);
    for (std::size_t k = 0; k < inst.intervals.size(); ++k)
        for (int p = inst.intervals[k].first; p <= inst.intervals[k].second; ++p)
            at[static_cast<std::size_t>(p)].push_back(static_cast<int>(k));
    return at;
}

bool edge_preserved(const MipaInstance& inst, const std::vector<std::vector<int>>& at,
                    const MipaPlacement& p, int i) {
    for (int k : at[static_cast<std::size_t>(i)])
        if (p[static_cast<std::size_t>(k)] == 0) return false; // endpoint (i,0) covered
    int j = inst.sigma[static_cast<std::size_t>(i - 1)];
    for (int k : at[static_cast<std::size_t>(j)])
        if (p[static_cast<std::size_t>(k)] == 1) return false; // endpoint (j,1) covered
    return true;
}

} // namespace

int evaluate_placement(const MipaInstance& inst, const MipaPlacement& placement) {
    inst.validate();
    require(placement.size() == inst.intervals.size(), "placement must cover every interval");
    auto at = point_intervals(inst);
    int preserved = 0;
    for (int i = 1; i <= inst.n; ++i)
        preserved += edge_preserved(inst, at, placement, i) ? 1 : 0;
    return preserved;
}

namespace {

struct GrayState {
    const MipaInstance& inst;
    std::vector<std::vector<int>> at;
    // for each interval, the matching edges whose preserved-status can change
    // when the interval flips: edge i touches k at level 0 if i in I_k, at
    // level 1 if sigma(i) in I_k
    std::vector<std::vector<int>> touched;

    explicit GrayState(const MipaInstance& m) : inst(m), at(point_intervals(m)) {
        touched.resize(inst.intervals.size());
        for (int i = 1; i <= inst.n; ++i) {
            int j = inst.sigma[static_cast<std::size_t>(i - 1)];
            for (int k : at[static_cast<std::size_t>(i)]) touched[static_cast<std::size_t>(k)].push_back(i);
            for (int k : at[static_cast<std::size_t>(j)]) touched[static_cast<std::size_t>(k)].push_back(i);
        }
        for (auto& t : touched) {
            std::sort(t.begin(), t.end());
            t.erase(std::unique(t.begin(), t.end()), t.end());
        }
    }
};

MipaSolution gray_scan(const GrayState& gs, const MipaPlacement& start_bits,
                       std::uint64_t count, std::uint64_t base_code) {
    const MipaInstance& inst = gs.inst;
    MipaPlacement cur = start_bits;
    std::vector<char> pres(static_cast<std::size_t>(inst.n) + 1, 0);
    int value = 0;
    for (int i = 1; i <= inst.n; ++i) {
        pres[static_cast<std::size_t>(i)] = edge_preserved(inst, gs.at, cur, i) ? 1 : 0;
        value += pres[static_cast<std::size_t>(i)];
    }
    MipaSolution best{cur, value};
    for (std::uint64_t step = 1; step < count; ++step) {
        std::uint64_t code = base_code + step;
        int flip = __builtin_ctzll(code); // Gray transition bit
        cur[static_cast<std::size_t>(flip)] ^= 1;
        for (int i : gs.touched[static_cast<std::size_t>(flip)]) {
            char now = edge_preserved(inst, gs.at, cur, i) ? 1 : 0;
            value += now - pres[static_cast<std::size_t>(i)];
            pres[static_cast<std::size_t>(i)] = now;
        }
        if (value > best.value ||
            (value == best.value && std::lexicographical_compare(cur.begin(), cur.end(),
                                                                 best.placement.begin(),
                                                                 best.placement.end()))) {
            best = {cur, value};
        }
    }
    return best;
}

MipaPlacement bits_of_gray(std::uint64_t code, std::size_t h) {
    std::uint64_t gray = code ^ (code >> 1);
    MipaPlacement p(h, 0);
    for (std::size_t k = 0; k < h; ++k) p[k] = (gray >> k) & 1u;
    return p;
}

MipaSolution pick_better(const MipaSolution& a, const MipaSolution& b) {
    if (a.value != b.value) return a.value > b.value ? a : b;
    return std::lexicographical_compare(a.placement.begin(), a.placement.end(),
                                        b.placement.begin(), b.placement.end())
               ? a
               : b;
}

} // namespace

MipaSolution brute_force_mipa_serial(const MipaInstance& inst) {
    inst.validate();
    const std::size_t h = inst.intervals.size();
    guard(h <= 24, "brute_force_mipa guard: at most 24 intervals");
    GrayState gs(inst);
    if (h == 0) {
        MipaPlacement none;
        return {none, evaluate_placement(inst, none)};
    }
    return gray_scan(gs, bits_of_gray(0, h), 1ULL << h, 0);
}

MipaSolution brute_force_mipa(const MipaInstance& inst) {
    inst.validate();
    const std::size_t h = inst.intervals.size();
    guard(h <= 24, "brute_force_mipa guard: at most 24 intervals");
    if (h <= 12) return brute_force_mipa_serial(inst);
#ifdef _OPENMP
    GrayState gs(inst);
    const int blocks = 16; // split the Gray walk into prefix blocks
    const std::uint64_t total = 1ULL << h;
    const std::uint64_t span = total / blocks;
    std::vector<MipaSolution> partial(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static)
    for (int b = 0; b < blocks; ++b) {
        std::uint64_t base = span * static_cast<std::uint64_t>(b);
        partial[static_cast<std::size_t>(b)] = gray_scan(gs, bits_of_gray(base, h), span, base);
    }
    MipaSolution best = partial[0];
    for (int b = 1; b < blocks; ++b) best = pick_better(best, partial[static_cast<std::size_t>(b)]);
    return best;
#else
    return brute_force_mipa_serial(inst);
#endif
}

MipaSolution local_search_mipa(const MipaInstance& inst, std::uint64_t seed, int max_iters) {
    inst.validate();
    const std::size_t h = inst.intervals.size();
    SplitMix rng(seed);
    MipaPlacement cur(h, 0);
    for (auto& b : cur) b = rng.coin() ? 1 : 0;
    int value = evaluate_placement(inst, cur);
    for (int it = 0; it < max_iters; ++it) {
        int best_gain = 0;
        int best_flip = -1;
        for (std::size_t k = 0; k < h; ++k) {
            cur[k] ^= 1;
            int v = evaluate_placement(inst, cur);
            cur[k] ^= 1;
            if (v - value > best_gain) {
                best_gain = v - value;
                best_flip = static_cast<int>(k);
            }
        }
        if (best_flip < 0) break;
        cur[static_cast<std::size_t>(best_flip)] ^= 1;
        value += best_gain;
    }
    return {cur, value};
}

std::string mipa_to_json(const MipaInstance& inst) {
    nlohmann::ordered_json j;
    j["n"] = inst.n;
    j["sigma"] = inst.sigma;
    nlohmann::ordered_json ivs = nlohmann::ordered_json::array();
    for (auto [l, r] : inst.intervals) ivs.push_back({l, r});
    j["intervals"] = ivs;
    return j.dump(2) + "\n";
}

MipaInstance mipa_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw InvalidInput(std::string("MIPA JSON parse error: ") + e.what());
    }
    MipaInstance inst;
    inst.n = j.at("n").get<int>();
    inst.sigma = j.at("sigma").get<std::vector<int>>();
    for (const auto& iv : j.at("intervals")) {
        require(iv.is_array() && iv.size() == 2, "interval must be [l, r]");
        inst.intervals.emplace_back(iv.at(0).get<int>(), iv.at(1).get<int>());
    }
    inst.validate();
    return inst;
}

} // namespace geoclique
