#include "geoclique/cneeo.hpp"

#include "geoclique/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace geoclique {

namespace {

std::vector<int> common_in(const IntersectionGraph& g, const std::vector<std::set<int>>& inc,
                           const Edge& e) {
    // vertices adjacent to both endpoints through *remaining* edges
    std::vector<int> out;
    const auto& su = inc[static_cast<std::size_t>(e.first)];
    const auto& sv = inc[static_cast<std::size_t>(e.second)];
    std::set_intersection(su.begin(), su.end(), sv.begin(), sv.end(), std::back_inserter(out));
    out.erase(std::remove_if(out.begin(), out.end(),
                             [&](int w) { return w == e.first || w == e.second; }),
              out.end());
    (void)g;
    return out;
}

} // namespace

std::vector<int> suffix_common_neighbors(const IntersectionGraph& g,
                                         const std::vector<Edge>& remaining, const Edge& e) {
    std::vector<std::set<int>> inc(static_cast<std::size_t>(g.n()));
    for (const auto& [u, v] : remaining) {
        inc[static_cast<std::size_t>(u)].insert(v);
        inc[static_cast<std::size_t>(v)].insert(u);
    }
    return common_in(g, inc, e);
}

CneeoResult compute_cneeo(const IntersectionGraph& g) {
    std::vector<Edge> remaining = g.edges(); // already sorted lexicographically
    std::vector<std::set<int>> inc(static_cast<std::size_t>(g.n()));
    for (const auto& [u, v] : remaining) {
        inc[static_cast<std::size_t>(u)].insert(v);
        inc[static_cast<std::size_t>(v)].insert(u);
    }
    CneeoResult res;
    while (!remaining.empty()) {
        bool advanced = false;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            Edge e = remaining[i];
            auto common = common_in(g, inc, e);
            if (is_cobipartite(g, common)) {
                res.ordering.edges.push_back(e);
                remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(i));
                inc[static_cast<std::size_t>(e.first)].erase(e.second);
                inc[static_cast<std::size_t>(e.second)].erase(e.first);
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            res.found = false;
            res.stuck_edges = remaining;
            return res;
        }
    }
    res.found = true;
    return res;
}

bool validate_cneeo(const IntersectionGraph& g, const EdgeOrdering& ordering) {
    auto all = g.edges();
    std::set<Edge> want(all.begin(), all.end());
    std::set<Edge> got;
    for (auto e : ordering.edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
        require(want.count(e) == 1, "ordering contains a non-edge");
        require(got.insert(e).second, "ordering repeats an edge");
    }
    require(got.size() == want.size(), "ordering must be a permutation of the edge set");

    std::vector<std::set<int>> inc(static_cast<std::size_t>(g.n()));
    for (const auto& [u, v] : all) {
        inc[static_cast<std::size_t>(u)].insert(v);
        inc[static_cast<std::size_t>(v)].insert(u);
    }
    for (const auto& e : ordering.edges) {
        auto common = common_in(g, inc, e);
        if (!is_cobipartite(g, common)) return false;
        inc[static_cast<std::size_t>(e.first)].erase(e.second);
        inc[static_cast<std::size_t>(e.second)].erase(e.first);
    }
    return true;
}

std::vector<int> max_clique_from_cneeo(const IntersectionGraph& g, const EdgeOrdering& ordering) {
    require(validate_cneeo(g, ordering), "not a valid CNEEO for this graph");
    std::vector<int> best;
    if (g.n() > 0) best = {0}; // best single vertex under lexicographic tie-break

    std::vector<std::set<int>> inc(static_cast<std::size_t>(g.n()));
    for (const auto& [u, v] : g.edges()) {
        inc[static_cast<std::size_t>(u)].insert(v);
        inc[static_cast<std::size_t>(v)].insert(u);
    }
    for (const auto& e : ordering.edges) {
        auto common = common_in(g, inc, e);
        auto part = is_cobipartite(g, common);
        audit(part.has_value(), "CNEEO neighborhood not cobipartite despite validation");
        auto clique = max_clique_cobipartite(g, *part);
        clique.push_back(e.first);
        clique.push_back(e.second);
        std::sort(clique.begin(), clique.end());
        audit(g.is_clique(clique), "candidate from CNEEO step is not a clique");
        if (clique.size() > best.size() || (clique.size() == best.size() && clique < best))
            best = clique;
        inc[static_cast<std::size_t>(e.first)].erase(e.second);
        inc[static_cast<std::size_t>(e.second)].erase(e.first);
    }
    return best;
}

bool cneeo_exists_exhaustive(const IntersectionGraph& g) {
    auto all = g.edges();
    const int m = static_cast<int>(all.size());
    guard(m <= 20, "cneeo_exists_exhaustive guard: m <= 20");
    std::map<std::uint32_t, bool> memo;
    auto rec = [&](auto&& self, std::uint32_t mask) -> bool {
        if (mask == 0) return true;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::vector<Edge> rem;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) rem.push_back(all[static_cast<std::size_t>(i)]);
        bool ok = false;
        for (int i = 0; i < m && !ok; ++i) {
            if (!(mask & (1u << i))) continue;
            auto common = suffix_common_neighbors(g, rem, all[static_cast<std::size_t>(i)]);
            if (is_cobipartite(g, common)) ok = self(self, mask & ~(1u << i));
        }
        memo[mask] = ok;
        return ok;
    };
    return rec(rec, m == 32 ? 0xffffffffu : ((1u << m) - 1u));
}

} // namespace geoclique
