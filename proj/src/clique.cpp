#include "geoclique/clique.hpp"

#include "geoclique/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace geoclique {

namespace {

// fixed-size bitset rows for the solvers
struct BitGraph {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> rows; // n * words
    std::vector<int> order;          // solver order -> original id

    const std::uint64_t* row(int v) const { return rows.data() + static_cast<std::size_t>(v) * words; }
    std::uint64_t* row(int v) { return rows.data() + static_cast<std::size_t>(v) * words; }
    bool get(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1u; }
    void set(int u, int v) {
        row(u)[v >> 6] |= 1ULL << (v & 63);
        row(v)[u >> 6] |= 1ULL << (u & 63);
    }
};

BitGraph reorder_by_degree(const IntersectionGraph& g) {
    const int n = g.n();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        if (da != db) return da > db;
        return a < b;
    });
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    BitGraph bg;
    bg.n = n;
    bg.words = (n + 63) / 64;
    bg.rows.assign(static_cast<std::size_t>(n) * bg.words, 0);
    bg.order = order;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) bg.set(pos[u], pos[v]);
    return bg;
}

struct Mask {
    std::vector<std::uint64_t> w;
    explicit Mask(int words = 0) : w(static_cast<std::size_t>(words), 0) {}
    bool empty() const {
        for (auto x : w) if (x) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
};

struct BnB {
    const BitGraph& bg;
    std::vector<int> best;      // in solver ids
    int best_size = 0;
    long long node_budget_check = 0;
    std::chrono::steady_clock::time_point deadline{};
    bool use_deadline = false;
    bool aborted = false;
    std::atomic<int>* shared_best = nullptr; // size-only phase

    explicit BnB(const BitGraph& b) : bg(b) {}

    bool deadline_hit() {
        if (!use_deadline) return false;
        if (++node_budget_check % 1024 != 0) return false;
        if (std::chrono::steady_clock::now() >= deadline) aborted = true;
        return aborted;
    }

    int current_bound() const {
        if (shared_best) {
            int s = shared_best->load(std::memory_order_relaxed);
            return s > best_size ? s : best_size;
        }
        return best_size;
    }

    void record(const std::vector<int>& r) {
        if (static_cast<int>(r.size()) > best_size) {
            best_size = static_cast<int>(r.size());
            best = r;
            if (shared_best) {
                int cur = shared_best->load(std::memory_order_relaxed);
                while (cur < best_size &&
                       !shared_best->compare_exchange_weak(cur, best_size, std::memory_order_relaxed)) {
                }
            }
        }
    }

    // greedy coloring of candidates, emitted in non-decreasing color order
    void color_sort(const Mask& cand, std::vector<int>& out, std::vector<int>& colors) {
        out.clear();
        colors.clear();
        Mask uncolored = cand;
        int color = 0;
        while (!uncolored.empty()) {
            ++color;
            Mask avail = uncolored;
            for (int wi = 0; wi < static_cast<int>(avail.w.size()); ++wi) {
                while (avail.w[wi]) {
                    int v = wi * 64 + __builtin_ctzll(avail.w[wi]);
                    avail.reset(v);
                    uncolored.reset(v);
                    out.push_back(v);
                    colors.push_back(color);
                    const std::uint64_t* rv = bg.row(v);
                    for (int wj = 0; wj < static_cast<int>(avail.w.size()); ++wj)
                        avail.w[wj] &= ~rv[wj];
                }
            }
        }
    }

    void expand(std::vector<int>& r, const Mask& cand) {
        if (aborted) return;
        if (cand.empty()) {
            record(r);
            return;
        }
        if (deadline_hit()) return;
        std::vector<int> verts, colors;
        color_sort(cand, verts, colors);
        Mask p = cand;
        for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(r.size()) + colors[i] <= current_bound()) return;
            int v = verts[i];
            r.push_back(v);
            Mask next(static_cast<int>(p.w.size()));
            const std::uint64_t* rv = bg.row(v);
            for (std::size_t wi = 0; wi < p.w.size(); ++wi) next.w[wi] = p.w[wi] & rv[wi];
            expand(r, next);
            r.pop_back();
            p.reset(v);
            if (aborted) return;
        }
    }
};

std::vector<int> to_original(const BitGraph& bg, const std::vector<int>& solver_ids) {
    std::vector<int> out;
    out.reserve(solver_ids.size());
    for (int v : solver_ids) out.push_back(bg.order[v]);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<int> brute_force_max_clique(const IntersectionGraph& g) {
    guard(g.n() <= 30, "brute_force_max_clique guard: n <= 30");
    const int n = g.n();
    std::vector<int> best, cur;
    // lexicographic clique enumeration; first maximum found is the
    // lexicographically smallest one
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) > static_cast<int>(best.size())) best = cur;
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int u : cur)
                if (!g.adjacent(u, v)) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    if (n == 0) return {};
    rec(rec, 0);
    return best;
}

std::vector<int> exact_max_clique(const IntersectionGraph& g) {
    if (g.n() == 0) return {};
    BitGraph bg = reorder_by_degree(g);
    BnB solver(bg);
    Mask all(bg.words);
    for (int i = 0; i < bg.n; ++i) all.set(i);
    std::vector<int> r;
    solver.expand(r, all);
    return to_original(bg, solver.best);
}

CliqueResult exact_max_clique_budgeted(const IntersectionGraph& g, long long budget_ms) {
    if (g.n() == 0) return {{}, true};
    BitGraph bg = reorder_by_degree(g);
    BnB solver(bg);
    if (budget_ms > 0) {
        solver.use_deadline = true;
        solver.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(budget_ms);
    }
    Mask all(bg.words);
    for (int i = 0; i < bg.n; ++i) all.set(i);
    std::vector<int> r;
    solver.expand(r, all);
    return {to_original(bg, solver.best), !solver.aborted};
}

std::vector<int> exact_max_clique_parallel(const IntersectionGraph& g) {
    if (g.n() == 0) return {};
    BitGraph bg = reorder_by_degree(g);
    const int n = bg.n;

    // phase 1: establish the clique number; the size is the same no matter
    // how the root branches are interleaved
    std::atomic<int> shared_best{0};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int i = 0; i < n; ++i) {
        BnB solver(bg);
        solver.shared_best = &shared_best;
        Mask cand(bg.words);
        const std::uint64_t* ri = bg.row(i);
        for (int v = i + 1; v < n; ++v)
            if ((ri[v >> 6] >> (v & 63)) & 1u) cand.set(v);
        std::vector<int> r{i};
        solver.record(r);
        solver.expand(r, cand);
    }
    const int omega = shared_best.load();

    // phase 2: canonical witness, found serially with the tight bound
    BnB solver(bg);
    solver.best_size = omega - 1;
    Mask all(bg.words);
    for (int i = 0; i < n; ++i) all.set(i);
    std::vector<int> r;
    solver.expand(r, all);
    audit(static_cast<int>(solver.best.size()) == omega, "parallel clique phases disagree");
    return to_original(bg, solver.best);
}

std::vector<int> greedy_clique(const IntersectionGraph& g) {
    const int n = g.n();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        if (da != db) return da > db;
        return a < b;
    });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.adjacent(u, v)) { ok = false; break; }
        if (ok) clique.push_back(v);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

std::optional<CliquePartition> is_cobipartite(const IntersectionGraph& g,
                                              const std::vector<int>& subset) {
    const int k = static_cast<int>(subset.size());
    // 2-color the complement of the induced subgraph
    std::vector<int> color(k, -1);
    std::vector<int> stack;
    for (int s = 0; s < k; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < k; ++v) {
                if (v == u || g.adjacent(subset[u], subset[v])) continue; // complement edge iff non-adjacent
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    CliquePartition part;
    for (int i = 0; i < k; ++i)
        (color[i] == 0 ? part.first : part.second).push_back(subset[i]);
    return part;
}

namespace {

struct BipartiteComplement {
    std::vector<int> left, right;
    std::vector<std::vector<int>> adj; // left index -> right indices with complement edges

    BipartiteComplement(const IntersectionGraph& g, const CliquePartition& p)
        : left(p.first), right(p.second), adj(p.first.size()) {
        for (std::size_t i = 0; i < left.size(); ++i)
            for (std::size_t j = 0; j < right.size(); ++j)
                if (!g.adjacent(left[i], right[j])) adj[i].push_back(static_cast<int>(j));
    }
};

// Kuhn augmenting paths
struct Matching {
    std::vector<int> match_left, match_right;

    explicit Matching(const BipartiteComplement& b)
        : match_left(b.left.size(), -1), match_right(b.right.size(), -1) {
        std::vector<char> used;
        auto try_kuhn = [&](auto&& self, int u) -> bool {
            for (int v : b.adj[u]) {
                if (used[v]) continue;
                used[v] = 1;
                if (match_right[v] == -1 || self(self, match_right[v])) {
                    match_left[u] = v;
                    match_right[v] = u;
                    return true;
                }
            }
            return false;
        };
        for (std::size_t u = 0; u < b.adj.size(); ++u) {
            used.assign(b.right.size(), 0);
            try_kuhn(try_kuhn, static_cast<int>(u));
        }
    }

    int size() const {
        int s = 0;
        for (int m : match_left) s += m != -1 ? 1 : 0;
        return s;
    }
};

void validate_partition(const IntersectionGraph& g, const CliquePartition& p) {
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    auto check_side = [&](const std::vector<int>& side) {
        for (int v : side) {
            require(v >= 0 && v < g.n(), "partition vertex out of range");
            require(!seen[static_cast<std::size_t>(v)], "partition sides overlap");
            seen[static_cast<std::size_t>(v)] = 1;
        }
        for (std::size_t i = 0; i < side.size(); ++i)
            for (std::size_t j = i + 1; j < side.size(); ++j)
                require(g.adjacent(side[i], side[j]), "partition side is not a clique");
    };
    check_side(p.first);
    check_side(p.second);
}

} // namespace

int cobipartite_complement_matching_size(const IntersectionGraph& g,
                                         const CliquePartition& partition) {
    BipartiteComplement b(g, partition);
    return Matching(b).size();
}

std::vector<int> max_clique_cobipartite(const IntersectionGraph& g,
                                        const CliquePartition& partition) {
    validate_partition(g, partition);
    BipartiteComplement b(g, partition);
    Matching m(b);

    // Koenig: alternating reachability from unmatched left vertices
    std::vector<char> reach_left(b.left.size(), 0), reach_right(b.right.size(), 0);
    std::vector<int> stack;
    for (std::size_t u = 0; u < b.left.size(); ++u) {
        if (m.match_left[u] == -1) {
            reach_left[u] = 1;
            stack.push_back(static_cast<int>(u));
        }
    }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : b.adj[u]) {
            if (reach_right[v]) continue;
            reach_right[v] = 1;
            int w = m.match_right[v];
            if (w != -1 && !reach_left[w]) {
                reach_left[w] = 1;
                stack.push_back(w);
            }
        }
    }
    // minimum vertex cover = (L \ Z) + (R & Z); the clique is its complement
    std::vector<int> clique;
    for (std::size_t u = 0; u < b.left.size(); ++u)
        if (reach_left[u]) clique.push_back(b.left[u]);
    for (std::size_t v = 0; v < b.right.size(); ++v)
        if (!reach_right[v]) clique.push_back(b.right[v]);
    std::sort(clique.begin(), clique.end());
    audit(g.is_clique(clique), "Koenig extraction did not produce a clique");
    return clique;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>>
find_two_mutually_induced_odd_cycles(const IntersectionGraph& g) {
    const int n = g.n();
    guard(n <= 18, "find_two_mutually_induced_odd_cycles guard: n <= 18");
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (g.adjacent(v, u)) nbr[v] |= 1u << u;

    auto cycle_order = [&](std::uint32_t mask) -> std::vector<int> {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) vs.push_back(v);
        std::vector<int> walk{vs[0]};
        std::uint32_t left = mask & ~(1u << vs[0]);
        while (left) {
            int cur = walk.back();
            int next = -1;
            for (int v = 0; v < n; ++v)
                if ((left & (1u << v)) && g.adjacent(cur, v)) { next = v; break; }
            if (next == -1) break;
            walk.push_back(next);
            left &= ~(1u << next);
        }
        return walk;
    };

    std::vector<std::pair<std::uint32_t, std::uint32_t>> cycles; // mask, closed nbhd
    const std::uint32_t lim = 1u << n;
    for (std::uint32_t mask = 0; mask < lim; ++mask) {
        int pc = __builtin_popcount(mask);
        if (pc < 3 || pc % 2 == 0) continue;
        // induced cycle: every member has exactly 2 neighbors inside, connected
        bool ok = true;
        int first = -1;
        for (int v = 0; v < n && ok; ++v) {
            if (!(mask & (1u << v))) continue;
            if (first == -1) first = v;
            if (__builtin_popcount(nbr[v] & mask) != 2) ok = false;
        }
        if (!ok) continue;
        // connectivity by frontier expansion
        std::uint32_t comp = 1u << first;
        for (;;) {
            std::uint32_t grow = comp;
            for (int v = 0; v < n; ++v)
                if (comp & (1u << v)) grow |= nbr[v] & mask;
            if (grow == comp) break;
            comp = grow;
        }
        if (comp != mask) continue;
        std::uint32_t closed = mask;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) closed |= nbr[v];
        // check against already-collected cycles; first hit is canonical
        for (const auto& [m2, c2] : cycles) {
            if ((m2 & closed) == 0 && (mask & c2) == 0) {
                return std::make_pair(cycle_order(m2), cycle_order(mask));
            }
        }
        cycles.emplace_back(mask, closed);
        guard(cycles.size() <= 200000, "induced odd cycle enumeration exceeded cap");
    }
    return std::nullopt;
}

} // namespace geoclique
