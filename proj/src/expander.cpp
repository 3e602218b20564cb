#include "geoclique/expander.hpp"

#include "geoclique/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace geoclique {

std::vector<int> ExpanderGraph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(vertex_count()), 0);
    for (auto [a, b] : edge_multiset) {
        deg[static_cast<std::size_t>(a)] += 1;
        deg[static_cast<std::size_t>(b)] += 1; // loops count twice this way
    }
    return deg;
}

bool ExpanderGraph::regular(int d) const {
    auto deg = degrees();
    return std::all_of(deg.begin(), deg.end(), [d](int x) { return x == d; });
}

ExpanderGraph gabber_galil_expander(int n) {
    require(n >= 1, "expander side must be positive");
    ExpanderGraph g;
    g.side = n;
    auto id = [n](long long x, long long y) {
        x %= n; if (x < 0) x += n;
        y %= n; if (y < 0) y += n;
        return static_cast<int>(x * n + y);
    };
    // Each of the eight generating rules pairs off with its inverse, so
    // emitting only the four "+" rules per vertex yields the whole edge
    // multiset exactly once: 4*n^2 undirected edges counting multiplicity.
    for (long long x = 0; x < n; ++x) {
        for (long long y = 0; y < n; ++y) {
            int v = id(x, y);
            auto add = [&](long long xx, long long yy) {
                int u = id(xx, yy);
                g.edge_multiset.emplace_back(std::min(u, v), std::max(u, v));
            };
            add(x + 2 * y, y);
            add(x + 2 * y + 1, y);
            add(x, y + 2 * x);
            add(x, y + 2 * x + 1);
        }
    }
    audit(g.edge_multiset.size() == static_cast<std::size_t>(4) * n * n,
          "expander edge count mismatch");
    audit(g.regular(8), "expander is not 8-regular");
    return g;
}

Rat edge_expansion(const ExpanderGraph& g, int max_subset_size) {
    const int nv = g.vertex_count();
    guard(nv <= 25, "edge_expansion guard: at most 25 vertices");
    require(max_subset_size >= 1, "subset size cap must be positive");
    const int cap = std::min(max_subset_size, nv / 2);
    require(cap >= 1, "graph too small for a nontrivial cut");

    // non-loop incidence per vertex, for O(deg) cut updates along a Gray walk
    std::vector<std::vector<std::pair<int, int>>> inc(static_cast<std::size_t>(nv));
    for (std::size_t e = 0; e < g.edge_multiset.size(); ++e) {
        auto [a, b] = g.edge_multiset[e];
        if (a == b) continue;
        inc[static_cast<std::size_t>(a)].emplace_back(static_cast<int>(e), b);
        inc[static_cast<std::size_t>(b)].emplace_back(static_cast<int>(e), a);
    }

    std::vector<char> in_s(static_cast<std::size_t>(nv), 0);
    long long cut = 0;
    int size = 0;
    bool have = false;
    Rat best;
    const std::uint64_t lim = 1ULL << nv;
    for (std::uint64_t code = 1; code < lim; ++code) {
        int v = __builtin_ctzll(code);
        bool entering = !in_s[static_cast<std::size_t>(v)];
        for (auto [e, other] : inc[static_cast<std::size_t>(v)]) {
            (void)e;
            bool other_in = in_s[static_cast<std::size_t>(other)] != 0;
            if (entering)
                cut += other_in ? -1 : 1;
            else
                cut += other_in ? 1 : -1;
        }
        in_s[static_cast<std::size_t>(v)] ^= 1;
        size += entering ? 1 : -1;
        if (size >= 1 && size <= cap) {
            Rat ratio(Int(cut), Int(size));
            if (!have || ratio < best) {
                best = ratio;
                have = true;
            }
        }
    }
    audit(have, "no admissible subset found");
    return best;
}

namespace {

std::vector<std::vector<double>> adjacency_matrix(const ExpanderGraph& g) {
    const int nv = g.vertex_count();
    std::vector<std::vector<double>> a(static_cast<std::size_t>(nv),
                                       std::vector<double>(static_cast<std::size_t>(nv), 0.0));
    for (auto [u, v] : g.edge_multiset) {
        if (u == v)
            a[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)] += 2.0;
        else {
            a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] += 1.0;
            a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] += 1.0;
        }
    }
    return a;
}

// Lanczos with full reorthogonalization, then Sturm bisection on the
// tridiagonal matrix. n <= 400 keeps the full-reorth cost trivial.
std::vector<double> lanczos_eigenvalues(const std::vector<std::vector<double>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<double>> basis;
    std::vector<double> alpha, beta;

    std::vector<double> v(static_cast<std::size_t>(n));
    // deterministic start vector with components in every coordinate
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = 1.0 + 0.37 * std::sin(1.0 + i);
    double norm = 0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;

    std::vector<double> w(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        basis.push_back(v);
        for (int i = 0; i < n; ++i) {
            double s = 0;
            for (int j = 0; j < n; ++j) s += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
            w[static_cast<std::size_t>(i)] = s;
        }
        double al = 0;
        for (int i = 0; i < n; ++i) al += w[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
        alpha.push_back(al);
        // full reorthogonalization keeps the basis numerically orthogonal
        for (const auto& b : basis) {
            double proj = 0;
            for (int i = 0; i < n; ++i) proj += w[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
            for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] -= proj * b[static_cast<std::size_t>(i)];
        }
        double bn = 0;
        for (double x : w) bn += x * x;
        bn = std::sqrt(bn);
        if (bn < 1e-13 || step == n - 1) break;
        beta.push_back(bn);
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / bn;
    }

    const int m = static_cast<int>(alpha.size());
    // Sturm count: number of eigenvalues of the tridiagonal below x
    auto count_below = [&](double x) {
        int cnt = 0;
        double d = alpha[0] - x;
        if (d < 0) ++cnt;
        for (int i = 1; i < m; ++i) {
            double b2 = beta[static_cast<std::size_t>(i - 1)] * beta[static_cast<std::size_t>(i - 1)];
            d = alpha[static_cast<std::size_t>(i)] - x - b2 / (d == 0 ? 1e-300 : d);
            if (d < 0) ++cnt;
        }
        return cnt;
    };
    double lo = alpha[0], hi = alpha[0];
    for (int i = 0; i < m; ++i) {
        double slack = (i > 0 ? std::fabs(beta[static_cast<std::size_t>(i - 1)]) : 0.0) +
                       (i + 1 < m ? std::fabs(beta[static_cast<std::size_t>(i)]) : 0.0);
        lo = std::min(lo, alpha[static_cast<std::size_t>(i)] - slack);
        hi = std::max(hi, alpha[static_cast<std::size_t>(i)] + slack);
    }
    std::vector<double> eig(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        double a0 = lo, b0 = hi;
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (a0 + b0);
            if (count_below(mid) <= k)
                a0 = mid;
            else
                b0 = mid;
        }
        eig[static_cast<std::size_t>(k)] = 0.5 * (a0 + b0);
    }
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

} // namespace

double second_eigenvalue_dense(const std::vector<std::vector<double>>& adj) {
    guard(adj.size() <= 400, "second_eigenvalue guard: at most 400 vertices");
    require(adj.size() >= 2, "need at least two vertices");
    auto eig = lanczos_eigenvalues(adj);
    // Lanczos may merge numerically repeated eigenvalues; the Krylov space
    // still contains the second-largest distinct value, which is what the
    // spectral bound is about. Repeated-eigenvalue multiplicities are
    // resolved by the dense oracle in the tests.
    if (eig.size() < 2) return eig.empty() ? 0.0 : eig[0];
    return eig[1];
}

double second_eigenvalue(const ExpanderGraph& g) {
    guard(g.vertex_count() <= 400, "second_eigenvalue guard: at most 400 vertices");
    if (g.vertex_count() == 1) return 0.0;
    return second_eigenvalue_dense(adjacency_matrix(g));
}

} // namespace geoclique
