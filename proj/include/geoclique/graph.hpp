#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace geoclique {

// Simple undirected graph with dense 0..n-1 vertex ids, no self-loops.
// Labels carry provenance (e.g. which geometric object a vertex came from).
class IntersectionGraph {
public:
    IntersectionGraph() = default;
    explicit IntersectionGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {}

    int n() const { return n_; }

    bool adjacent(int u, int v) const {
        return u != v && adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
    }

    void add_edge(int u, int v) {
        if (u == v) return;
        adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
        adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
    }

    int degree(int v) const {
        int d = 0;
        for (int u = 0; u < n_; ++u) d += adjacent(v, u) ? 1 : 0;
        return d;
    }

    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> neighbors(int v) const;

    IntersectionGraph complement() const;
    IntersectionGraph induced(const std::vector<int>& verts) const; // keeps vertex order

    bool is_clique(const std::vector<int>& verts) const;

    std::vector<std::string> labels;

private:
    int n_ = 0;
    std::vector<std::uint8_t> adj_;
};

// DIMACS-like edge list: "p edge n m" header then "e u v" lines, 1-indexed.
std::string graph_to_dimacs(const IntersectionGraph& g);
IntersectionGraph graph_from_dimacs(std::istream& in);

std::string labels_to_json(const IntersectionGraph& g);
void labels_from_json(IntersectionGraph& g, const std::string& json_text);

// Erdos-Renyi-style random graph, deterministic in the seed.
IntersectionGraph random_graph(int n, double p, std::uint64_t seed);

} // namespace geoclique
