#pragma once

#include "geoclique/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace geoclique {

// The Margulis-style 8-regular multigraph on Z_n x Z_n: every vertex (x, y)
// is joined to (x +- 2y, y), (x +- (2y+1), y), (x, y +- 2x), (x, y +- (2x+1))
// mod n. Loops and parallel edges are retained; a loop adds 2 to the degree.
struct ExpanderGraph {
    int side = 0;                                 // n
    std::vector<std::pair<int, int>> edge_multiset; // 4*n^2 entries, endpoints in [0, n^2)

    int vertex_count() const { return side * side; }
    std::vector<int> degrees() const;
    bool regular(int d) const;
};

ExpanderGraph gabber_galil_expander(int n);

// Exact edge expansion min over nonempty S with |S| <= min(max_subset,|V|/2);
// loops never cross a cut. Guarded at 25 vertices (Gray-coded subset walk).
Rat edge_expansion(const ExpanderGraph& g, int max_subset_size);

// Second-largest adjacency eigenvalue (loops contribute 2 on the diagonal so
// row sums stay 8). Lanczos with full reorthogonalization; guarded at 400
// vertices. The test suite cross-checks against a dense Jacobi eigensolver.
double second_eigenvalue(const ExpanderGraph& g);

// Same spectral routine for an arbitrary symmetric adjacency matrix; used by
// the unit tests on known spectra.
double second_eigenvalue_dense(const std::vector<std::vector<double>>& adj);

} // namespace geoclique
