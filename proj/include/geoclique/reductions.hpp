#pragma once

#include "geoclique/cnf.hpp"
#include "geoclique/expander.hpp"
#include "geoclique/mipa.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace geoclique {

// ---- 3-SAT-B -> NAE 4-SAT-B ------------------------------------------------
// Pads with tautology clauses d v ~d until the clause count at least doubles
// and is a perfect square, emits the clause pair {C_j v ~z_j, ~C_j v z_j}
// per clause, and ties the z variables together with an equality clause per
// expander edge. Sizes: n' = n_padded + m_padded, m' = 5 * m_padded.
struct Nae4Reduction {
    CnfFormula output;            // NAE, width <= 4
    int orig_vars = 0;            // variables of the unpadded input
    int padded_vars = 0;          // after dummy padding
    int padded_clauses = 0;       // perfect square m
    int first_z_var = 0;          // z_j = first_z_var + j - 1, j in [padded_clauses]

    Assignment forward(const Assignment& input) const;  // satisfying in -> satisfying out
    std::optional<Assignment> backward(const Assignment& output_assignment,
                                       const CnfFormula& original) const;
};

Nae4Reduction reduce_3sat_to_nae4(const CnfFormula& phi, int occurrence_bound);

// ---- NAE 4-SAT -> NAE 3-SAT ------------------------------------------------
// Every clause (padded to width 4 by literal duplication) splits into
// l1 v l2 v z and l3 v l4 v ~z. Sizes: n = N + M, m = 2M.
struct Nae3Reduction {
    CnfFormula output;
    int orig_vars = 0;
    int first_z_var = 0;

    Assignment forward(const Assignment& input, const CnfFormula& original) const;
    Assignment backward(const Assignment& output_assignment) const; // plain restriction
};

Nae3Reduction reduce_nae4_to_nae3(const CnfFormula& phi);

// ---- NAE 3-SAT-B -> Positive NAE 3-SAT-3 ------------------------------------
// Equality-clause ladder x_{i,h} v y_{i,h} (h in [B]) and y_{i,h} v x_{i,h+1}
// (h in [B-1]) per variable; occurrence h of x_i rewrites to x_{i,h}, a
// negative occurrence to y_{i,h}. Sizes: n = 2BN, m = M + (2B-1)N.
struct PositiveReduction {
    CnfFormula output;
    int orig_vars = 0;
    int ladder = 0; // B

    int x_copy(int var, int h) const { return (var - 1) * 2 * ladder + h; }
    int y_copy(int var, int h) const { return (var - 1) * 2 * ladder + ladder + h; }

    Assignment forward(const Assignment& input) const;
    Assignment backward(const Assignment& output_assignment) const; // x_i := x_{i,1}
};

PositiveReduction reduce_nae3_to_positive3occ(const CnfFormula& phi, int occurrence_bound);

// ---- Positive NAE 3-SAT-3 -> MIPA -------------------------------------------
// Variable ranges of three points, clause slots of 10 (2-clauses) or 15
// (3-clauses) points carrying intra-slot edges and one occurrence edge pair
// per literal, dummy pairs for unused occurrence points. The canonical
// placement of a satisfying assignment preserves exactly 4m + 3n edges.
enum class TwoClauseAnchor {
    MirroredHalf, // second literal's occurrence edge starts its own half (s_j + 5)
    PaperLiteral, // the written index s_j + 3, kept for the documented off-by-two probe
};

struct MipaReduction {
    MipaInstance instance;
    int formula_vars = 0;    // n of the formula
    int formula_clauses = 0; // m of the formula
    std::vector<int> interval_owner_var;   // per interval: variable id or 0 for slots
    std::vector<std::pair<int, int>> interval_clause_literal; // per interval: (clause, literal pos) or (0,0)

    // placement that pushes X_i to the assignment level and the clause /
    // dummy intervals of x_i the opposite way
    MipaPlacement canonical_placement(const Assignment& a) const;
    int preserved_target() const { return 4 * formula_clauses + 3 * formula_vars; }
};

MipaReduction reduce_pnae33_to_mipa(const CnfFormula& phi,
                                    TwoClauseAnchor anchor = TwoClauseAnchor::MirroredHalf);

// ---- full chain --------------------------------------------------------------
struct PipelineResult {
    CnfFormula input;
    Nae4Reduction stage1;
    Nae3Reduction stage2;
    PositiveReduction stage3;
    MipaReduction stage4;
    int predicted_clique_satisfiable = 0; // 5|I| + 3 nu + 4 mu
};

PipelineResult run_reduction_pipeline(const CnfFormula& threesat, int occurrence_bound);

} // namespace geoclique
