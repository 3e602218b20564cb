#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace geoclique {

// Clause list over signed 1-indexed literals (DIMACS convention). With the
// nae flag set, a clause is satisfied when its literals are not all equal;
// otherwise ordinary disjunction semantics apply.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    bool nae = false;

    void validate() const;
    int max_occurrence() const;                  // literal occurrences per variable
    std::vector<int> occurrence_counts() const;  // size num_vars + 1
    bool positive() const;
    int max_clause_width() const;
};

using Assignment = std::vector<std::uint8_t>; // index 1..num_vars

bool clause_satisfied(const CnfFormula& f, const std::vector<int>& clause, const Assignment& a);
bool formula_satisfied(const CnfFormula& f, const Assignment& a);
int count_satisfied(const CnfFormula& f, const Assignment& a);

// Plain enumeration, guarded at 26 variables.
std::optional<Assignment> satisfiable_brute_force(const CnfFormula& f);

// Exact backtracking decision with unit-style propagation (for NAE clauses:
// if all assigned literals of a clause agree and one literal is left, it is
// forced). Node-budgeted so a pathological input fails loudly.
std::optional<Assignment> satisfiable_backtracking(const CnfFormula& f,
                                                   long long node_budget = 50'000'000);

std::string cnf_to_dimacs(const CnfFormula& f);
CnfFormula cnf_from_dimacs(std::istream& in); // "c nae" comment marks NAE semantics

CnfFormula random_3sat(int num_vars, int num_clauses, std::uint64_t seed);
// Random positive NAE formula with clause widths in {2,3} and at most three
// occurrences per variable.
CnfFormula random_positive_nae3_occ3(int num_vars, int num_clauses, std::uint64_t seed);

} // namespace geoclique
