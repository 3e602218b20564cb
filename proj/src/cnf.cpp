#include "geoclique/cnf.hpp"

#include "geoclique/errors.hpp"
#include "geoclique/rng.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <sstream>

namespace geoclique {

void CnfFormula::validate() const {
    require(num_vars >= 0, "negative variable count");
    for (const auto& c : clauses) {
        require(!c.empty(), "empty clause");
        for (int lit : c) {
            int v = std::abs(lit);
            require(v >= 1 && v <= num_vars, "literal out of range");
        }
    }
}

std::vector<int> CnfFormula::occurrence_counts() const {
    std::vector<int> occ(static_cast<std::size_t>(num_vars) + 1, 0);
    for (const auto& c : clauses)
        for (int lit : c) ++occ[static_cast<std::size_t>(std::abs(lit))];
    return occ;
}

int CnfFormula::max_occurrence() const {
    auto occ = occurrence_counts();
    return occ.empty() ? 0 : *std::max_element(occ.begin(), occ.end());
}

bool CnfFormula::positive() const {
    for (const auto& c : clauses)
        for (int lit : c)
            if (lit < 0) return false;
    return true;
}

int CnfFormula::max_clause_width() const {
    std::size_t w = 0;
    for (const auto& c : clauses) w = std::max(w, c.size());
    return static_cast<int>(w);
}

bool clause_satisfied(const CnfFormula& f, const std::vector<int>& clause, const Assignment& a) {
    bool any_true = false, any_false = false;
    for (int lit : clause) {
        bool val = a[static_cast<std::size_t>(std::abs(lit))] != 0;
        if (lit < 0) val = !val;
        (val ? any_true : any_false) = true;
    }
    return f.nae ? (any_true && any_false) : any_true;
}

bool formula_satisfied(const CnfFormula& f, const Assignment& a) {
    for (const auto& c : f.clauses)
        if (!clause_satisfied(f, c, a)) return false;
    return true;
}

int count_satisfied(const CnfFormula& f, const Assignment& a) {
    int s = 0;
    for (const auto& c : f.clauses) s += clause_satisfied(f, c, a) ? 1 : 0;
    return s;
}

std::optional<Assignment> satisfiable_brute_force(const CnfFormula& f) {
    f.validate();
    guard(f.num_vars <= 26, "satisfiable_brute_force guard: <= 26 variables");
    Assignment a(static_cast<std::size_t>(f.num_vars) + 1, 0);
    const std::uint64_t lim = 1ULL << f.num_vars;
    for (std::uint64_t mask = 0; mask < lim; ++mask) {
        for (int v = 1; v <= f.num_vars; ++v) a[static_cast<std::size_t>(v)] = (mask >> (v - 1)) & 1u;
        if (formula_satisfied(f, a)) return a;
    }
    return std::nullopt;
}

namespace {

// Backtracking with propagation over a three-valued assignment.
struct Dpll {
    const CnfFormula& f;
    std::vector<int> val; // -1 unknown, 0, 1
    std::vector<std::vector<int>> watch; // var -> clause indices containing it
    std::vector<int> trail;
    long long nodes = 0;
    long long budget;

    Dpll(const CnfFormula& formula, long long b) : f(formula), budget(b) {
        val.assign(static_cast<std::size_t>(f.num_vars) + 1, -1);
        watch.resize(static_cast<std::size_t>(f.num_vars) + 1);
        for (std::size_t ci = 0; ci < f.clauses.size(); ++ci)
            for (int lit : f.clauses[ci]) watch[static_cast<std::size_t>(std::abs(lit))].push_back(static_cast<int>(ci));
        for (auto& w : watch) {
            std::sort(w.begin(), w.end());
            w.erase(std::unique(w.begin(), w.end()), w.end());
        }
    }

    int lit_value(int lit) const { // -1 unknown
        int v = val[static_cast<std::size_t>(std::abs(lit))];
        if (v < 0) return -1;
        return lit > 0 ? v : 1 - v;
    }

    // Returns false on conflict; pushes implied assignments onto the queue.
    bool check_clause(int ci, std::vector<int>& queue) {
        const auto& c = f.clauses[static_cast<std::size_t>(ci)];
        if (!f.nae) {
            int unassigned = 0, last = 0;
            for (int lit : c) {
                int lv = lit_value(lit);
                if (lv == 1) return true;
                if (lv == -1) {
                    ++unassigned;
                    last = lit;
                }
            }
            if (unassigned == 0) return false;
            if (unassigned == 1) queue.push_back(last); // unit: make it true
            return true;
        }
        // NAE: conflict when all literals evaluate equal and none is free;
        // if exactly one is free and the rest agree, the free one is forced
        bool any_true = false, any_false = false;
        int free_count = 0, free_lit = 0;
        for (int lit : c) {
            int lv = lit_value(lit);
            if (lv == -1) {
                ++free_count;
                free_lit = lit;
            } else {
                (lv == 1 ? any_true : any_false) = true;
            }
        }
        if (any_true && any_false) return true;
        if (free_count == 0) return false; // all equal
        if (free_count == 1 && (any_true || any_false)) {
            // force the lone literal to the opposite value
            queue.push_back(any_true ? -free_lit : free_lit);
        }
        return true;
    }

    bool assign(int lit, std::vector<int>& queue) {
        int v = std::abs(lit);
        int want = lit > 0 ? 1 : 0;
        if (val[static_cast<std::size_t>(v)] != -1) return val[static_cast<std::size_t>(v)] == want;
        val[static_cast<std::size_t>(v)] = want;
        trail.push_back(v);
        for (int ci : watch[static_cast<std::size_t>(v)])
            if (!check_clause(ci, queue)) return false;
        return true;
    }

    bool propagate(int lit) {
        std::vector<int> queue{lit};
        while (!queue.empty()) {
            int l = queue.back();
            queue.pop_back();
            if (!assign(l, queue)) return false;
        }
        return true;
    }

    void rewind(std::size_t mark) {
        while (trail.size() > mark) {
            val[static_cast<std::size_t>(trail.back())] = -1;
            trail.pop_back();
        }
    }

    int pick_branch_var() const {
        for (int v = 1; v <= f.num_vars; ++v)
            if (val[static_cast<std::size_t>(v)] == -1) return v;
        return 0;
    }

    bool search() {
        guard(++nodes <= budget, "backtracking SAT budget exhausted");
        int v = pick_branch_var();
        if (v == 0) return true;
        for (int phase : {1, 0}) {
            std::size_t mark = trail.size();
            if (propagate(phase ? v : -v)) {
                if (search()) return true;
            }
            rewind(mark);
        }
        return false;
    }
};

} // namespace

std::optional<Assignment> satisfiable_backtracking(const CnfFormula& f, long long node_budget) {
    f.validate();
    if (f.nae) {
        // a NAE clause with a single distinct literal can never be satisfied
        for (const auto& c : f.clauses) {
            bool all_same = true;
            for (int lit : c) all_same = all_same && lit == c[0];
            if (all_same) return std::nullopt;
        }
    }
    Dpll solver(f, node_budget);
    // seed propagation with plain unit clauses
    std::vector<int> queue;
    for (std::size_t ci = 0; ci < f.clauses.size(); ++ci)
        if (!solver.check_clause(static_cast<int>(ci), queue)) return std::nullopt;
    for (int lit : queue)
        if (!solver.propagate(lit)) return std::nullopt;
    if (!solver.search()) return std::nullopt;
    Assignment a(static_cast<std::size_t>(f.num_vars) + 1, 0);
    for (int v = 1; v <= f.num_vars; ++v) a[static_cast<std::size_t>(v)] = solver.val[static_cast<std::size_t>(v)] == 1 ? 1 : 0;
    audit(formula_satisfied(f, a), "backtracking produced a non-model");
    return a;
}

std::string cnf_to_dimacs(const CnfFormula& f) {
    std::ostringstream os;
    if (f.nae) os << "c nae\n";
    os << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) {
        for (int lit : c) os << lit << ' ';
        os << "0\n";
    }
    return os.str();
}

CnfFormula cnf_from_dimacs(std::istream& in) {
    CnfFormula f;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == 'c') {
            std::istringstream ls(line);
            std::string c, tag;
            ls >> c >> tag;
            if (tag == "nae") f.nae = true;
            continue;
        }
        if (line[0] == 'p') {
            std::istringstream ls(line);
            std::string p, fmt;
            std::size_t m = 0;
            ls >> p >> fmt >> f.num_vars >> m;
            require(fmt == "cnf", "bad DIMACS header");
            have_header = true;
            continue;
        }
        std::istringstream ls(line);
        std::vector<int> clause;
        int lit = 0;
        while (ls >> lit) {
            if (lit == 0) break;
            clause.push_back(lit);
        }
        if (!clause.empty()) f.clauses.push_back(std::move(clause));
    }
    require(have_header, "missing DIMACS header");
    f.validate();
    return f;
}

CnfFormula random_3sat(int num_vars, int num_clauses, std::uint64_t seed) {
    require(num_vars >= 1, "need at least one variable");
    CnfFormula f;
    f.num_vars = num_vars;
    SplitMix rng(seed);
    for (int j = 0; j < num_clauses; ++j) {
        int width = 1 + static_cast<int>(rng.below(3));
        std::vector<int> clause;
        for (int t = 0; t < width; ++t) {
            int v = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(num_vars)));
            clause.push_back(rng.coin() ? v : -v);
        }
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

CnfFormula random_positive_nae3_occ3(int num_vars, int num_clauses, std::uint64_t seed) {
    require(num_vars >= 3, "need at least three variables");
    CnfFormula f;
    f.nae = true;
    f.num_vars = num_vars;
    SplitMix rng(seed);
    std::vector<int> occ(static_cast<std::size_t>(num_vars) + 1, 0);
    for (int j = 0; j < num_clauses; ++j) {
        int width = rng.coin() ? 3 : 2;
        std::vector<int> avail;
        for (int v = 1; v <= num_vars; ++v)
            if (occ[static_cast<std::size_t>(v)] < 3) avail.push_back(v);
        if (static_cast<int>(avail.size()) < width) break;
        std::vector<int> clause;
        for (int t = 0; t < width; ++t) {
            std::size_t pick = rng.below(avail.size());
            clause.push_back(avail[pick]);
            avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        for (int v : clause) ++occ[static_cast<std::size_t>(v)];
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

} // namespace geoclique
