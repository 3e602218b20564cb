#include "geoclique/reductions.hpp"

#include "geoclique/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace geoclique {

namespace {

int clauses_containing_counts_ok(const CnfFormula& f, int bound) {
    std::vector<int> cnt(static_cast<std::size_t>(f.num_vars) + 1, 0);
    for (const auto& c : f.clauses) {
        std::vector<int> vars;
        for (int lit : c) vars.push_back(std::abs(lit));
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        for (int v : vars) ++cnt[static_cast<std::size_t>(v)];
    }
    int worst = 0;
    for (int v = 1; v <= f.num_vars; ++v) worst = std::max(worst, cnt[static_cast<std::size_t>(v)]);
    return worst <= bound ? 1 : 0;
}

std::vector<int> negate_clause(const std::vector<int>& c) {
    std::vector<int> out;
    out.reserve(c.size());
    for (int lit : c) out.push_back(-lit);
    return out;
}

} // namespace

Nae4Reduction reduce_3sat_to_nae4(const CnfFormula& phi, int occurrence_bound) {
    phi.validate();
    require(!phi.nae, "input must be a plain 3-SAT formula");
    require(phi.max_clause_width() <= 3, "input clause width must be at most 3");
    require(!phi.clauses.empty(), "input must have at least one clause");
    require(occurrence_bound >= 9, "occurrence bound must be at least 9");
    require(clauses_containing_counts_ok(phi, occurrence_bound) == 1,
            "a variable appears in more clauses than the occurrence bound");

    Nae4Reduction red;
    red.orig_vars = phi.num_vars;
    const int m0 = static_cast<int>(phi.clauses.size());

    // pad until the clause count at least doubles and is a perfect square
    int t = 1;
    while (t * t < 2 * m0) ++t;
    const int m = t * t;
    red.padded_clauses = m;
    red.padded_vars = phi.num_vars + (m - m0);
    red.first_z_var = red.padded_vars + 1;

    std::vector<std::vector<int>> padded = phi.clauses;
    for (int d = 0; d < m - m0; ++d) {
        int dv = phi.num_vars + d + 1;
        padded.push_back({dv, -dv});
    }

    CnfFormula& out = red.output;
    out.nae = true;
    out.num_vars = red.padded_vars + m;
    for (int j = 1; j <= m; ++j) {
        int z = red.first_z_var + j - 1;
        std::vector<int> cj = padded[static_cast<std::size_t>(j - 1)];
        std::vector<int> pos = cj;
        pos.push_back(-z);
        std::vector<int> neg = negate_clause(cj);
        neg.push_back(z);
        out.clauses.push_back(std::move(pos));
        out.clauses.push_back(std::move(neg));
    }
    ExpanderGraph h = gabber_galil_expander(t);
    for (auto [a, b] : h.edge_multiset) {
        int za = red.first_z_var + std::min(a, b);
        int zb = red.first_z_var + std::max(a, b);
        out.clauses.push_back({za, -zb});
    }
    out.validate();
    // exact size laws of the construction: one clause pair per padded clause
    // plus one clause per expander edge counted with multiplicity
    audit(out.num_vars == red.padded_vars + m, "stage 1 variable count mismatch");
    audit(static_cast<int>(out.clauses.size()) == 6 * m, "stage 1 clause count mismatch");
    return red;
}

Assignment Nae4Reduction::forward(const Assignment& input) const {
    Assignment a(static_cast<std::size_t>(output.num_vars) + 1, 0);
    for (int v = 1; v <= orig_vars && v < static_cast<int>(input.size()); ++v)
        a[static_cast<std::size_t>(v)] = input[static_cast<std::size_t>(v)];
    for (int v = orig_vars + 1; v <= padded_vars; ++v) a[static_cast<std::size_t>(v)] = 1; // dummies
    for (int j = 0; j < padded_clauses; ++j) a[static_cast<std::size_t>(first_z_var + j)] = 1;
    return a;
}

std::optional<Assignment> Nae4Reduction::backward(const Assignment& output_assignment,
                                                  const CnfFormula& original) const {
    // the z variables align through the expander clauses; the model or its
    // global flip restricts to a model of the source
    for (int flip = 0; flip < 2; ++flip) {
        Assignment a(static_cast<std::size_t>(orig_vars) + 1, 0);
        for (int v = 1; v <= orig_vars; ++v) {
            std::uint8_t bit = output_assignment[static_cast<std::size_t>(v)];
            a[static_cast<std::size_t>(v)] = flip ? (1 - bit) : bit;
        }
        if (formula_satisfied(original, a)) return a;
    }
    return std::nullopt;
}

namespace {

std::array<int, 4> pad_to_four(const std::vector<int>& clause) {
    std::array<int, 4> out{};
    for (std::size_t i = 0; i < 4; ++i)
        out[i] = i < clause.size() ? clause[i] : clause[0]; // duplicate the first literal
    return out;
}

} // namespace

Nae3Reduction reduce_nae4_to_nae3(const CnfFormula& phi) {
    phi.validate();
    require(phi.nae, "input must be a NAE formula");
    require(phi.max_clause_width() <= 4, "input clause width must be at most 4");

    Nae3Reduction red;
    red.orig_vars = phi.num_vars;
    red.first_z_var = phi.num_vars + 1;
    CnfFormula& out = red.output;
    out.nae = true;
    const int big_m = static_cast<int>(phi.clauses.size());
    out.num_vars = phi.num_vars + big_m;
    for (int j = 0; j < big_m; ++j) {
        auto c = pad_to_four(phi.clauses[static_cast<std::size_t>(j)]);
        int z = red.first_z_var + j;
        out.clauses.push_back({c[0], c[1], z});
        out.clauses.push_back({c[2], c[3], -z});
    }
    out.validate();
    audit(out.num_vars == phi.num_vars + big_m, "stage 2 variable count mismatch");
    audit(static_cast<int>(out.clauses.size()) == 2 * big_m, "stage 2 clause count mismatch");
    return red;
}

Assignment Nae3Reduction::forward(const Assignment& input, const CnfFormula& original) const {
    Assignment a(static_cast<std::size_t>(output.num_vars) + 1, 0);
    for (int v = 1; v <= orig_vars; ++v) a[static_cast<std::size_t>(v)] = input[static_cast<std::size_t>(v)];
    auto lit_val = [&](int lit) {
        std::uint8_t v = a[static_cast<std::size_t>(std::abs(lit))];
        return lit > 0 ? v : static_cast<std::uint8_t>(1 - v);
    };
    for (std::size_t j = 0; j < original.clauses.size(); ++j) {
        auto c = pad_to_four(original.clauses[j]);
        int z = first_z_var + static_cast<int>(j);
        std::uint8_t v1 = lit_val(c[0]), v2 = lit_val(c[1]);
        std::uint8_t v3 = lit_val(c[2]);
        if (v1 != v2) {
            a[static_cast<std::size_t>(z)] = v3; // ~z opposes l3, satisfying the second half
        } else if (lit_val(c[2]) != lit_val(c[3])) {
            a[static_cast<std::size_t>(z)] = 1 - v1; // z opposes l1
        } else {
            a[static_cast<std::size_t>(z)] = 1 - v1; // l1 = l2 = ~l3 = ~l4
        }
    }
    return a;
}

Assignment Nae3Reduction::backward(const Assignment& output_assignment) const {
    Assignment a(static_cast<std::size_t>(orig_vars) + 1, 0);
    for (int v = 1; v <= orig_vars; ++v) a[static_cast<std::size_t>(v)] = output_assignment[static_cast<std::size_t>(v)];
    return a;
}

PositiveReduction reduce_nae3_to_positive3occ(const CnfFormula& phi, int occurrence_bound) {
    phi.validate();
    require(phi.nae, "input must be a NAE formula");
    require(phi.max_clause_width() <= 3, "input clause width must be at most 3");
    require(occurrence_bound >= phi.max_occurrence(),
            "occurrence bound below the actual maximum occurrence");

    PositiveReduction red;
    red.orig_vars = phi.num_vars;
    red.ladder = occurrence_bound;
    const int big_n = phi.num_vars;
    const int big_m = static_cast<int>(phi.clauses.size());
    const int b = occurrence_bound;

    CnfFormula& out = red.output;
    out.nae = true;
    out.num_vars = 2 * b * big_n;
    // equality ladders first
    for (int i = 1; i <= big_n; ++i) {
        for (int h = 1; h <= b; ++h) out.clauses.push_back({red.x_copy(i, h), red.y_copy(i, h)});
        for (int h = 1; h <= b - 1; ++h) out.clauses.push_back({red.y_copy(i, h), red.x_copy(i, h + 1)});
    }
    // relabeled original clauses, one fresh copy per occurrence
    std::vector<int> occ(static_cast<std::size_t>(big_n) + 1, 0);
    for (const auto& c : phi.clauses) {
        std::vector<int> nc;
        for (int lit : c) {
            int v = std::abs(lit);
            int h = ++occ[static_cast<std::size_t>(v)];
            audit(h <= b, "occurrence counter exceeded the ladder length");
            nc.push_back(lit > 0 ? red.x_copy(v, h) : red.y_copy(v, h));
        }
        out.clauses.push_back(std::move(nc));
    }
    out.validate();
    audit(out.num_vars == 2 * b * big_n, "stage 3 variable count mismatch");
    audit(static_cast<int>(out.clauses.size()) == big_m + (2 * b - 1) * big_n,
          "stage 3 clause count mismatch");
    audit(out.positive(), "stage 3 output contains a negative literal");
    audit(out.max_occurrence() <= 3, "stage 3 output exceeds three occurrences");
    return red;
}

Assignment PositiveReduction::forward(const Assignment& input) const {
    Assignment a(static_cast<std::size_t>(output.num_vars) + 1, 0);
    for (int i = 1; i <= orig_vars; ++i) {
        std::uint8_t v = input[static_cast<std::size_t>(i)];
        for (int h = 1; h <= ladder; ++h) {
            a[static_cast<std::size_t>(x_copy(i, h))] = v;
            a[static_cast<std::size_t>(y_copy(i, h))] = 1 - v;
        }
    }
    return a;
}

Assignment PositiveReduction::backward(const Assignment& output_assignment) const {
    Assignment a(static_cast<std::size_t>(orig_vars) + 1, 0);
    for (int i = 1; i <= orig_vars; ++i)
        a[static_cast<std::size_t>(i)] = output_assignment[static_cast<std::size_t>(x_copy(i, 1))];
    return a;
}

namespace {

struct MatchBuilder {
    int points = 0;
    std::vector<std::pair<int, int>> level0_edges; // (i, j) meaning (i,0)-(j,1)

    void add_sym_pair(int p, int q) {
        // the symmetric matching pair (p,0)(q,1) and (q,0)(p,1)
        level0_edges.emplace_back(p, q);
        if (p != q) level0_edges.emplace_back(q, p);
    }
};

} // namespace

MipaReduction reduce_pnae33_to_mipa(const CnfFormula& phi, TwoClauseAnchor anchor) {
    phi.validate();
    require(phi.nae, "input must be a NAE formula");
    require(phi.positive(), "input must be positive (no negative literals)");
    require(phi.max_occurrence() <= 3, "input must have at most three occurrences per variable");
    for (const auto& c : phi.clauses)
        require(c.size() == 2 || c.size() == 3, "clause width must be 2 or 3");

    MipaReduction red;
    const int big_n = phi.num_vars;
    const int big_m = static_cast<int>(phi.clauses.size());
    red.formula_vars = big_n;
    red.formula_clauses = big_m;

    MatchBuilder mb;
    auto& inst = red.instance;
    // variable ranges occupy points 1 .. 3N
    int next = 3 * big_n + 1;
    for (int i = 1; i <= big_n; ++i) {
        inst.intervals.emplace_back(3 * (i - 1) + 1, 3 * (i - 1) + 3);
        red.interval_owner_var.push_back(i);
        red.interval_clause_literal.emplace_back(0, 0);
    }

    std::vector<int> occ(static_cast<std::size_t>(big_n) + 1, 0);
    for (int j = 1; j <= big_m; ++j) {
        const auto& clause = phi.clauses[static_cast<std::size_t>(j - 1)];
        const int width = static_cast<int>(clause.size());
        const int s = next;
        const int slot = width == 2 ? 10 : 15;
        next += slot;
        for (int p = 0; p < width; ++p) {
            inst.intervals.emplace_back(s + 5 * p, s + 5 * p + 4);
            red.interval_owner_var.push_back(clause[static_cast<std::size_t>(p)]);
            red.interval_clause_literal.emplace_back(j, p + 1);
        }
        if (width == 2) {
            // intra-slot edges (s+h, d) -- (s+5+h, 1-d) for h in [4]
            for (int h = 1; h <= 4; ++h) mb.add_sym_pair(s + h, s + 5 + h);
            // occurrence edges: first literal anchored at s, second at its own
            // half (or at the written s+3 when probing the literal index)
            int anchors[2] = {s, anchor == TwoClauseAnchor::MirroredHalf ? s + 5 : s + 3};
            for (int p = 0; p < 2; ++p) {
                int v = clause[static_cast<std::size_t>(p)];
                int h = ++occ[static_cast<std::size_t>(v)];
                mb.add_sym_pair(anchors[p], 3 * (v - 1) + h);
            }
        } else {
            // occurrence edges from the first point of each third
            for (int p = 0; p < 3; ++p) {
                int v = clause[static_cast<std::size_t>(p)];
                int h = ++occ[static_cast<std::size_t>(v)];
                mb.add_sym_pair(s + 5 * p, 3 * (v - 1) + h);
            }
            // four edges per pair of thirds, two starting on each line, taking
            // the smallest indices not yet used inside the slot
            int cursor[3] = {s + 1, s + 6, s + 11};
            for (int a = 0; a < 3; ++a) {
                for (int b2 = a + 1; b2 < 3; ++b2) {
                    for (int rep = 0; rep < 2; ++rep) {
                        mb.add_sym_pair(cursor[a], cursor[b2]);
                        ++cursor[a];
                        ++cursor[b2];
                    }
                }
            }
        }
    }
    // dummy gadgets for the unused occurrence points of every variable
    for (int i = 1; i <= big_n; ++i) {
        for (int o = occ[static_cast<std::size_t>(i)] + 1; o <= 3; ++o) {
            int d = next++;
            mb.add_sym_pair(3 * (i - 1) + o, d);
            inst.intervals.emplace_back(d, d);
            red.interval_owner_var.push_back(i);
            red.interval_clause_literal.emplace_back(0, 0);
        }
    }

    inst.n = next - 1;
    inst.sigma.assign(static_cast<std::size_t>(inst.n), 0);
    std::vector<char> hit0(static_cast<std::size_t>(inst.n) + 1, 0), hit1(hit0);
    for (auto [i, j] : mb.level0_edges) {
        audit(!hit0[static_cast<std::size_t>(i)] && !hit1[static_cast<std::size_t>(j)],
              "matching is not a partial function");
        hit0[static_cast<std::size_t>(i)] = hit1[static_cast<std::size_t>(j)] = 1;
        inst.sigma[static_cast<std::size_t>(i - 1)] = j;
    }
    for (int p = 1; p <= inst.n; ++p)
        audit(hit0[static_cast<std::size_t>(p)] && hit1[static_cast<std::size_t>(p)],
              "matching is not perfect");
    inst.validate();
    audit(inst.symmetric(), "matching is not symmetric");
    audit(inst.intervals_disjoint(), "gadget intervals overlap");
    audit(inst.max_interval_length() <= 5, "gadget interval longer than five points");
    audit(inst.n <= 49 * std::max(1, big_n), "matching larger than the stated bound");
    return red;
}

MipaPlacement MipaReduction::canonical_placement(const Assignment& a) const {
    MipaPlacement p(instance.intervals.size(), 0);
    for (std::size_t k = 0; k < instance.intervals.size(); ++k) {
        int var = interval_owner_var[k];
        std::uint8_t val = a[static_cast<std::size_t>(var)];
        bool is_variable_range = k < static_cast<std::size_t>(formula_vars);
        p[k] = is_variable_range ? val : static_cast<std::uint8_t>(1 - val);
    }
    return p;
}

PipelineResult run_reduction_pipeline(const CnfFormula& threesat, int occurrence_bound) {
    PipelineResult res;
    res.input = threesat;
    res.stage1 = reduce_3sat_to_nae4(threesat, occurrence_bound);
    res.stage2 = reduce_nae4_to_nae3(res.stage1.output);
    int b3 = std::max(occurrence_bound, res.stage2.output.max_occurrence());
    res.stage3 = reduce_nae3_to_positive3occ(res.stage2.output, b3);
    res.stage4 = reduce_pnae33_to_mipa(res.stage3.output);
    res.predicted_clique_satisfiable =
        5 * static_cast<int>(res.stage4.instance.intervals.size()) +
        3 * res.stage3.output.num_vars + 4 * static_cast<int>(res.stage3.output.clauses.size());
    return res;
}

} // namespace geoclique
