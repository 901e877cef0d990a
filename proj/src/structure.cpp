#include "cpw/structure.hpp"

#include <algorithm>
#include <functional>

namespace cpw {

void validate_relation_set(const Graph& g, const VertexSet& x) {
    for (const auto& v : x) {
        g.require_vertex(v);
        if (g.is_sink(v))
            throw IdentifierError("relation set contains the sink '" + v + "'");
    }
}

VertexSet regular_vertices(const Graph& g) { return regular_vertex_set(g); }

VertexSet j_bracket(const Graph& g, const VertexSet& x, std::size_t k) {
    validate_relation_set(g, x);
    VertexSet cur = x;
    for (std::size_t step = 1; step < k; ++step) {
        VertexSet next;
        for (const auto& v : x) {
            bool all_in = true;
            for (auto ei : g.out_edges(v))
                if (!cur.count(g.edges()[ei].dst)) { all_in = false; break; }
            if (all_in) next.insert(v);
        }
        if (next == cur) break; // decreasing chain stabilized
        cur = std::move(next);
    }
    return cur;
}

VertexSet j_infinity(const Graph& g, const VertexSet& x) {
    return j_bracket(g, x, x.size() + 1);
}

ConditionLVerdict condition_L(const Graph& g, const VertexSet& x) {
    validate_relation_set(g, x);
    const VertexSet jinf = j_infinity(g, x);
    for (const ClosedPath& c : cycles_without_exit(g)) {
        bool inside = true;
        for (const auto& eid : c.path.edges)
            if (!jinf.count(g.edge(eid).src)) { inside = false; break; }
        if (inside) return ConditionLVerdict{false, c};
    }
    return ConditionLVerdict{};
}

bool condition_L_via_augmentation(const Graph& g, const VertexSet& x) {
    validate_relation_set(g, x);
    return cycles_without_exit(augment_relative(g, x)).empty();
}

namespace {

// Is there a closed walk at w that avoids v?
bool on_cycle_avoiding(const Graph& g, const std::string& w, const std::string& v) {
    VertexSet seen;
    std::function<bool(const std::string&)> dfs = [&](const std::string& at) -> bool {
        for (auto ei : g.out_edges(at)) {
            const auto& dst = g.edges()[ei].dst;
            if (dst == v) continue;
            if (dst == w) return true;
            if (seen.insert(dst).second && dfs(dst)) return true;
        }
        return false;
    };
    return dfs(w);
}

// Is v the base of exactly one simple closed path (in the sense that only
// the base may recur)?  The vertex-distinct representatives are finite; a
// single representative can still be pumped through a side cycle.
bool bases_exactly_one_simple_closed_path(const Graph& g, const std::string& v) {
    auto reps = simple_closed_paths_at(g, v);
    if (reps.size() != 1) return false;
    for (const auto& eid : reps[0].path.edges) {
        const auto& w = g.edge(eid).src;
        if (w != v && on_cycle_avoiding(g, w, v)) return false;
    }
    return true;
}

} // namespace

ConditionKVerdict condition_K(const Graph& g, const VertexSet& x) {
    validate_relation_set(g, x);
    const Graph aug = augment_relative(g, x);
    for (const auto& v : aug.vertices())
        if (bases_exactly_one_simple_closed_path(aug, v))
            return ConditionKVerdict{false, v};
    return ConditionKVerdict{};
}

bool condition_K_via_quotients(const Graph& g, const VertexSet& x,
                               std::size_t vertex_cap) {
    validate_relation_set(g, x);
    const Graph aug = augment_relative(g, x);
    for (const VertexSet& h : enumerate_hereditary_saturated(aug, vertex_cap))
        if (!cycles_without_exit(quotient_graph(aug, h)).empty())
            return false;
    return true;
}

bool is_maximal(const Graph& g, const VertexSet& x) {
    validate_relation_set(g, x);
    return x == regular_vertices(g);
}

SuperMaximalVerdict is_super_maximal(const Graph& g, const VertexSet& x,
                                     std::size_t vertex_cap) {
    validate_relation_set(g, x);
    const Graph aug = augment_relative(g, x);
    auto lattice = enumerate_hereditary_saturated(aug, vertex_cap);
    for (const VertexSet& h : lattice)
        if (!h.empty() && h.size() != aug.vertices().size())
            return SuperMaximalVerdict{false, h};
    return SuperMaximalVerdict{};
}

AnalysisReport analyze(const Graph& g, const VertexSet& x, std::size_t vertex_cap) {
    validate_relation_set(g, x);
    AnalysisReport r;
    r.condition_l = condition_L(g, x);
    r.condition_k = condition_K(g, x);
    r.maximal = is_maximal(g, x);
    r.super_maximal = is_super_maximal(g, x, vertex_cap);
    r.simple = r.condition_l.holds && r.super_maximal.holds;
    if (!r.simple) {
        if (!r.condition_l.holds && !r.super_maximal.holds)
            r.simple_reason = "condition (L) fails and not super maximal";
        else if (!r.condition_l.holds)
            r.simple_reason = "condition (L) fails";
        else
            r.simple_reason = "not super maximal";
    }
    r.ck_uniqueness = r.condition_l.holds && r.maximal;
    r.every_nonzero_ideal_contains_graded = r.condition_l.holds;
    r.all_ideals_graded = r.condition_k.holds;
    r.graded_ideals = enumerate_hereditary_saturated(augment_relative(g, x), vertex_cap);
    r.j_inf = j_infinity(g, x);
    return r;
}

} // namespace cpw
